#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace curvspace {

/// Exact rational scalar. GMP keeps the canonical form (gcd 1, positive
/// denominator) as long as values are produced through arithmetic operators.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Rat& x) { return x == 1; }

/// mpq_class(p, q) does not canonicalize; every fraction built from raw
/// numerator/denominator pairs must go through here.
inline Rat make_rat(long num, long den) {
  Rat x(num, den);
  x.canonicalize();
  return x;
}

/// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on bad input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat x;
  if (x.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (sgn(x.get_den()) == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  x.canonicalize();
  return x;
}

inline std::string rat_str(const Rat& x) { return x.get_str(); }

/// Gaussian rational re + im*i. Used for the complexified constructions.
struct CRat {
  Rat re;
  Rat im;

  CRat() : re(0), im(0) {}
  CRat(int v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  CRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static CRat i() { return CRat(Rat(0), Rat(1)); }

  CRat conj() const { return CRat(re, -im); }
  Rat norm2() const { return re * re + im * im; }

  CRat operator-() const { return CRat(-re, -im); }

  CRat& operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRat& operator-=(const CRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  CRat& operator*=(const CRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  CRat& operator/=(const CRat& o) {
    Rat n2 = o.norm2();
    if (is_zero(n2)) throw std::domain_error("division by zero CRat");
    Rat r = (re * o.re + im * o.im) / n2;
    im = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    return *this;
  }

  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

inline bool is_zero(const CRat& x) { return is_zero(x.re) && is_zero(x.im); }
inline bool is_one(const CRat& x) { return is_one(x.re) && is_zero(x.im); }

inline std::string rat_str(const CRat& x) {
  if (is_zero(x.im)) return x.re.get_str();
  return x.re.get_str() + (sgn(x.im) < 0 ? "" : "+") + x.im.get_str() + "i";
}

}  // namespace curvspace
