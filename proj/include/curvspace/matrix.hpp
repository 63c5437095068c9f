#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvspace/rational.hpp"

namespace curvspace {

template <class T>
using Vec = std::vector<T>;

/// Dense row-major matrix over an exact scalar (Rat or CRat).
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), e_(r * c, T(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero_mat() const {
    for (const T& x : e_)
      if (!is_zero(x)) return false;
    return true;
  }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  Mat& operator*=(const T& s) {
    for (T& x : e_) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const T& s) { return a *= s; }
  friend Mat operator*(const T& s, Mat a) { return a *= s; }
  Mat operator-() const {
    Mat m = *this;
    for (T& x : m.e_) x = -x;
    return m;
  }

  /// Matrix product; skips zero entries of the left factor, which matters for
  /// the sparse structured matrices this project works with.
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat*: shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!is_zero(bkj)) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  Vec<T> apply(const Vec<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat::apply: length mismatch");
    Vec<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& x = (*this)(i, j);
        if (!is_zero(x)) r[i] += x * v[j];
      }
    return r;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  Vec<T> col(std::size_t j) const {
    Vec<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<T> row(std::size_t i) const {
    Vec<T> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  void set_col(std::size_t j, const Vec<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }
  void set_row(std::size_t i, const Vec<T>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  /// Row-major flattening, the fixed vec() convention project-wide.
  Vec<T> vec() const { return e_; }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

using RMat = Mat<Rat>;
using CMat = Mat<CRat>;
using RVec = Vec<Rat>;
using CVec = Vec<CRat>;

template <class T>
Mat<T> hcat(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  Mat<T> m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

template <class T>
Mat<T> vcat(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat: col mismatch");
  Mat<T> m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

template <class T>
Mat<T> bracket(const Mat<T>& a, const Mat<T>& b) {
  return a * b - b * a;
}

/// A + iB  ->  [[A, -B], [B, A]], the standard realification.
inline RMat realify(const CMat& m) {
  RMat r(2 * m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r(i, j) = m(i, j).re;
      r(i, m.cols() + j) = -m(i, j).im;
      r(m.rows() + i, j) = m(i, j).im;
      r(m.rows() + i, m.cols() + j) = m(i, j).re;
    }
  return r;
}

inline CMat complexify(const RMat& m) {
  CMat c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = CRat(m(i, j));
  return c;
}

template <class T>
Vec<T> operator+(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <class T>
Vec<T> operator-(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <class T>
Vec<T> operator*(const T& s, Vec<T> a) {
  for (T& x : a) x *= s;
  return a;
}

template <class T>
bool is_zero_vec(const Vec<T>& v) {
  for (const T& x : v)
    if (!is_zero(x)) return false;
  return true;
}

/// Plain coordinate dot product (no form).
template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Bilinear pairing x^T G y.
template <class T>
T form_dot(const Mat<T>& g, const Vec<T>& x, const Vec<T>& y) {
  return dot(x, g.apply(y));
}

template <class T>
Vec<T> basis_vec(std::size_t n, std::size_t i) {
  Vec<T> v(n, T(0));
  v[i] = T(1);
  return v;
}

}  // namespace curvspace
