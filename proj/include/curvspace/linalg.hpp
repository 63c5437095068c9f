#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "curvspace/matrix.hpp"

namespace curvspace {

template <class T>
struct RrefResult {
  Mat<T> m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column indices, ascending
};

/// Reduced row echelon form with deterministic pivoting: leftmost nonzero
/// column, first nonzero row, pivots normalized to 1.
template <class T>
RrefResult<T> rref(Mat<T> m) {
  RrefResult<T> res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    if (!is_one(m(r, c))) {
      const T piv = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(r, j) /= piv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const T f = m(i, c);
      if (is_zero(f)) continue;
      m(i, c) = T(0);
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.m = std::move(m);
  return res;
}

template <class T>
std::size_t rank_of(const Mat<T>& m) {
  return rref(m).rank;
}

/// Columns span {v : Mv = 0}; free variables in ascending column order, each
/// basis vector has a 1 in its free slot.
template <class T>
Mat<T> kernel_basis_mat(const Mat<T>& m) {
  RrefResult<T> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  const std::size_t k = m.cols() - r.rank;
  Mat<T> ker(m.cols(), k);
  std::size_t kc = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ker(f, kc) = T(1);
    for (std::size_t i = 0; i < r.rank; ++i)
      ker(r.pivots[i], kc) = -r.m(i, f);
    ++kc;
  }
  return ker;
}

/// Echelon span with coefficient tracking: holds a set of generator vectors
/// and answers membership / coordinates questions against their span.
template <class T>
class SpanSolver {
 public:
  explicit SpanSolver(std::size_t ambient) : ambient_(ambient) {}

  SpanSolver(std::size_t ambient, const std::vector<Vec<T>>& generators)
      : ambient_(ambient) {
    for (const auto& g : generators) add(g);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  /// Adds a generator; returns true if it enlarged the span.
  bool add(const Vec<T>& g) {
    if (g.size() != ambient_) throw std::invalid_argument("SpanSolver: length mismatch");
    Vec<T> v = g;
    Vec<T> c(ngen_ + 1, T(0));
    c[ngen_] = T(1);
    for (auto& row : coeffs_) row.push_back(T(0));
    ++ngen_;
    reduce(v, c, /*expr_mode=*/false);
    std::size_t p = 0;
    while (p < ambient_ && is_zero(v[p])) ++p;
    if (p == ambient_) return false;
    const T piv = v[p];
    if (!is_one(piv)) {
      for (T& x : v)
        if (!is_zero(x)) x /= piv;
      for (T& x : c)
        if (!is_zero(x)) x /= piv;
    }
    // back-eliminate the new pivot column from existing rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T f = rows_[i][p];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_zero(v[j])) rows_[i][j] -= f * v[j];
      for (std::size_t j = 0; j < c.size(); ++j)
        if (!is_zero(c[j])) coeffs_[i][j] -= f * c[j];
    }
    // keep rows ordered by pivot column
    std::size_t pos = 0;
    while (pos < pivot_cols_.size() && pivot_cols_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    coeffs_.insert(coeffs_.begin() + pos, std::move(c));
    pivot_cols_.insert(pivot_cols_.begin() + pos, p);
    return true;
  }

  bool contains(const Vec<T>& v) const {
    Vec<T> r = v;
    Vec<T> c(ngen_, T(0));
    reduce(r, c, true);
    return is_zero_vec(r);
  }

  /// Coordinates of v over the original generator list, if v is in the span.
  std::optional<Vec<T>> coords(const Vec<T>& v) const {
    Vec<T> r = v;
    Vec<T> c(ngen_, T(0));
    reduce(r, c, true);
    if (!is_zero_vec(r)) return std::nullopt;
    return c;
  }

 private:
  /// expr_mode: c accumulates the expression of the eliminated part (coords).
  /// Otherwise c is kept equal to the generator combination producing v (add).
  void reduce(Vec<T>& v, Vec<T>& c, bool expr_mode) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T f = v[pivot_cols_[i]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!is_zero(rows_[i][j])) v[j] -= f * rows_[i][j];
      for (std::size_t j = 0; j < coeffs_[i].size() && j < c.size(); ++j)
        if (!is_zero(coeffs_[i][j])) {
          if (expr_mode)
            c[j] += f * coeffs_[i][j];
          else
            c[j] -= f * coeffs_[i][j];
        }
    }
  }

  std::size_t ambient_;
  std::size_t ngen_ = 0;
  std::vector<Vec<T>> rows_;            // echelon vectors
  std::vector<Vec<T>> coeffs_;          // row = combination over original generators
  std::vector<std::size_t> pivot_cols_;
};

/// Subspace of a coordinate space, held as a canonical column basis
/// (transpose of the RREF of the transposed generators — unique per span).
struct Subspace {
  std::size_t ambient = 0;
  RMat basis;  // ambient x dim, linearly independent columns

  Subspace() = default;
  Subspace(std::size_t amb, RMat b) : ambient(amb), basis(std::move(b)) {}

  std::size_t dim() const { return basis.cols(); }

  static Subspace zero(std::size_t ambient) { return {ambient, RMat(ambient, 0)}; }

  static Subspace full(std::size_t ambient) {
    return {ambient, RMat::identity(ambient)};
  }

  /// Canonicalizes arbitrary generating columns into the unique RREF basis.
  static Subspace from_columns(std::size_t ambient, const RMat& cols) {
    if (cols.rows() != ambient) throw std::invalid_argument("Subspace: ambient mismatch");
    RrefResult<Rat> r = rref(cols.transposed());
    RMat b(ambient, r.rank);
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < ambient; ++j) b(j, i) = r.m(i, j);
    return {ambient, std::move(b)};
  }

  static Subspace from_vectors(std::size_t ambient, const std::vector<RVec>& vs) {
    RMat cols(ambient, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j) cols.set_col(j, vs[j]);
    return from_columns(ambient, cols);
  }

  bool contains(const RVec& v) const {
    return rank_of(hcat(basis, column(v))) == dim();
  }

  bool contains(const Subspace& other) const {
    if (other.ambient != ambient) return false;
    return rank_of(hcat(basis, other.basis)) == dim();
  }

 private:
  static RMat column(const RVec& v) {
    RMat m(v.size(), 1);
    m.set_col(0, v);
    return m;
  }
};

inline bool span_equal(const Subspace& a, const Subspace& b) {
  return a.contains(b) && b.contains(a);
}

inline Subspace kernel_subspace(const RMat& m) {
  return Subspace::from_columns(m.cols(), kernel_basis_mat(m));
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
  return Subspace::from_columns(a.ambient, hcat(a.basis, b.basis));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("intersect: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient);
  RMat ker = kernel_basis_mat(hcat(a.basis, b.basis));
  RMat xs(a.dim(), ker.cols());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) xs(i, j) = ker(i, j);
  return Subspace::from_columns(a.ambient, a.basis * xs);
}

template <class T>
Mat<T> inverse(const Mat<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = a.rows();
  RrefResult<T> r = rref(hcat(a, Mat<T>::identity(n)));
  if (r.rank != n) throw std::invalid_argument("inverse: singular matrix");
  Mat<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
  return inv;
}

/// Exact LDL^T positivity test (Sylvester).
inline bool is_positive_definite(RMat a) {
  if (a.rows() != a.cols() || !a.is_symmetric()) return false;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j <= i; ++j)
        if (!is_zero(a(k, j))) a(i, j) -= f * a(k, j);
    }
    for (std::size_t j = k + 1; j < n; ++j) a(j, k) = a(k, j) = Rat(0);
    // mirror the updated lower triangle
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < i; ++j) a(j, i) = a(i, j);
  }
  return true;
}

/// Orthogonal complement of A inside `inside` w.r.t. a positive-definite
/// symmetric form. Requires A to be contained in `inside`.
inline Subspace orth_complement(const Subspace& a, const Subspace& inside,
                                const RMat& gram) {
  if (a.ambient != inside.ambient)
    throw std::invalid_argument("orth_complement: ambient mismatch");
  if (gram.rows() != a.ambient || gram.cols() != a.ambient || !gram.is_symmetric())
    throw std::invalid_argument("orth_complement: gram must be symmetric ambient-sized");
  if (!inside.contains(a))
    throw std::invalid_argument("orth_complement: A not contained in `inside`");
  const RMat gi = gram * inside.basis;
  if (!is_positive_definite(inside.basis.transposed() * gi))
    throw std::invalid_argument("orth_complement: gram not positive-definite on `inside`");
  if (a.dim() == 0) return inside;
  const RMat c = a.basis.transposed() * gi;  // dim(A) x dim(inside)
  RMat k = kernel_basis_mat(c);
  return Subspace::from_columns(a.ambient, inside.basis * k);
}

}  // namespace curvspace
