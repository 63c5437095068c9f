#pragma once

#include <vector>

#include "curvspace/lierep.hpp"

namespace curvspace {

/// Element of Hom(V, h) over the pair basis {e_i (x) B_a}. Row i holds the
/// h-coordinates of P(e_i). Membership in the cyclic-identity kernel is a
/// predicate, not a type invariant.
struct PMap {
  const LieRep* rep = nullptr;
  RMat coeffs;  // n x d

  PMap() = default;
  PMap(const LieRep& r, RMat c) : rep(&r), coeffs(std::move(c)) {}

  static PMap zero(const LieRep& r) { return PMap(r, RMat(r.n, r.dim())); }

  /// P(e_i) as an n x n matrix.
  RMat value_on_basis(std::size_t i) const;
  /// P(x) for an arbitrary vector.
  RMat value(const RVec& x) const;

  RVec flat() const { return coeffs.vec(); }
  static PMap from_flat(const LieRep& r, const RVec& v);
};

/// Element of Lambda^2 V* (x) h over the basis {(e_i ^ e_j) (x) B_a}, i < j.
struct CurvTensor {
  const LieRep* rep = nullptr;
  RMat coeffs;  // pair_count(n) x d

  CurvTensor() = default;
  CurvTensor(const LieRep& r, RMat c) : rep(&r), coeffs(std::move(c)) {}

  static CurvTensor zero(const LieRep& r) {
    return CurvTensor(r, RMat(pair_count(r.n), r.dim()));
  }

  /// h-coordinates of R(e_i, e_j) for arbitrary i != j (signed lookup).
  RVec value_coords(std::size_t i, std::size_t j) const;
  /// R(e_i, e_j) as a matrix.
  RMat value(std::size_t i, std::size_t j) const;

  RVec flat() const { return coeffs.vec(); }
  static CurvTensor from_flat(const LieRep& r, const RVec& v);
};

struct PSpaceResult {
  Subspace full;  // subspace of R^(n*d)
  Subspace p0;    // kernel of the Ricci contraction inside full
  Subspace p1;    // orthogonal complement of p0 in full
};

struct RSpaceResult {
  Subspace full;    // first-Bianchi kernel in R^(pairs*d)
  Subspace r0;      // Ricci-flat part
  Subspace r1;      // h-invariant part (dim 0 or 1)
  Subspace rprime;  // orthogonal complement of r0 + r1 in full
};

/// Cyclic-identity defect over sorted triples i<j<k:
/// (P(e_i)e_j, e_k) + (P(e_j)e_k, e_i) + (P(e_k)e_i, e_j).
RVec cyclic_defect(const PMap& p);

/// Same defect for an unconstrained matrix-valued map (values[i] = W(e_i));
/// only meaningful when the values are metric-skew.
RVec cyclic_defect(const LieRep& rep, const std::vector<RMat>& values);

/// Constraint matrix of the cyclic identity: triple rows x (i,a) columns.
template <class T>
Mat<T> cyclic_matrix(std::size_t n, const std::vector<Mat<T>>& basis, const Mat<T>& gram) {
  const std::size_t d = basis.size();
  std::vector<Mat<T>> w;  // gram * B_a
  w.reserve(d);
  for (const auto& b : basis) w.push_back(gram * b);
  const auto triples = triple_list(n);
  Mat<T> m(triples.size(), n * d);
  for (std::size_t r = 0; r < triples.size(); ++r) {
    const auto [i, j, k] = std::tuple{triples[r][0], triples[r][1], triples[r][2]};
    for (std::size_t a = 0; a < d; ++a) {
      m(r, i * d + a) += w[a](k, j);
      m(r, j * d + a) += w[a](i, k);
      m(r, k * d + a) += w[a](j, i);
    }
  }
  return m;
}

/// Ricci contraction of P: sum_i P(e~_i) e~_i over an orthonormal frame,
/// written gram-independently as sum_ij (G^-1)_ij P(e_i) e_j.
RVec ricci_tilde(const PMap& p);
RVec ricci_tilde(const LieRep& rep, const std::vector<RMat>& values);
/// Its matrix: n rows x (n*d) columns.
RMat ricci_tilde_matrix(const LieRep& rep);

/// Invariant positive pairing on Hom(V, h): kron(G^-1, K), K_ab = -tr(B_a B_b).
RMat pairing_gram_p(const LieRep& rep);
/// Invariant positive pairing on Lambda^2 V* (x) h: kron(Lambda^2(G^-1), K).
RMat pairing_gram_r(const LieRep& rep);

PSpaceResult pspace(const LieRep& rep);

/// First-Bianchi constraint matrix: n rows per sorted triple.
RMat bianchi_matrix(const LieRep& rep);
/// Ricci rows (entries i <= j) of a curvature tensor, as a linear map.
RMat ricci_matrix(const LieRep& rep);

/// Ric(R)(u,v) = tr(z -> R(u,z)v) on the basis, as an n x n matrix.
RMat ricci(const CurvTensor& r);

/// Pair symmetry (R(u,v)z, w) = (R(z,w)u, v) checked exhaustively.
bool pair_symmetry_holds(const CurvTensor& r);

RSpaceResult rspace(const LieRep& rep);

/// Natural action of basis element xi_m on curvature coefficients:
/// (xi.R)(u,v) = [xi, R(u,v)] - R(xi u, v) - R(u, xi v).
RVec curv_action(const LieRep& rep, const std::vector<std::vector<RVec>>& f,
                 std::size_t m, const RVec& coeffs);

/// Action on Hom(V,h) coefficients: (xi.P)(y) = [xi, P(y)] - P(xi y).
RVec p_action(const LieRep& rep, const std::vector<std::vector<RVec>>& f,
              std::size_t m, const RVec& coeffs);

/// The map y -> R(y, x) as a PMap.
PMap tau_slice(const CurvTensor& r, const RVec& x);

/// Span of {R(., e_i)} over basis tensors R of `curv_sub` inside R^(n*d).
Subspace tau_span(const LieRep& rep, const Subspace& curv_sub);

/// tau_span over the full curvature space (recomputes rspace).
Subspace tau_image(const LieRep& rep);

/// Span of the h-coordinate slices {R(e_i, e_j)} of basis tensors, in R^d.
Subspace berger_span(const LieRep& rep, const Subspace& curv_sub);
Subspace berger_span(const LieRep& rep);

/// Span of {P(e_i)} over basis elements of `p_sub`, in R^d.
Subspace pspan(const LieRep& rep, const Subspace& p_sub);
Subspace pspan(const LieRep& rep);

/// Weyl-type part W = P + 1/(n-1) RicciTilde(P) ^ . as matrix values on the
/// basis; lands in the cyclic kernel of so(V) with vanishing Ricci trace.
std::vector<RMat> weyl_part(const PMap& p);

/// First prolongation {S : V -> h, S(x)y = S(y)x} constraint matrix.
template <class T>
Mat<T> prolongation_matrix(std::size_t n, const std::vector<Mat<T>>& basis) {
  const std::size_t d = basis.size();
  const auto pairs = pair_list(n);
  Mat<T> m(pairs.size() * n, n * d);
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const auto [i, j] = pairs[r];
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t t = 0; t < n; ++t) {
        m(r * n + t, i * d + a) += basis[a](t, j);
        m(r * n + t, j * d + a) -= basis[a](t, i);
      }
  }
  return m;
}

/// First prolongation as a subspace of R^(n*d).
Subspace prolongation(const LieRep& rep);

// --- explicit elements (closed-form constructors) ---

/// P(y) = x ^ y over so(n).
PMap p_so_p1(const LieRep& so_rep, const RVec& x);
/// P(y) = Sy ^ x over so(n); requires S symmetric, tr S = 0, Sx = 0.
PMap p_so_p0(const LieRep& so_rep, const RMat& s, const RVec& x);
/// P(y) = Sy ^ x + y ^ Sx over so(n); requires S symmetric.
PMap p_so_rs(const LieRep& so_rep, const RMat& s, const RVec& x);
/// P(y) = -1/2 (Jx,y) J + 1/4 (x ^ y + Jx ^ Jy) over u(m).
PMap p_u_p1(const LieRep& u_rep, const RVec& x);
/// P(y) = -1/2 sum_a g(J_a x, y) J_a + 1/4 (x ^ y + sum_a J_a x ^ J_a y).
PMap p_spsp1_p1(const LieRep& rep, const RVec& x);
/// P(y) = [x, y] over an adjoint representation; x in h-coordinates.
PMap p_adjoint(const LieRep& adj_rep, const RVec& x);

/// P = S - S1 from complex data S(e_a) = s_legs[a] (m x m complex matrices
/// with S(e_a)e_b = S(e_b)e_a); lands in Hom(R^2m, u(m)).
PMap p_s_minus_s1(const LieRep& u_rep, const std::vector<CMat>& s_legs);

/// Complex trace of a realified complex matrix; defined when X commutes with J.
CRat complex_trace(const RMat& x);

/// (RicciTilde(P), x) = -Im tr_C P(Jx) for all basis x; the u(m) trace identity.
bool u_trace_identity_holds(const LieRep& u_rep, const PMap& p);

}  // namespace curvspace
