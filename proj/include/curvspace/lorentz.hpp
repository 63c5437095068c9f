#pragma once

#include <string>
#include <vector>

#include "curvspace/curvature.hpp"

namespace curvspace {

/// Witt frame p, e_1..e_n, q on R^(1,n+1): index 0 = p, 1..n = e_i, n+1 = q;
/// g(p,q) = 1, g(e_i,e_i) = 1, all other products zero.
struct WittFrame {
  std::size_t n = 0;
  RMat gram;

  static WittFrame make(std::size_t n);

  std::size_t dim() const { return n + 2; }
  RVec p() const { return basis_vec<Rat>(n + 2, 0); }
  RVec q() const { return basis_vec<Rat>(n + 2, n + 1); }
  RVec e(std::size_t i) const { return basis_vec<Rat>(n + 2, i + 1); }  // i in 0..n-1

  /// Pads an R^n vector into the e-block of the frame.
  RVec embed_vec(const RVec& v) const;
  /// Embeds an so(n) matrix into the middle block.
  RMat embed_so(const RMat& a) const;
};

/// sim(n) = (R + so(n)) |x R^n as metric-skew matrices in the Witt frame.
/// Basis order: grading element q^p, the so(n) block, then p^e_i.
struct SimAlgebra {
  std::size_t n = 0;
  std::vector<RMat> basis;
};

SimAlgebra sim_basis(std::size_t n);

/// Input triple for the curvature assembly; construction validates the
/// invariants and names the first failed one.
struct LorentzCurv {
  const LieRep* rep = nullptr;
  CurvTensor r0;
  PMap p;
  RMat t;
};

LorentzCurv make_lorentz_data(const LieRep& rep, CurvTensor r0, PMap p, RMat t);

/// Assembled curvature value: matrices R(x_a, x_b) on the Witt frame basis.
struct LorentzTensor {
  WittFrame frame;
  std::vector<RMat> values;  // per sorted pair of frame indices

  RMat value(std::size_t a, std::size_t b) const;  // signed lookup
};

/// R(p,.) = 0, R(u,v) = R0(u,v) + p^(P(u)v - P(v)u), R(u,q) = P(u) - p^T(u).
LorentzTensor assemble(const WittFrame& frame, const LorentzCurv& data);

/// First Bianchi identity over every sorted frame triple.
bool full_bianchi_holds(const LorentzTensor& t);
/// (R(u,v)z, w) = (R(z,w)u, v) for the Lorentzian form.
bool pair_symmetry_holds(const LorentzTensor& t);

/// Ric(a,b) = tr(z -> R(a,z)b) as an (n+2)x(n+2) matrix.
RMat ricci_full(const LorentzTensor& t);

/// Whether Ric = lambda * g exactly.
bool einstein_check(const LorentzTensor& t, const Rat& lambda);

/// Matrix span of h |x (p ^ R^n) inside R^((n+2)^2).
Subspace holonomy_algebra_span(const WittFrame& frame, const LieRep& rep);

/// True iff every value R(a,b) lies in the given matrix span.
bool holonomy_containment(const LorentzTensor& t, const Subspace& alg);

/// The space of all maps Lambda^2 R^(n+2) -> h |x (p ^ R^n) with R(p,.) = 0
/// satisfying the first Bianchi identity, in (pair, algebra) coordinates.
Subspace assembly_space(const WittFrame& frame, const LieRep& rep);

/// Coordinates of an assembled tensor in the same (pair, algebra) layout;
/// throws if some value escapes the algebra.
RVec assembly_coords(const LorentzTensor& t, const WittFrame& frame, const LieRep& rep);

/// JSON input: {"algebra": "<spec>", "R0": [[..]], "P": [[..]], "T": [[..]]},
/// entries as exact strings "p/q" (plain integers also accepted).
struct AssembleInput {
  RepSpec spec;
  RMat r0;  // pair_count(n) x d
  RMat p;   // n x d
  RMat t;   // n x n
};

AssembleInput parse_assemble_input(const std::string& json_text);

}  // namespace curvspace
