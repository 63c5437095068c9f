#pragma once

#include <memory>
#include <string>
#include <vector>

#include "curvspace/linalg.hpp"

namespace curvspace {

enum class ComplexCase { SpLambda2, SoSym2Even, SoSym2Odd, Sl8Lambda4 };

/// One of the complexified modules: sp(2n,C) on the omega-traceless part of
/// Lambda^2 C^2n, so(k,C) on the g-traceless part of Sym^2 C^k (k = 2m or
/// 2m+1), or sl(8,C) on Lambda^4 C^8. Quotients are realized as traceless
/// subspaces; module elements live in ambient tensor coordinates.
struct ComplexRep {
  ComplexCase kind{};
  int param = 0;        // n for sp(2n), m for the so cases, unused for sl8
  std::size_t defn = 0; // dimension of the defining space
  std::size_t ambient = 0;
  std::size_t dim_v = 0;
  std::vector<CMat> h_defining;   // basis acting on C^defn
  CMat gram_defining;             // omega / g on the defining space
  CMat gram_ambient;              // induced bilinear form on the tensor space
  CMat v_basis;                   // ambient x dim_v
  std::vector<CMat> h_module;     // restricted action on V
  CMat gram_v;
  std::shared_ptr<const SpanSolver<CRat>> h_span;  // defining matrices, vec'd
  std::shared_ptr<const SpanSolver<CRat>> v_span;  // module subspace

  std::size_t dim_h() const { return h_defining.size(); }

  /// Paper label -> 0-based index into the defining basis: +i -> e_i,
  /// -i -> e_{-i}, 0 -> e_0 (odd orthogonal case only).
  std::size_t label_index(int label) const;

  /// Ambient coordinates of e_a ^ e_b (Lambda^2) or e_a . e_b (Sym^2).
  CVec pair_elem(int label_a, int label_b) const;
  /// Ambient coordinates of e_a ^ e_b ^ e_c ^ e_d (Lambda^4 case).
  CVec quad_elem(int la, int lb, int lc, int ld) const;

  /// Module bilinear form on ambient coordinate vectors.
  CRat form(const CVec& a, const CVec& b) const;

  /// Induced action of an arbitrary defining-space matrix on ambient coords.
  CVec act_ambient(const CMat& m, const CVec& v) const;

  /// Restricted module matrix of an arbitrary defining-space matrix.
  CMat module_matrix(const CMat& m) const;
};

ComplexCase complex_case_parse(const std::string& token);  // "sp", "so-even", ...
std::string complex_case_str(ComplexCase kind);

/// param: n >= 3 for SpLambda2, m >= 2 for the so cases, ignored for sl8.
ComplexRep build_complex(ComplexCase kind, int param = 0);

/// Closed-form highest vector as (module element, h element) legs plus its
/// coefficient grid over (v_basis, h_defining).
struct HighestVector {
  std::vector<std::pair<CVec, CMat>> legs;
  CMat grid;  // dim_v x dim_h
};

HighestVector highest_vector(const ComplexRep& rep);

/// (phi(x)y, z) + (phi(y)z, x) + (phi(z)x, y), contracted with the module form.
CRat obstruction_value(const ComplexRep& rep, const HighestVector& phi,
                       const CVec& x, const CVec& y, const CVec& z);

/// Evaluates the standard obstruction at the fixed test triple of the case.
CRat obstruction_at_paper_triple(const ComplexRep& rep);

/// Diagonal Cartan elements act on the vector by a single scalar.
bool is_weight_vector(const ComplexRep& rep, const HighestVector& phi);

/// [rho(A), rho(B)] = rho([A, B]) for all basis pairs of the restricted action.
bool module_homomorphism_check(const ComplexRep& rep);

/// B^T gram_v + gram_v B = 0 for every restricted basis matrix.
bool module_metric_skew_check(const ComplexRep& rep);

/// Standard symplectic basis of sp(2m, C) on C^(2m).
std::vector<CMat> sp_standard_basis(std::size_t m);

/// Cyclic-identity constraint of Hom(C^2m, sp(2m,C)) taken w.r.t. omega;
/// rows over multisets i <= j <= k (the defect is fully symmetric here).
CMat sp_standard_cyclic_matrix(std::size_t m);

}  // namespace curvspace
