#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "curvspace/indexing.hpp"
#include "curvspace/linalg.hpp"

namespace curvspace {

enum class RepFamily {
  So,
  U,
  Su,
  Sp,
  SpSp1,
  G2,
  Spin7,
  Spin9,
  AdjointSo,
  AdjointSu,
  SoxSo,
};

/// Identifies one of the supported representations. Canonical string forms:
/// "so:5", "u:3", "su:2", "sp:2", "sp:2+sp1", "g2", "spin7", "spin9",
/// "adjoint-so:4", "adjoint-su:3", "soxso:3,3".
struct RepSpec {
  RepFamily family = RepFamily::So;
  int p = 0;
  int q = 0;

  static RepSpec parse(const std::string& s);  // throws std::invalid_argument
  std::string str() const;

  friend bool operator==(const RepSpec&, const RepSpec&) = default;
};

/// A representation given by explicit basis matrices acting on V = R^n,
/// metric-skew with respect to the invariant symmetric form `gram`.
struct LieRep {
  RepSpec spec{};
  std::size_t n = 0;
  std::vector<RMat> basis;
  RMat gram;
  RMat gram_inv;
  std::shared_ptr<const SpanSolver<Rat>> basis_span;  // over vec'd matrices

  std::size_t dim() const { return basis.size(); }

  bool in_span(const RMat& m) const { return basis_span->contains(m.vec()); }

  /// Coordinates of m over the basis; throws if m is outside the span.
  RVec coords_of(const RMat& m) const;
};

/// Assembles the derived fields; every hand-made rep must go through here.
LieRep make_rep(RepSpec spec, std::size_t n, std::vector<RMat> basis, RMat gram);

LieRep build(const RepSpec& spec);
inline LieRep build(const std::string& spec) { return build(RepSpec::parse(spec)); }

/// True iff [B_i, B_j] stays in span(basis) for all i <= j.
bool closure_check(const LieRep& rep);

/// True iff every basis matrix satisfies B^T gram + gram B = 0.
bool metric_skew_check(const LieRep& rep);

/// {X in gl(n) : X B_i = B_i X for all i}, as a subspace of R^(n^2)
/// (row-major vec). dim 1 / 2 / 4 separates real / complex / quaternionic type.
Subspace commutant(const LieRep& rep);

/// f[m][a] = coordinates of [B_m, B_a] over the basis.
std::vector<std::vector<RVec>> structure_constants(const LieRep& rep);

/// Matrix of u wedge v under the convention (u^v)(z) = (u,z)v - (v,z)u,
/// with (x,y) = x^T gram y.
RMat wedge_mat(const RVec& u, const RVec& v, const RMat& gram);

/// Coefficients of u^v over the so(n) basis {e_i ^ e_j : i < j}.
RVec wedge_coeffs(const RVec& u, const RVec& v);

/// The fixed complex structure J(x, y) = (-y, x) on R^(2m).
RMat complex_structure_j(std::size_t m);

/// The fixed quaternionic triple on R^(4m), block-diagonal 4x4, J3 = J1*J2.
std::array<RMat, 3> quaternionic_triple(std::size_t m);

/// The nine pairwise anticommuting symmetric involutions on R^16 used for
/// spin(9), built as fourfold tensor monomials with entries in {-1,0,1}.
std::array<RMat, 9> spin9_gammas();

/// Alternating k-form with rational coefficients on sorted index tuples.
class AltForm {
 public:
  AltForm(std::size_t arity, std::size_t n) : arity_(arity), n_(n) {}

  void set(std::vector<std::size_t> idx, Rat c);  // idx strictly increasing
  /// Signed evaluation at an arbitrary index tuple (0 on repeated indices).
  Rat eval(std::vector<std::size_t> idx) const;

  std::size_t arity() const { return arity_; }
  std::size_t ambient() const { return n_; }

 private:
  std::size_t arity_, n_;
  std::map<std::vector<std::size_t>, Rat> terms_;
};

AltForm g2_three_form();      // associative 3-form on R^7
AltForm spin7_four_form();    // Cayley 4-form on R^8

}  // namespace curvspace
