// Cross-module consistency checks: computed kernels against classical closed
// forms and against structural decompositions relating different algebras.

#include <doctest.h>

#include "curvspace/curvature.hpp"

using namespace curvspace;

namespace {

/// Re-expresses a curvature tensor over a subalgebra in the coordinates of a
/// larger algebra containing it (column map via membership coordinates).
RVec embed_curv_coeffs(const LieRep& sub, const LieRep& big, const RVec& flat) {
  const std::size_t np = pair_count(sub.n);
  std::vector<RVec> col_map;  // big-coordinates of each sub basis matrix
  col_map.reserve(sub.dim());
  for (const RMat& b : sub.basis) col_map.push_back(big.coords_of(b));
  RVec out(np * big.dim(), Rat(0));
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t a = 0; a < sub.dim(); ++a) {
      const Rat& c = flat[p * sub.dim() + a];
      if (is_zero(c)) continue;
      for (std::size_t b = 0; b < big.dim(); ++b)
        if (!is_zero(col_map[a][b])) out[p * big.dim() + b] += c * col_map[a][b];
    }
  return out;
}

Subspace embed_curv_subspace(const LieRep& sub, const LieRep& big, const Subspace& s) {
  const std::size_t amb = pair_count(sub.n) * big.dim();
  RMat cols(amb, s.dim());
  for (std::size_t c = 0; c < s.dim(); ++c)
    cols.set_col(c, embed_curv_coeffs(sub, big, s.basis.col(c)));
  return Subspace::from_columns(amb, cols);
}

}  // namespace

TEST_CASE("R(so(n)) matches the classical count n^2(n^2-1)/12 with its split") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    RSpaceResult rs = rspace(build("so:" + std::to_string(n)));
    CHECK(rs.full.dim() == n * n * (n * n - 1) / 12);
    if (n >= 3) {
      // Weyl part, scalar part, trace-free Ricci part
      CHECK(rs.r0.dim() == n * n * (n * n - 1) / 12 - n * (n + 1) / 2);
      CHECK(rs.r1.dim() == 1);
      CHECK(rs.rprime.dim() == n * (n + 1) / 2 - 1);
    }
  }
}

TEST_CASE("P(so(n)) matches the closed count n(n-1)(n+1)/3") {
  for (std::size_t n = 2; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(pspace(build("so:" + std::to_string(n))).full.dim() ==
          n * (n - 1) * (n + 1) / 3);
  }
}

TEST_CASE("R(u(2)) splits as scalar + remainder + R(su(2))") {
  LieRep u2 = build("u:2");
  LieRep su2 = build("su:2");
  RSpaceResult ru = rspace(u2);
  RSpaceResult rsu = rspace(su2);
  CHECK(ru.full.dim() == 1 + ru.rprime.dim() + rsu.full.dim());
  // the su-valued tensors embed exactly onto the Ricci-flat part
  Subspace embedded = embed_curv_subspace(su2, u2, rsu.full);
  CHECK(span_equal(embedded, ru.r0));
}

TEST_CASE("R(sp(2)+sp(1)) splits as scalar + R(sp(2))") {
  LieRep big = build("sp:2+sp1");
  LieRep sp2 = build("sp:2");
  RSpaceResult rb = rspace(big);
  RSpaceResult rs = rspace(sp2);
  CHECK(rb.full.dim() == 1 + rs.full.dim());
  Subspace embedded = embed_curv_subspace(sp2, big, rs.full);
  CHECK(span_equal(embedded, rb.r0));
}

TEST_CASE("tau theorem on u(3), the next unitary size") {
  LieRep u3 = build("u:3");
  PSpaceResult ps = pspace(u3);
  RSpaceResult rs = rspace(u3);
  CHECK(span_equal(tau_span(u3, rs.full), ps.full));
  CHECK(span_equal(tau_span(u3, rs.r0), ps.p0));
  CHECK(span_equal(tau_span(u3, rs.r1), ps.p1));
}

TEST_CASE("su(2) and sp(1) give conjugate but distinct chirality blocks") {
  LieRep su2 = build("su:2");
  LieRep sp1 = build("sp:1");
  // same dimensions everywhere, different subalgebras of so(4)
  CHECK(su2.dim() == sp1.dim());
  CHECK(pspace(su2).full.dim() == pspace(sp1).full.dim());
  CHECK(rspace(su2).full.dim() == rspace(sp1).full.dim());
  bool same_span = true;
  for (const RMat& b : sp1.basis) same_span = same_span && su2.in_span(b);
  CHECK_FALSE(same_span);
}
