#include <doctest.h>

#include "curvspace/lorentz.hpp"
#include "curvspace/testutil.hpp"

using namespace curvspace;

namespace {

LorentzCurv rand_lorentz_data(const LieRep& rep, const RSpaceResult& rs,
                        const PSpaceResult& ps, TestRng& rng) {
  RVec r0(rs.full.ambient, Rat(0));
  for (std::size_t c = 0; c < rs.full.dim(); ++c) {
    const Rat w = rng.rat();
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] += w * rs.full.basis(i, c);
  }
  RVec pf(ps.full.ambient, Rat(0));
  for (std::size_t c = 0; c < ps.full.dim(); ++c) {
    const Rat w = rng.rat();
    for (std::size_t i = 0; i < pf.size(); ++i) pf[i] += w * ps.full.basis(i, c);
  }
  RMat t(rep.n, rep.n);
  for (std::size_t i = 0; i < rep.n; ++i)
    for (std::size_t j = i; j < rep.n; ++j) t(i, j) = t(j, i) = rng.rat();
  return make_lorentz_data(rep, CurvTensor::from_flat(rep, r0), PMap::from_flat(rep, pf), t);
}

}  // namespace

TEST_CASE("witt frame gram has the stated products") {
  WittFrame f = WittFrame::make(3);
  CHECK(form_dot(f.gram, f.p(), f.q()) == Rat(1));
  CHECK(form_dot(f.gram, f.p(), f.p()) == Rat(0));
  CHECK(form_dot(f.gram, f.q(), f.q()) == Rat(0));
  CHECK(form_dot(f.gram, f.e(0), f.e(0)) == Rat(1));
  CHECK(form_dot(f.gram, f.e(0), f.q()) == Rat(0));
}

TEST_CASE("sim algebra: dimensions, closure, line preservation, skewness") {
  for (std::size_t n : {1u, 3u, 4u}) {
    CAPTURE(n);
    SimAlgebra s = sim_basis(n);
    CHECK(s.basis.size() == 1 + n * (n - 1) / 2 + n);
    WittFrame f = WittFrame::make(n);
    SpanSolver<Rat> span((n + 2) * (n + 2));
    for (const RMat& b : s.basis) CHECK(span.add(b.vec()));
    for (const RMat& b : s.basis) {
      // metric-skew and preserves the isotropic line R p
      CHECK((b.transposed() * f.gram + f.gram * b).is_zero_mat());
      RVec bp = b.apply(f.p());
      for (std::size_t i = 1; i < n + 2; ++i) CHECK(is_zero(bp[i]));
    }
    for (std::size_t i = 0; i < s.basis.size(); ++i)
      for (std::size_t j = i + 1; j < s.basis.size(); ++j)
        CHECK(span.contains(bracket(s.basis[i], s.basis[j]).vec()));
  }
}

TEST_CASE("zero data assembles to the zero tensor with zero ricci") {
  LieRep so2 = build("so:2");
  WittFrame f = WittFrame::make(2);
  LorentzCurv d = make_lorentz_data(so2, CurvTensor::zero(so2), PMap::zero(so2),
                                    RMat(2, 2));
  LorentzTensor t = assemble(f, d);
  for (const RMat& v : t.values) CHECK(v.is_zero_mat());
  CHECK(ricci_full(t).is_zero_mat());
  CHECK(einstein_check(t, Rat(0)));
  CHECK_FALSE(einstein_check(t, Rat(1)));  // Ric(p,q) = 0 but g(p,q) = 1
}

TEST_CASE("T = identity: only R(u,q) = -p^u survives, Ric(q,q) = n") {
  LieRep so2 = build("so:2");
  const std::size_t n = 2;
  WittFrame f = WittFrame::make(n);
  LorentzCurv d = make_lorentz_data(so2, CurvTensor::zero(so2), PMap::zero(so2),
                                    RMat::identity(n));
  LorentzTensor t = assemble(f, d);
  for (auto [a, b] : pair_list(n + 2)) {
    const RMat v = t.value(a, b);
    if (a >= 1 && a <= n && b == n + 1) {
      RMat expect = wedge_mat(f.p(), f.e(a - 1), f.gram);
      expect *= Rat(-1);
      CHECK(v == expect);
    } else {
      CHECK(v.is_zero_mat());
    }
  }
  RMat ric = ricci_full(t);
  CHECK(ric(n + 1, n + 1) == Rat(n));
  ric(n + 1, n + 1) = 0;
  CHECK(ric.is_zero_mat());
}

TEST_CASE("P = e1 ^ . with h = so(3): Ric(e1, q) = 1 - n") {
  LieRep so3 = build("so:3");
  WittFrame f = WittFrame::make(3);
  PMap p = p_so_p1(so3, basis_vec<Rat>(3, 0));
  LorentzCurv d = make_lorentz_data(so3, CurvTensor::zero(so3), p, RMat(3, 3));
  LorentzTensor t = assemble(f, d);
  RMat ric = ricci_full(t);
  CHECK(ric(1, 4) == Rat(-2));
  CHECK(ric(4, 1) == Rat(-2));
  // matches g(e1, RicciTilde(P))
  CHECK(ricci_tilde(p)[0] == Rat(-2));
  CHECK(full_bianchi_holds(t));
  CHECK(pair_symmetry_holds(t));
}

TEST_CASE("random so(2) and so(3) assemblies satisfy all identities") {
  TestRng rng(2025);
  for (const char* s : {"so:2", "so:3"}) {
    CAPTURE(s);
    LieRep rep = build(s);
    WittFrame f = WittFrame::make(rep.n);
    RSpaceResult rs = rspace(rep);
    PSpaceResult ps = pspace(rep);
    Subspace alg = holonomy_algebra_span(f, rep);
    for (int trial = 0; trial < 5; ++trial) {
      LorentzCurv d = rand_lorentz_data(rep, rs, ps, rng);
      LorentzTensor t = assemble(f, d);
      CHECK(full_bianchi_holds(t));
      CHECK(pair_symmetry_holds(t));
      CHECK(holonomy_containment(t, alg));
      // the four Ricci identities
      RMat ric = ricci_full(t);
      const std::size_t n = rep.n;
      for (std::size_t b = 0; b < n + 2; ++b) {
        CHECK(is_zero(ric(0, b)));
        CHECK(is_zero(ric(b, 0)));
      }
      RMat ric0 = ricci(d.r0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(ric(i + 1, j + 1) == ric0(i, j));
      const RVec rt = ricci_tilde(d.p);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(ric(i + 1, n + 1) == rt[i]);
        CHECK(ric(n + 1, i + 1) == rt[i]);
      }
      CHECK(ric(n + 1, n + 1) == d.t.trace());
      // Einstein forces lambda = 0
      CHECK_FALSE(einstein_check(t, Rat(1)));
      CHECK_FALSE(einstein_check(t, make_rat(-3, 7)));
      if (einstein_check(t, Rat(0))) CHECK(ric.is_zero_mat());
    }
  }
}

TEST_CASE("corrupted values leave the holonomy algebra") {
  LieRep so3 = build("so:3");
  WittFrame f = WittFrame::make(3);
  TestRng rng(7);
  RSpaceResult rs = rspace(so3);
  PSpaceResult ps = pspace(so3);
  LorentzCurv d = rand_lorentz_data(so3, rs, ps, rng);
  LorentzTensor t = assemble(f, d);
  Subspace alg = holonomy_algebra_span(f, so3);
  CHECK(holonomy_containment(t, alg));
  // inject a q ^ e_1 component into R(e_1, q)
  t.values[pair_index(5, 1, 4)] += wedge_mat(f.q(), f.e(0), f.gram);
  CHECK_FALSE(holonomy_containment(t, alg));
}

TEST_CASE("construction rejects invalid data naming the failed identity") {
  LieRep so3 = build("so:3");
  RMat asym(3, 3);
  asym(0, 1) = 1;
  CHECK_THROWS_WITH_AS(
      make_lorentz_data(so3, CurvTensor::zero(so3), PMap::zero(so3), asym),
      "T not symmetric", std::invalid_argument);

  PMap badp = PMap::zero(so3);
  badp.coeffs(0, pair_index(3, 1, 2)) = 1;
  CHECK_THROWS_WITH_AS(
      make_lorentz_data(so3, CurvTensor::zero(so3), badp, RMat(3, 3)),
      "P fails the cyclic identity", std::invalid_argument);

  CurvTensor badr = CurvTensor::zero(so3);
  badr.coeffs(pair_index(3, 0, 1), pair_index(3, 0, 2)) = 1;
  CHECK_THROWS_WITH_AS(
      make_lorentz_data(so3, badr, PMap::zero(so3), RMat(3, 3)),
      "R0 fails the first Bianchi identity", std::invalid_argument);
}

TEST_CASE("assembly space dimension equals dim R + dim P + n(n+1)/2") {
  for (const char* s : {"so:2", "so:3"}) {
    CAPTURE(s);
    LieRep rep = build(s);
    WittFrame f = WittFrame::make(rep.n);
    const std::size_t expect = rspace(rep).full.dim() + pspace(rep).full.dim() +
                               rep.n * (rep.n + 1) / 2;
    Subspace space = assembly_space(f, rep);
    CHECK(space.dim() == expect);
  }
}

TEST_CASE("assembly map is injective with image the full Bianchi kernel") {
  LieRep rep = build("so:2");
  WittFrame f = WittFrame::make(rep.n);
  RSpaceResult rs = rspace(rep);
  PSpaceResult ps = pspace(rep);
  std::vector<RVec> cols;
  auto push_assembly = [&](const LorentzCurv& d) {
    cols.push_back(assembly_coords(assemble(f, d), f, rep));
  };
  for (std::size_t c = 0; c < rs.full.dim(); ++c)
    push_assembly(make_lorentz_data(rep, CurvTensor::from_flat(rep, rs.full.basis.col(c)),
                                    PMap::zero(rep), RMat(rep.n, rep.n)));
  for (std::size_t c = 0; c < ps.full.dim(); ++c)
    push_assembly(make_lorentz_data(rep, CurvTensor::zero(rep),
                                    PMap::from_flat(rep, ps.full.basis.col(c)),
                                    RMat(rep.n, rep.n)));
  for (std::size_t i = 0; i < rep.n; ++i)
    for (std::size_t j = i; j < rep.n; ++j) {
      RMat t(rep.n, rep.n);
      t(i, j) = t(j, i) = 1;
      push_assembly(make_lorentz_data(rep, CurvTensor::zero(rep), PMap::zero(rep), t));
    }
  Subspace image = Subspace::from_vectors(cols.front().size(), cols);
  CHECK(image.dim() == cols.size());  // injective
  CHECK(span_equal(image, assembly_space(f, rep)));
}

TEST_CASE("JSON round trip and validation") {
  const std::string good = R"({
    "algebra": "so:2",
    "R0": [["1/2"]],
    "P": [["0"], ["0"]],
    "T": [["1", "0"], ["0", 1]]
  })";
  AssembleInput in = parse_assemble_input(good);
  CHECK(in.spec.str() == "so:2");
  CHECK(in.r0(0, 0) == make_rat(1, 2));
  CHECK(in.t(1, 1) == Rat(1));

  CHECK_THROWS_AS(parse_assemble_input("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_assemble_input(R"({"algebra": "so:2"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_assemble_input(R"({
    "algebra": "so:2", "R0": [["1/2"]], "P": [["0"],["0"]],
    "T": [["0.5", "0"], ["0", "1"]]
  })"), std::invalid_argument);
  CHECK_THROWS_AS(parse_assemble_input(R"({
    "algebra": "so:2", "R0": [["1/2", "0"]], "P": [["0"],["0"]],
    "T": [["1", "0"], ["0", "1"]]
  })"), std::invalid_argument);
  CHECK_THROWS_AS(parse_assemble_input(R"({
    "algebra": "so:1", "R0": [[]], "P": [[]], "T": [[]]
  })"), std::invalid_argument);
}
