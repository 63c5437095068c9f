#include <doctest.h>

#include "curvspace/curvature.hpp"
#include "curvspace/testutil.hpp"

using namespace curvspace;

namespace {

PMap random_member(const LieRep& rep, const Subspace& sub, TestRng& rng) {
  RVec flat(sub.ambient, Rat(0));
  for (std::size_t c = 0; c < sub.dim(); ++c) {
    const Rat w = rng.rat();
    for (std::size_t i = 0; i < sub.ambient; ++i) flat[i] += w * sub.basis(i, c);
  }
  return PMap::from_flat(rep, flat);
}

CurvTensor random_tensor(const LieRep& rep, const Subspace& sub, TestRng& rng) {
  RVec flat(sub.ambient, Rat(0));
  for (std::size_t c = 0; c < sub.dim(); ++c) {
    const Rat w = rng.rat();
    for (std::size_t i = 0; i < sub.ambient; ++i) flat[i] += w * sub.basis(i, c);
  }
  return CurvTensor::from_flat(rep, flat);
}

}  // namespace

TEST_CASE("cyclic defect basics") {
  LieRep so3 = build("so:3");
  CHECK(is_zero_vec(cyclic_defect(PMap::zero(so3))));

  // P(y) = x ^ y always satisfies the identity
  TestRng rng(11);
  for (int t = 0; t < 5; ++t) {
    PMap p = p_so_p1(so3, rng.rat_vector(3));
    CHECK(is_zero_vec(cyclic_defect(p)));
  }

  // the lone coefficient (e1^e2) (x) (e1^e3) violates it
  LieRep& rep = so3;
  CurvTensor bad = CurvTensor::zero(rep);
  bad.coeffs(pair_index(3, 0, 1), pair_index(3, 0, 2)) = 1;
  bool some_slice_defective = false;
  for (std::size_t i = 0; i < 3; ++i) {
    PMap slice = tau_slice(bad, basis_vec<Rat>(3, i));
    if (!is_zero_vec(cyclic_defect(slice))) some_slice_defective = true;
  }
  CHECK(some_slice_defective);
}

TEST_CASE("so(3) P-space: 8 = 3 + 5") {
  LieRep so3 = build("so:3");
  PSpaceResult ps = pspace(so3);
  CHECK(ps.full.dim() == 8);
  CHECK(ps.p1.dim() == 3);
  CHECK(ps.p0.dim() == 5);
}

TEST_CASE("so(3) cyclic kernel dimension also visible through kernel_basis") {
  LieRep so3 = build("so:3");
  RMat cm = cyclic_matrix(so3.n, so3.basis, so3.gram);
  CHECK(kernel_basis_mat(cm).cols() == 8);
}

TEST_CASE("p0 equals full intersect ker(ricci_tilde) computed independently") {
  for (const char* s : {"so:3", "so:4", "u:2"}) {
    CAPTURE(s);
    LieRep rep = build(s);
    PSpaceResult ps = pspace(rep);
    Subspace ker_ric = kernel_subspace(ricci_tilde_matrix(rep));
    CHECK(span_equal(ps.p0, intersect(ps.full, ker_ric)));
    CHECK(ps.p0.dim() + ps.p1.dim() == ps.full.dim());
  }
}

TEST_CASE("ricci_tilde closed forms") {
  TestRng rng(21);
  for (std::size_t n : {3u, 4u, 5u}) {
    LieRep so = build("so:" + std::to_string(n));
    const RVec x = rng.rat_vector(n);

    // P = x ^ .  ->  (1-n) x
    RVec r = ricci_tilde(p_so_p1(so, x));
    const Rat scale = Rat(1) - Rat(static_cast<long>(n));
    CHECK(r == scale * x);

    // P(y) = Sy ^ x + y ^ Sx  ->  (tr S) x + (n-2) Sx, which is also
    // Ric(R_S) x for R_S(u,v) = Su ^ v + u ^ Sv with Ric(R_S) = (n-2)S + tr(S) I
    RMat s = rng.rat_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s(j, i) = s(i, j);
    PMap p = p_so_rs(so, s, x);
    CHECK(is_zero_vec(cyclic_defect(p)));
    const Rat n2 = Rat(static_cast<long>(n)) - 2;
    RVec want = s.trace() * x + n2 * s.apply(x);
    CHECK(ricci_tilde(p) == want);
    // and the tau-slice route gives the same vector
    RMat ric_rs = RMat::identity(n);
    ric_rs *= s.trace();
    RMat s2 = s;
    s2 *= n2;
    ric_rs += s2;
    CHECK(ricci_tilde(p) == ric_rs.apply(x));
  }
}

TEST_CASE("ricci_tilde is basis independent under a rational rotation") {
  // conjugating P by an orthogonal map sends RicciTilde(P) to its image
  LieRep so3 = build("so:3");
  RMat o(3, 3);  // 3-4-5 rotation in the (e1,e2) plane
  o(0, 0) = make_rat(3, 5); o(0, 1) = make_rat(-4, 5);
  o(1, 0) = make_rat(4, 5); o(1, 1) = make_rat(3, 5);
  o(2, 2) = 1;
  RMat ot = o.transposed();
  TestRng rng(5);
  PSpaceResult ps = pspace(so3);
  for (int t = 0; t < 5; ++t) {
    PMap p = random_member(so3, ps.full, rng);
    PMap q = PMap::zero(so3);
    for (std::size_t j = 0; j < 3; ++j) {
      RMat val = o * p.value(ot.col(j)) * ot;  // (g.P)(y) = g P(g^-1 y) g^-1
      q.coeffs.set_row(j, so3.coords_of(val));
    }
    CHECK(ricci_tilde(q) == o.apply(ricci_tilde(p)));
  }
}

TEST_CASE("rspace dimensions for so(2) and so(3)") {
  RSpaceResult r2 = rspace(build("so:2"));
  CHECK(r2.full.dim() == 1);
  CHECK(r2.r1.dim() == 1);

  RSpaceResult r3 = rspace(build("so:3"));
  CHECK(r3.full.dim() == 6);
  CHECK(r3.r1.dim() == 1);
  CHECK(r3.r0.dim() == 0);
  CHECK(r3.rprime.dim() == 5);
}

TEST_CASE("rspace component accounting and membership") {
  TestRng rng(31);
  for (const char* s : {"so:3", "so:4", "u:2", "su:2"}) {
    CAPTURE(s);
    LieRep rep = build(s);
    RSpaceResult rs = rspace(rep);
    CHECK(rs.r0.dim() + rs.r1.dim() + rs.rprime.dim() == rs.full.dim());
    CHECK(rs.r1.dim() <= 1);
    CHECK(rs.full.contains(rs.r0));
    CHECK(rs.full.contains(rs.r1));
    // every member satisfies Bianchi, pair symmetry, symmetric Ricci
    for (int t = 0; t < 3; ++t) {
      CurvTensor r = random_tensor(rep, rs.full, rng);
      CHECK(pair_symmetry_holds(r));
      CHECK(ricci(r).is_symmetric());
      for (std::size_t i = 0; i < rep.n; ++i)
        CHECK(is_zero_vec(cyclic_defect(tau_slice(r, basis_vec<Rat>(rep.n, i)))));
    }
    // r0 members are Ricci flat, r1 members are invariant under the action
    for (int t = 0; t < 2; ++t)
      CHECK(ricci(random_tensor(rep, rs.r0, rng)).is_zero_mat());
  }
}

TEST_CASE("ricci of R(x,y) = x ^ y is (n-1) identity") {
  for (std::size_t n : {3u, 4u, 5u}) {
    LieRep so = build("so:" + std::to_string(n));
    CurvTensor r = CurvTensor::zero(so);
    for (auto [i, j] : pair_list(n))
      r.coeffs(pair_index(n, i, j), pair_index(n, i, j)) = 1;
    RMat expect = RMat::identity(n);
    expect *= Rat(static_cast<long>(n) - 1);
    CHECK(ricci(r) == expect);
  }
}

TEST_CASE("lemma: R in R(h) iff all slices lie in P(h)") {
  TestRng rng(41);
  for (const char* s : {"so:3", "so:4", "u:2"}) {
    CAPTURE(s);
    LieRep rep = build(s);
    RSpaceResult rs = rspace(rep);
    // forward: random members have cyclic-clean slices (checked above too)
    CurvTensor r = random_tensor(rep, rs.full, rng);
    for (int t = 0; t < 4; ++t) {
      const RVec x = rng.rat_vector(rep.n);
      CHECK(is_zero_vec(cyclic_defect(tau_slice(r, x))));
    }
    // backward: the space {R : all basis slices in P(h)} equals R(h) exactly
    const std::size_t d = rep.dim();
    const RMat cm = cyclic_matrix(rep.n, rep.basis, rep.gram);
    const std::size_t amb = pair_count(rep.n) * d;
    // build the map R -> (cyclic defects of all its slices)
    RMat slice_map(rep.n * cm.rows(), amb);
    for (std::size_t col = 0; col < amb; ++col) {
      RVec unit(amb, Rat(0));
      unit[col] = 1;
      CurvTensor u = CurvTensor::from_flat(rep, unit);
      for (std::size_t i = 0; i < rep.n; ++i) {
        PMap sl = tau_slice(u, basis_vec<Rat>(rep.n, i));
        const RVec defect = cm.apply(sl.flat());
        for (std::size_t rr = 0; rr < cm.rows(); ++rr)
          slice_map(i * cm.rows() + rr, col) = defect[rr];
      }
    }
    CHECK(span_equal(kernel_subspace(slice_map), rs.full));
  }
}

TEST_CASE("tau slices of x^y generator stay in P(so(n))") {
  LieRep so4 = build("so:4");
  CurvTensor r = CurvTensor::zero(so4);
  for (auto [i, j] : pair_list(4))
    r.coeffs(pair_index(4, i, j), pair_index(4, i, j)) = 1;  // R(x,y) = x^y
  PSpaceResult ps = pspace(so4);
  TestRng rng(3);
  const RVec x = rng.rat_vector(4);
  PMap slice = tau_slice(r, x);
  CHECK(ps.full.contains(slice.flat()));
}

TEST_CASE("tau image equals P(h) for so(4), with graded refinements") {
  LieRep rep = build("so:4");
  PSpaceResult ps = pspace(rep);
  RSpaceResult rs = rspace(rep);
  CHECK(ps.full.dim() == 20);
  Subspace img = tau_span(rep, rs.full);
  CHECK(span_equal(img, ps.full));
  CHECK(span_equal(tau_span(rep, rs.r0), ps.p0));
  CHECK(span_equal(tau_span(rep, rs.r1), ps.p1));
  CHECK(tau_span(rep, Subspace::zero(rs.full.ambient)).dim() == 0);
}

TEST_CASE("RicciTilde equivariance under the h-action") {
  for (const char* s : {"so:3", "u:2", "adjoint-su:3"}) {
    CAPTURE(s);
    LieRep rep = build(s);
    auto f = structure_constants(rep);
    PSpaceResult ps = pspace(rep);
    RMat rt = ricci_tilde_matrix(rep);
    for (std::size_t m = 0; m < rep.dim(); ++m)
      for (std::size_t c = 0; c < ps.full.dim(); ++c) {
        const RVec p = ps.full.basis.col(c);
        const RVec lhs = rt.apply(p_action(rep, f, m, p));
        const RVec rhs = rep.basis[m].apply(rt.apply(p));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("P(h) is invariant under the h-action") {
  for (const char* s : {"so:4", "u:2"}) {
    LieRep rep = build(s);
    auto f = structure_constants(rep);
    PSpaceResult ps = pspace(rep);
    for (std::size_t m = 0; m < rep.dim(); ++m)
      for (std::size_t c = 0; c < ps.full.dim(); ++c)
        CHECK(ps.full.contains(p_action(rep, f, m, ps.full.basis.col(c))));
  }
}

TEST_CASE("berger span fills h for the classical families") {
  for (const char* s : {"so:3", "so:4", "so:5", "u:2", "su:2", "sp:1", "sp:1+sp1",
                        "g2", "soxso:3,3", "adjoint-su:3"}) {
    CAPTURE(s);
    LieRep rep = build(s);
    CHECK(berger_span(rep).dim() == rep.dim());
  }
}

TEST_CASE("pspan fills h for g2") {
  LieRep g2 = build("g2");
  CHECK(pspan(g2).dim() == g2.dim());
}

TEST_CASE("R-space components are pairwise orthogonal for the pairing") {
  for (const char* s : {"so:4", "u:2", "adjoint-su:3"}) {
    CAPTURE(s);
    LieRep rep = build(s);
    RSpaceResult rs = rspace(rep);
    const RMat g = pairing_gram_r(rep);
    auto orth = [&](const Subspace& a, const Subspace& b) {
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
          if (!is_zero(form_dot(g, a.basis.col(i), b.basis.col(j)))) return false;
      return true;
    };
    CHECK(orth(rs.r0, rs.r1));
    CHECK(orth(rs.r0, rs.rprime));
    CHECK(orth(rs.r1, rs.rprime));
  }
}

TEST_CASE("pspan fills h for so(n) and is empty for the trivial algebra") {
  LieRep so4 = build("so:4");
  CHECK(pspan(so4).dim() == so4.dim());

  LieRep trivial = make_rep(RepSpec{}, 3, {}, RMat::identity(3));
  CHECK(pspan(trivial, pspace(trivial).full).dim() == 0);
  CHECK(prolongation(trivial).dim() == 0);
}

TEST_CASE("weyl part kills the Ricci contraction") {
  TestRng rng(61);
  for (const char* s : {"so:3", "so:4", "u:2"}) {
    CAPTURE(s);
    LieRep rep = build(s);
    PSpaceResult ps = pspace(rep);
    for (std::size_t c = 0; c < ps.full.dim(); ++c) {
      PMap p = PMap::from_flat(rep, ps.full.basis.col(c));
      auto w = weyl_part(p);
      CHECK(is_zero_vec(ricci_tilde(rep, w)));
      CHECK(is_zero_vec(cyclic_defect(rep, w)));
    }
    // P in p0: W = P
    if (ps.p0.dim() > 0) {
      PMap p = random_member(rep, ps.p0, rng);
      auto w = weyl_part(p);
      for (std::size_t j = 0; j < rep.n; ++j) CHECK(w[j] == p.value_on_basis(j));
    }
  }
  // P = x ^ . gives W = 0
  LieRep so5 = build("so:5");
  auto w = weyl_part(p_so_p1(so5, rng.rat_vector(5)));
  for (const RMat& m : w) CHECK(m.is_zero_mat());
}

TEST_CASE("weyl part rejects maps outside P(h)") {
  LieRep so3 = build("so:3");
  PMap bad = PMap::zero(so3);
  bad.coeffs(0, pair_index(3, 1, 2)) = 1;  // e_1 (x) (e2^e3) has nonzero defect
  CHECK_FALSE(is_zero_vec(cyclic_defect(bad)));
  CHECK_THROWS_AS(weyl_part(bad), std::invalid_argument);
}

TEST_CASE("prolongation of so(n) vanishes") {
  for (std::size_t n : {3u, 4u, 5u, 6u})
    CHECK(prolongation(build("so:" + std::to_string(n))).dim() == 0);
}

TEST_CASE("explicit so(n) elements land in the advertised components") {
  LieRep so3 = build("so:3");
  PSpaceResult ps3 = pspace(so3);
  PMap p1 = p_so_p1(so3, basis_vec<Rat>(3, 0));
  CHECK(is_zero_vec(cyclic_defect(p1)));
  CHECK(ricci_tilde(p1) == (Rat(-2) * basis_vec<Rat>(3, 0)));
  CHECK(ps3.p1.contains(p1.flat()));

  LieRep so4 = build("so:4");
  PSpaceResult ps4 = pspace(so4);
  RMat s(4, 4);
  s(0, 0) = 1; s(1, 1) = -1;
  PMap p0 = p_so_p0(so4, s, basis_vec<Rat>(4, 2));
  CHECK(is_zero_vec(cyclic_defect(p0)));
  CHECK(is_zero_vec(ricci_tilde(p0)));
  CHECK(ps4.p0.contains(p0.flat()));

  CHECK_THROWS_AS(p_so_p0(so4, s, basis_vec<Rat>(4, 0)), std::invalid_argument);
}

TEST_CASE("explicit u(2) element lies in P1 and the trace identity holds") {
  LieRep u2 = build("u:2");
  PSpaceResult ps = pspace(u2);
  CHECK(ps.full.dim() == 12);
  CHECK(ps.p1.dim() == 4);
  CHECK(ps.p0.dim() == 8);
  TestRng rng(71);
  for (int t = 0; t < 4; ++t) {
    PMap p = p_u_p1(u2, rng.rat_vector(4));
    CHECK(is_zero_vec(cyclic_defect(p)));
    CHECK(ps.p1.contains(p.flat()));
  }
  for (std::size_t c = 0; c < ps.full.dim(); ++c)
    CHECK(u_trace_identity_holds(u2, PMap::from_flat(u2, ps.full.basis.col(c))));
}

TEST_CASE("explicit sp(m)+sp(1) element lies in P1") {
  LieRep rep = build("sp:1+sp1");
  PSpaceResult ps = pspace(rep);
  CHECK(ps.p1.dim() == 4);
  TestRng rng(81);
  PMap p = p_spsp1_p1(rep, rng.rat_vector(4));
  CHECK(is_zero_vec(cyclic_defect(p)));
  CHECK(ps.p1.contains(p.flat()));
}

TEST_CASE("adjoint representation: P(h) is exactly the bracket family") {
  LieRep adj = build("adjoint-su:3");
  PSpaceResult ps = pspace(adj);
  CHECK(ps.full.dim() == 8);
  CHECK(ps.p1.dim() == 8);
  CHECK(ps.p0.dim() == 0);
  std::vector<RVec> gens;
  for (std::size_t l = 0; l < 8; ++l) {
    PMap p = p_adjoint(adj, basis_vec<Rat>(8, l));
    CHECK(is_zero_vec(cyclic_defect(p)));
    gens.push_back(p.flat());
  }
  CHECK(span_equal(ps.full, Subspace::from_vectors(ps.full.ambient, gens)));
}

TEST_CASE("S - S1 construction: membership in u, su, sp") {
  LieRep u2 = build("u:2");
  PSpaceResult psu = pspace(u2);
  TestRng rng(91);

  auto random_s = [&](bool traceless) {
    // S_abc symmetric in (a,c); legs M_a with (M_a)_{cb} = S_{acb}
    const std::size_t m = 2;
    std::vector<CMat> legs(m, CMat(m, m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t b = a; b < m; ++b) {
          CRat v = rng.crat();
          legs[a](c, b) = v;
          legs[b](c, a) = v;
        }
    if (traceless) {
      // subtract the trace part: force sum_b S_abb = 0, i.e. tr(M_a) = 0
      for (std::size_t a = 0; a < m; ++a) {
        CRat tr = legs[a].trace();
        (void)tr;
      }
    }
    return legs;
  };

  for (int t = 0; t < 4; ++t) {
    auto legs = random_s(false);
    PMap p = p_s_minus_s1(u2, legs);
    CHECK(is_zero_vec(cyclic_defect(p)));
    CHECK(psu.full.contains(p.flat()));
  }

  // su membership iff sum_b S_abb = 0 for all a
  LieRep su2 = build("su:2");
  PSpaceResult pssu = pspace(su2);
  auto in_su_space = [&](const PMap& p) {
    // values portable to the su(2) coefficient grid only if inside su-span
    for (std::size_t i = 0; i < 4; ++i)
      if (!su2.in_span(p.value_on_basis(i))) return false;
    PMap q = PMap::zero(su2);
    for (std::size_t i = 0; i < 4; ++i)
      q.coeffs.set_row(i, su2.coords_of(p.value_on_basis(i)));
    return pssu.full.contains(q.flat());
  };

  // traceless S -> in P(su(2))
  std::vector<CMat> legs(2, CMat(2, 2));
  legs[0](0, 0) = CRat(1); legs[0](1, 1) = CRat(-1);       // M_0 = diag(1,-1), tr 0
  legs[1](0, 1) = CRat(1); legs[1](1, 1) = CRat(0);
  legs[0](1, 1) = CRat(-1);
  // enforce S(e_a)e_b = S(e_b)e_a: column b of M_a == column a of M_b
  legs[1].set_col(0, legs[0].col(1));
  // make tr(M_1) = 0 as well: (M_1)_{11} = -(M_1)_{00}
  legs[1](1, 1) = -legs[1](0, 0);
  PMap psu2 = p_s_minus_s1(u2, legs);
  CHECK(in_su_space(psu2));

  // non-traceless S -> not in P(su(2))
  std::vector<CMat> legs2(2, CMat(2, 2));
  legs2[0](0, 0) = CRat(1);  // tr(M_0) = 1 != 0
  legs2[1].set_col(0, legs2[0].col(1));
  PMap pnot = p_s_minus_s1(u2, legs2);
  CHECK(is_zero_vec(cyclic_defect(pnot)));
  CHECK_FALSE(in_su_space(pnot));
}

TEST_CASE("P1 is unchanged when the pairing is rescaled") {
  LieRep rep = build("so:4");
  PSpaceResult ps = pspace(rep);
  RMat scaled = pairing_gram_p(rep);
  scaled *= make_rat(7, 3);
  Subspace p1b = orth_complement(ps.p0, ps.full, scaled);
  CHECK(span_equal(ps.p1, p1b));
}

TEST_CASE("u(3) and su(3) P-space dimensions at the next size") {
  PSpaceResult pu = pspace(build("u:3"));
  CHECK(pu.full.dim() == 36);  // m^2(m+1) as a real space
  CHECK(pu.p1.dim() == 6);
  CHECK(pu.p0.dim() == 30);
  PSpaceResult psu = pspace(build("su:3"));
  CHECK(psu.full.dim() == 30);
  CHECK(psu.p1.dim() == 0);
}

TEST_CASE("spin9 behaves as a symmetric Berger algebra: P = P1 isomorphic to V") {
  LieRep rep = build("spin9");
  PSpaceResult ps = pspace(rep);
  CHECK(ps.full.dim() == 16);
  CHECK(ps.p1.dim() == 16);
  CHECK(ps.p0.dim() == 0);
  CHECK(pspan(rep, ps.full).dim() == rep.dim());  // images span all of h
}

TEST_CASE("dim p1 lies in {0, n} for irreducible representations") {
  for (const char* s : {"so:3", "so:4", "so:5", "u:2", "su:2", "sp:1", "g2"}) {
    CAPTURE(s);
    LieRep rep = build(s);
    PSpaceResult ps = pspace(rep);
    const bool ok = ps.p1.dim() == 0 || ps.p1.dim() == rep.n;
    CHECK(ok);
  }
}
