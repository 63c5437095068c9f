#include "curvspace/curvature.hpp"

#include <stdexcept>

namespace curvspace {

namespace {

RMat combine_basis(const LieRep& rep, const RVec& coords) {
  RMat m(rep.n, rep.n);
  for (std::size_t a = 0; a < rep.dim(); ++a) {
    if (is_zero(coords[a])) continue;
    RMat t = rep.basis[a];
    t *= coords[a];
    m += t;
  }
  return m;
}

CMat dagger(const CMat& m) {
  CMat d(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(j, i) = m(i, j).conj();
  return d;
}

}  // namespace

RMat PMap::value_on_basis(std::size_t i) const {
  return combine_basis(*rep, coeffs.row(i));
}

RMat PMap::value(const RVec& x) const {
  RVec c(rep->dim(), Rat(0));
  for (std::size_t i = 0; i < rep->n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t a = 0; a < rep->dim(); ++a) c[a] += x[i] * coeffs(i, a);
  }
  return combine_basis(*rep, c);
}

PMap PMap::from_flat(const LieRep& r, const RVec& v) {
  PMap p = PMap::zero(r);
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t a = 0; a < r.dim(); ++a) p.coeffs(i, a) = v[i * r.dim() + a];
  return p;
}

RVec CurvTensor::value_coords(std::size_t i, std::size_t j) const {
  const std::size_t d = rep->dim();
  RVec c(d, Rat(0));
  if (i == j) return c;
  const bool flip = i > j;
  const std::size_t p = flip ? pair_index(rep->n, j, i) : pair_index(rep->n, i, j);
  for (std::size_t a = 0; a < d; ++a) c[a] = flip ? Rat(-coeffs(p, a)) : coeffs(p, a);
  return c;
}

RMat CurvTensor::value(std::size_t i, std::size_t j) const {
  return combine_basis(*rep, value_coords(i, j));
}

CurvTensor CurvTensor::from_flat(const LieRep& r, const RVec& v) {
  CurvTensor t = CurvTensor::zero(r);
  const std::size_t d = r.dim();
  for (std::size_t p = 0; p < pair_count(r.n); ++p)
    for (std::size_t a = 0; a < d; ++a) t.coeffs(p, a) = v[p * d + a];
  return t;
}

RVec cyclic_defect(const LieRep& rep, const std::vector<RMat>& values) {
  const std::size_t n = rep.n;
  std::vector<RMat> gp;
  gp.reserve(n);
  for (std::size_t i = 0; i < n; ++i) gp.push_back(rep.gram * values[i]);
  const auto triples = triple_list(n);
  RVec out(triples.size(), Rat(0));
  for (std::size_t r = 0; r < triples.size(); ++r) {
    const auto [i, j, k] = std::tuple{triples[r][0], triples[r][1], triples[r][2]};
    out[r] = gp[i](k, j) + gp[j](i, k) + gp[k](j, i);
  }
  return out;
}

RVec cyclic_defect(const PMap& p) {
  std::vector<RMat> values;
  values.reserve(p.rep->n);
  for (std::size_t i = 0; i < p.rep->n; ++i) values.push_back(p.value_on_basis(i));
  return cyclic_defect(*p.rep, values);
}

RVec ricci_tilde(const LieRep& rep, const std::vector<RMat>& values) {
  RVec r(rep.n, Rat(0));
  for (std::size_t i = 0; i < rep.n; ++i)
    r = r + values[i].apply(rep.gram_inv.col(i));
  return r;
}

RVec ricci_tilde(const PMap& p) {
  std::vector<RMat> values;
  values.reserve(p.rep->n);
  for (std::size_t i = 0; i < p.rep->n; ++i) values.push_back(p.value_on_basis(i));
  return ricci_tilde(*p.rep, values);
}

RMat ricci_tilde_matrix(const LieRep& rep) {
  const std::size_t n = rep.n, d = rep.dim();
  RMat m(n, n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const RVec gi = rep.gram_inv.col(i);
    for (std::size_t a = 0; a < d; ++a) {
      const RVec v = rep.basis[a].apply(gi);
      for (std::size_t t = 0; t < n; ++t) m(t, i * d + a) = v[t];
    }
  }
  return m;
}

namespace {

RMat trace_form(const LieRep& rep) {
  const std::size_t d = rep.dim();
  RMat k(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b)
      k(a, b) = k(b, a) = -(rep.basis[a] * rep.basis[b]).trace();
  return k;
}

}  // namespace

RMat pairing_gram_p(const LieRep& rep) { return kron(rep.gram_inv, trace_form(rep)); }

RMat pairing_gram_r(const LieRep& rep) {
  const std::size_t n = rep.n;
  const auto pairs = pair_list(n);
  const RMat& gi = rep.gram_inv;
  RMat p2(pairs.size(), pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const auto [i, j] = pairs[r];
      const auto [k, l] = pairs[c];
      p2(r, c) = gi(i, k) * gi(j, l) - gi(i, l) * gi(j, k);
    }
  return kron(p2, trace_form(rep));
}

PSpaceResult pspace(const LieRep& rep) {
  PSpaceResult res;
  const RMat cm = cyclic_matrix(rep.n, rep.basis, rep.gram);
  res.full = kernel_subspace(cm);
  res.p0 = kernel_subspace(vcat(cm, ricci_tilde_matrix(rep)));
  res.p1 = orth_complement(res.p0, res.full, pairing_gram_p(rep));
  return res;
}

RMat bianchi_matrix(const LieRep& rep) {
  const std::size_t n = rep.n, d = rep.dim();
  const auto triples = triple_list(n);
  RMat m(triples.size() * n, pair_count(n) * d);
  for (std::size_t r = 0; r < triples.size(); ++r) {
    const auto [i, j, k] = std::tuple{triples[r][0], triples[r][1], triples[r][2]};
    const std::size_t pij = pair_index(n, i, j);
    const std::size_t pjk = pair_index(n, j, k);
    const std::size_t pik = pair_index(n, i, k);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t t = 0; t < n; ++t) {
        Rat& rij = m(r * n + t, pij * d + a);
        rij += rep.basis[a](t, k);
        Rat& rjk = m(r * n + t, pjk * d + a);
        rjk += rep.basis[a](t, i);
        Rat& rik = m(r * n + t, pik * d + a);
        rik -= rep.basis[a](t, j);
      }
  }
  return m;
}

RMat ricci_matrix(const LieRep& rep) {
  const std::size_t n = rep.n, d = rep.dim();
  RMat m(n * (n + 1) / 2, pair_count(n) * d);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j, ++row)
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i) continue;
        const bool flip = l < i;
        const std::size_t p = flip ? pair_index(n, l, i) : pair_index(n, i, l);
        for (std::size_t a = 0; a < d; ++a) {
          const Rat& v = rep.basis[a](l, j);
          if (is_zero(v)) continue;
          if (flip)
            m(row, p * d + a) -= v;
          else
            m(row, p * d + a) += v;
        }
      }
  return m;
}

RMat ricci(const CurvTensor& r) {
  const LieRep& rep = *r.rep;
  const std::size_t n = rep.n, d = rep.dim();
  RMat m(n, n);
  for (auto [p, q] : pair_list(n)) {
    const std::size_t pi = pair_index(n, p, q);
    for (std::size_t a = 0; a < d; ++a) {
      const Rat& c = r.coeffs(pi, a);
      if (is_zero(c)) continue;
      // R(e_p, e_q) contributes c*B_a at (i=p, l=q) and -c*B_a at (i=q, l=p)
      for (std::size_t j = 0; j < n; ++j) {
        const Rat& bq = rep.basis[a](q, j);
        if (!is_zero(bq)) m(p, j) += c * bq;
        const Rat& bp = rep.basis[a](p, j);
        if (!is_zero(bp)) m(q, j) -= c * bp;
      }
    }
  }
  return m;
}

bool pair_symmetry_holds(const CurvTensor& r) {
  const LieRep& rep = *r.rep;
  const std::size_t n = rep.n;
  const auto pairs = pair_list(n);
  std::vector<RMat> gv;
  gv.reserve(pairs.size());
  for (auto [i, j] : pairs) gv.push_back(rep.gram * r.value(i, j));
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a; b < pairs.size(); ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      if (!(gv[a](l, k) == gv[b](j, i))) return false;
    }
  return true;
}

RVec curv_action(const LieRep& rep, const std::vector<std::vector<RVec>>& f,
                 std::size_t m, const RVec& coeffs) {
  const std::size_t n = rep.n, d = rep.dim();
  const RMat& xi = rep.basis[m];
  const auto pairs = pair_list(n);
  CurvTensor t = CurvTensor::from_flat(rep, coeffs);
  RVec out(pairs.size() * d, Rat(0));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    // [xi, R(e_i, e_j)]
    for (std::size_t a = 0; a < d; ++a) {
      const Rat& c = t.coeffs(p, a);
      if (is_zero(c)) continue;
      for (std::size_t b = 0; b < d; ++b) {
        const Rat& fv = f[m][a][b];
        if (!is_zero(fv)) out[p * d + b] += c * fv;
      }
    }
    // - R(xi e_i, e_j) - R(e_i, xi e_j)
    for (std::size_t l = 0; l < n; ++l) {
      const Rat& xli = xi(l, i);
      if (!is_zero(xli)) {
        const RVec rc = t.value_coords(l, j);
        for (std::size_t a = 0; a < d; ++a)
          if (!is_zero(rc[a])) out[p * d + a] -= xli * rc[a];
      }
      const Rat& xlj = xi(l, j);
      if (!is_zero(xlj)) {
        const RVec rc = t.value_coords(i, l);
        for (std::size_t a = 0; a < d; ++a)
          if (!is_zero(rc[a])) out[p * d + a] -= xlj * rc[a];
      }
    }
  }
  return out;
}

RVec p_action(const LieRep& rep, const std::vector<std::vector<RVec>>& f,
              std::size_t m, const RVec& coeffs) {
  const std::size_t n = rep.n, d = rep.dim();
  const RMat& xi = rep.basis[m];
  RVec out(n * d, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t a = 0; a < d; ++a) {
      const Rat& c = coeffs[j * d + a];
      if (is_zero(c)) continue;
      for (std::size_t b = 0; b < d; ++b) {
        const Rat& fv = f[m][a][b];
        if (!is_zero(fv)) out[j * d + b] += c * fv;
      }
    }
    for (std::size_t l = 0; l < n; ++l) {
      const Rat& xlj = xi(l, j);
      if (is_zero(xlj)) continue;
      for (std::size_t a = 0; a < d; ++a) {
        const Rat& c = coeffs[l * d + a];
        if (!is_zero(c)) out[j * d + a] -= xlj * c;
      }
    }
  }
  return out;
}

RSpaceResult rspace(const LieRep& rep) {
  RSpaceResult res;
  const RMat bm = bianchi_matrix(rep);
  res.full = kernel_subspace(bm);
  res.r0 = kernel_subspace(vcat(bm, ricci_matrix(rep)));

  // h-invariants inside full, cut one basis element at a time
  const std::size_t amb = res.full.ambient;
  if (res.full.dim() == 0 || rep.dim() == 0) {
    res.r1 = Subspace::zero(amb);
  } else {
    const auto f = structure_constants(rep);
    RMat k = res.full.basis;
    for (std::size_t m = 0; m < rep.dim() && k.cols() > 0; ++m) {
      RMat act(amb, k.cols());
      for (std::size_t c = 0; c < k.cols(); ++c)
        act.set_col(c, curv_action(rep, f, m, k.col(c)));
      RMat ker = kernel_basis_mat(act);
      if (ker.cols() == k.cols()) continue;
      k = k * ker;
    }
    res.r1 = Subspace::from_columns(amb, k);
  }

  res.rprime = orth_complement(subspace_sum(res.r0, res.r1), res.full, pairing_gram_r(rep));
  return res;
}

PMap tau_slice(const CurvTensor& r, const RVec& x) {
  const LieRep& rep = *r.rep;
  PMap p = PMap::zero(rep);
  for (std::size_t j = 0; j < rep.n; ++j)
    for (std::size_t l = 0; l < rep.n; ++l) {
      if (is_zero(x[l])) continue;
      const RVec rc = r.value_coords(j, l);
      for (std::size_t a = 0; a < rep.dim(); ++a)
        if (!is_zero(rc[a])) p.coeffs(j, a) += x[l] * rc[a];
    }
  return p;
}

Subspace tau_span(const LieRep& rep, const Subspace& curv_sub) {
  const std::size_t n = rep.n, d = rep.dim();
  RMat cols(n * d, curv_sub.dim() * n);
  for (std::size_t t = 0; t < curv_sub.dim(); ++t) {
    CurvTensor r = CurvTensor::from_flat(rep, curv_sub.basis.col(t));
    for (std::size_t i = 0; i < n; ++i) {
      PMap p = tau_slice(r, basis_vec<Rat>(n, i));
      cols.set_col(t * n + i, p.flat());
    }
  }
  return Subspace::from_columns(n * d, cols);
}

Subspace tau_image(const LieRep& rep) { return tau_span(rep, rspace(rep).full); }

Subspace berger_span(const LieRep& rep, const Subspace& curv_sub) {
  const std::size_t d = rep.dim();
  const std::size_t np = pair_count(rep.n);
  RMat cols(d, curv_sub.dim() * np);
  for (std::size_t t = 0; t < curv_sub.dim(); ++t) {
    const RVec flat = curv_sub.basis.col(t);
    for (std::size_t p = 0; p < np; ++p)
      for (std::size_t a = 0; a < d; ++a) cols(a, t * np + p) = flat[p * d + a];
  }
  return Subspace::from_columns(d, cols);
}

Subspace berger_span(const LieRep& rep) { return berger_span(rep, rspace(rep).full); }

Subspace pspan(const LieRep& rep, const Subspace& p_sub) {
  const std::size_t n = rep.n, d = rep.dim();
  RMat cols(d, p_sub.dim() * n);
  for (std::size_t t = 0; t < p_sub.dim(); ++t) {
    const RVec flat = p_sub.basis.col(t);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < d; ++a) cols(a, t * n + i) = flat[i * d + a];
  }
  return Subspace::from_columns(d, cols);
}

Subspace pspan(const LieRep& rep) { return pspan(rep, pspace(rep).full); }

std::vector<RMat> weyl_part(const PMap& p) {
  const LieRep& rep = *p.rep;
  if (!is_zero_vec(cyclic_defect(p)))
    throw std::invalid_argument("weyl_part: P violates the cyclic identity");
  const RVec r = ricci_tilde(p);
  const Rat c = Rat(1) / Rat(static_cast<long>(rep.n) - 1);
  std::vector<RMat> w;
  w.reserve(rep.n);
  for (std::size_t j = 0; j < rep.n; ++j) {
    RMat wj = p.value_on_basis(j);
    RMat wedge = wedge_mat(r, basis_vec<Rat>(rep.n, j), rep.gram);
    wedge *= c;
    wj += wedge;
    w.push_back(std::move(wj));
  }
  return w;
}

Subspace prolongation(const LieRep& rep) {
  return kernel_subspace(prolongation_matrix(rep.n, rep.basis));
}

PMap p_so_p1(const LieRep& so_rep, const RVec& x) {
  PMap p = PMap::zero(so_rep);
  for (std::size_t j = 0; j < so_rep.n; ++j)
    p.coeffs.set_row(j, wedge_coeffs(x, basis_vec<Rat>(so_rep.n, j)));
  return p;
}

PMap p_so_p0(const LieRep& so_rep, const RMat& s, const RVec& x) {
  if (!s.is_symmetric()) throw std::invalid_argument("p_so_p0: S not symmetric");
  if (!is_zero(s.trace())) throw std::invalid_argument("p_so_p0: S not trace-free");
  if (!is_zero_vec(s.apply(x))) throw std::invalid_argument("p_so_p0: Sx != 0");
  PMap p = PMap::zero(so_rep);
  for (std::size_t j = 0; j < so_rep.n; ++j)
    p.coeffs.set_row(j, wedge_coeffs(s.apply(basis_vec<Rat>(so_rep.n, j)), x));
  return p;
}

PMap p_so_rs(const LieRep& so_rep, const RMat& s, const RVec& x) {
  if (!s.is_symmetric()) throw std::invalid_argument("p_so_rs: S not symmetric");
  PMap p = PMap::zero(so_rep);
  const RVec sx = s.apply(x);
  for (std::size_t j = 0; j < so_rep.n; ++j) {
    const RVec ej = basis_vec<Rat>(so_rep.n, j);
    p.coeffs.set_row(j, wedge_coeffs(s.apply(ej), x) + wedge_coeffs(ej, sx));
  }
  return p;
}

namespace {

// P(y) = 1/2 sum_a (J_a x, y) J_a + 1/4 (x ^ y + sum_a J_a x ^ J_a y).
// The cyclic defect of c*(Jx,y)J + 1/4(x^y + Jx^Jy) expands to
// (c - 1/2) * [(Jx,u)(Jv,w) + (Jx,v)(Jw,u) + (Jx,w)(Ju,v)], so only c = +1/2
// lies in the kernel under the (u^v)z = (u,z)v - (v,z)u convention.
PMap hermitian_family_p1(const LieRep& rep, const RVec& x,
                         const std::vector<RMat>& js) {
  const std::size_t n = rep.n;
  const Rat half = make_rat(1, 2), quarter = make_rat(1, 4);
  PMap p = PMap::zero(rep);
  for (std::size_t t = 0; t < n; ++t) {
    const RVec et = basis_vec<Rat>(n, t);
    RMat val = wedge_mat(x, et, rep.gram);
    val *= quarter;
    for (const RMat& j : js) {
      const RVec jx = j.apply(x);
      RMat term = wedge_mat(jx, j.apply(et), rep.gram);
      term *= quarter;
      val += term;
      RMat jterm = j;
      jterm *= half * form_dot(rep.gram, jx, et);
      val += jterm;
    }
    p.coeffs.set_row(t, rep.coords_of(val));
  }
  return p;
}

}  // namespace

PMap p_u_p1(const LieRep& u_rep, const RVec& x) {
  if (u_rep.n % 2 != 0) throw std::invalid_argument("p_u_p1: odd ambient dimension");
  return hermitian_family_p1(u_rep, x, {complex_structure_j(u_rep.n / 2)});
}

PMap p_spsp1_p1(const LieRep& rep, const RVec& x) {
  if (rep.n % 4 != 0) throw std::invalid_argument("p_spsp1_p1: dimension not 4m");
  auto js = quaternionic_triple(rep.n / 4);
  return hermitian_family_p1(rep, x, {js[0], js[1], js[2]});
}

PMap p_adjoint(const LieRep& adj_rep, const RVec& x) {
  if (adj_rep.n != adj_rep.dim())
    throw std::invalid_argument("p_adjoint: not an adjoint representation");
  RMat adx(adj_rep.n, adj_rep.n);
  for (std::size_t l = 0; l < adj_rep.dim(); ++l) {
    if (is_zero(x[l])) continue;
    RMat t = adj_rep.basis[l];
    t *= x[l];
    adx += t;
  }
  return PMap(adj_rep, adx.transposed());
}

PMap p_s_minus_s1(const LieRep& u_rep, const std::vector<CMat>& s_legs) {
  const std::size_t m = s_legs.size();
  if (u_rep.n != 2 * m) throw std::invalid_argument("p_s_minus_s1: leg count mismatch");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (!(s_legs[a](c, b) == s_legs[b](c, a)))
          throw std::invalid_argument("p_s_minus_s1: S(e_a)e_b != S(e_b)e_a");
  PMap p = PMap::zero(u_rep);
  for (std::size_t a = 0; a < m; ++a) {
    const CMat dag = dagger(s_legs[a]);
    CMat diff = s_legs[a];
    diff -= dag;
    CMat sum = s_legs[a];
    sum += dag;
    // P(e_a) = realify(M - M^+), P(i e_a) = realify(i (M + M^+))
    p.coeffs.set_row(a, u_rep.coords_of(realify(diff)));
    CMat isum(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) isum(r, c) = CRat::i() * sum(r, c);
    p.coeffs.set_row(m + a, u_rep.coords_of(realify(isum)));
  }
  return p;
}

CRat complex_trace(const RMat& x) {
  if (x.rows() % 2 != 0) throw std::invalid_argument("complex_trace: odd size");
  const RMat j = complex_structure_j(x.rows() / 2);
  return CRat(x.trace() / 2, -(j * x).trace() / 2);
}

bool u_trace_identity_holds(const LieRep& u_rep, const PMap& p) {
  const std::size_t n = u_rep.n;
  const RMat j = complex_structure_j(n / 2);
  const RVec r = ricci_tilde(p);
  for (std::size_t t = 0; t < n; ++t) {
    const CRat tr = complex_trace(p.value(j.col(t)));
    if (!is_zero(tr.re)) return false;       // trace of an anti-Hermitian value
    if (!(r[t] == -tr.im)) return false;     // (RicciTilde(P), e_t) = -Im tr_C P(J e_t)
  }
  return true;
}

}  // namespace curvspace
