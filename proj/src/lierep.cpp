#include "curvspace/lierep.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace curvspace {

namespace {

RMat outer(const RVec& a, const RVec& b) {
  RMat m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!is_zero(b[j])) m(i, j) = a[i] * b[j];
  }
  return m;
}

std::vector<RMat> so_wedge_basis(std::size_t n) {
  const RMat id = RMat::identity(n);
  std::vector<RMat> basis;
  basis.reserve(pair_count(n));
  for (auto [i, j] : pair_list(n))
    basis.push_back(wedge_mat(basis_vec<Rat>(n, i), basis_vec<Rat>(n, j), id));
  return basis;
}

/// Matrices Sum_k c_k B_k for each kernel column c of the constraint matrix.
std::vector<RMat> cut_by_kernel(const std::vector<RMat>& gens, const RMat& constraint) {
  RMat ker = kernel_basis_mat(constraint);
  std::vector<RMat> out;
  out.reserve(ker.cols());
  const std::size_t n = gens.empty() ? 0 : gens.front().rows();
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    RMat m(n, n);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (is_zero(ker(k, c))) continue;
      RMat t = gens[k];
      t *= ker(k, c);
      m += t;
    }
    out.push_back(std::move(m));
  }
  return out;
}

/// Column k = vec([gens_k, J]) stacked for each J; optionally a trace row
/// tr(J0 * gens_k) is appended (for su(m)).
RMat commute_constraint(const std::vector<RMat>& gens, const std::vector<RMat>& js,
                        const RMat* trace_with = nullptr) {
  const std::size_t nn = gens.front().rows() * gens.front().cols();
  RMat m(js.size() * nn + (trace_with ? 1 : 0), gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t a = 0; a < js.size(); ++a) {
      RVec v = bracket(gens[k], js[a]).vec();
      for (std::size_t r = 0; r < nn; ++r) m(a * nn + r, k) = v[r];
    }
    if (trace_with) m(js.size() * nn, k) = (*trace_with * gens[k]).trace();
  }
  return m;
}

/// Constraint rows of the derivation action of so(n) on a fixed k-form:
/// row per sorted tuple, column per so(n) basis element.
RMat form_stabilizer_constraint(const AltForm& form, const std::vector<RMat>& gens) {
  const std::size_t n = form.ambient();
  const std::size_t k = form.arity();
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> idx(k);
  // enumerate sorted k-tuples lexicographically
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    tuples.push_back(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  RMat m(tuples.size(), gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    const RMat& b = gens[c];
    for (std::size_t r = 0; r < tuples.size(); ++r) {
      Rat acc(0);
      for (std::size_t pos = 0; pos < k; ++pos) {
        const std::size_t col = tuples[r][pos];
        for (std::size_t l = 0; l < n; ++l) {
          if (is_zero(b(l, col))) continue;
          std::vector<std::size_t> t = tuples[r];
          t[pos] = l;
          acc += b(l, col) * form.eval(std::move(t));
        }
      }
      m(r, c) = acc;
    }
  }
  return m;
}

struct SuBasis {
  std::vector<CMat> mats;  // F_ij, G_ij, H_l
};

SuBasis su_matrix_basis(std::size_t k) {
  SuBasis out;
  const CRat i = CRat::i();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      CMat f(k, k);
      f(a, b) = CRat(1);
      f(b, a) = CRat(-1);
      out.mats.push_back(f);
      CMat g(k, k);
      g(a, b) = i;
      g(b, a) = i;
      out.mats.push_back(g);
    }
  for (std::size_t l = 0; l + 1 < k; ++l) {
    CMat h(k, k);
    h(l, l) = i;
    h(l + 1, l + 1) = -i;
    out.mats.push_back(h);
  }
  return out;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

RMat wedge_mat(const RVec& u, const RVec& v, const RMat& gram) {
  if (u.size() != v.size()) throw std::invalid_argument("wedge_mat: length mismatch");
  return outer(v, gram.apply(u)) - outer(u, gram.apply(v));
}

RVec wedge_coeffs(const RVec& u, const RVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("wedge_coeffs: length mismatch");
  const std::size_t n = u.size();
  RVec c(pair_count(n), Rat(0));
  for (auto [i, j] : pair_list(n)) c[pair_index(n, i, j)] = u[i] * v[j] - u[j] * v[i];
  return c;
}

RMat complex_structure_j(std::size_t m) {
  RMat j(2 * m, 2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    j(m + k, k) = 1;
    j(k, m + k) = -1;
  }
  return j;
}

std::array<RMat, 3> quaternionic_triple(std::size_t m) {
  RMat j1(4 * m, 4 * m), j2(4 * m, 4 * m), j3(4 * m, 4 * m);
  for (std::size_t b = 0; b < m; ++b) {
    const std::size_t o = 4 * b;
    j1(o + 1, o + 0) = 1; j1(o + 0, o + 1) = -1; j1(o + 3, o + 2) = 1; j1(o + 2, o + 3) = -1;
    j2(o + 2, o + 0) = 1; j2(o + 3, o + 1) = -1; j2(o + 0, o + 2) = -1; j2(o + 1, o + 3) = 1;
    j3(o + 3, o + 0) = 1; j3(o + 2, o + 1) = 1; j3(o + 1, o + 2) = -1; j3(o + 0, o + 3) = -1;
  }
  return {j1, j2, j3};
}

std::array<RMat, 9> spin9_gammas() {
  RMat i2 = RMat::identity(2);
  RMat x(2, 2), z(2, 2), e(2, 2);
  x(0, 1) = 1; x(1, 0) = 1;
  z(0, 0) = 1; z(1, 1) = -1;
  e(0, 1) = 1; e(1, 0) = -1;
  const char* words[9] = {"XIII", "ZIII", "EEII", "EZEI", "EZZE",
                          "EZXE", "EXIE", "EXEZ", "EXEX"};
  auto letter = [&](char c) -> const RMat& {
    switch (c) {
      case 'I': return i2;
      case 'X': return x;
      case 'Z': return z;
      default: return e;
    }
  };
  std::array<RMat, 9> gs;
  for (std::size_t g = 0; g < 9; ++g) {
    RMat m = letter(words[g][0]);
    for (int s = 1; s < 4; ++s) m = kron(m, letter(words[g][s]));
    gs[g] = std::move(m);
  }
  return gs;
}

void AltForm::set(std::vector<std::size_t> idx, Rat c) {
  terms_[std::move(idx)] = std::move(c);
}

Rat AltForm::eval(std::vector<std::size_t> idx) const {
  // insertion sort, tracking the permutation sign; repeated index -> 0
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
      if (idx[j] == idx[j - 1]) return Rat(0);
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  auto it = terms_.find(idx);
  if (it == terms_.end()) return Rat(0);
  return sign > 0 ? it->second : Rat(-it->second);
}

AltForm g2_three_form() {
  AltForm f(3, 7);
  f.set({0, 1, 2}, Rat(1));
  f.set({0, 3, 4}, Rat(1));
  f.set({0, 5, 6}, Rat(1));
  f.set({1, 3, 5}, Rat(1));
  f.set({1, 4, 6}, Rat(-1));
  f.set({2, 3, 6}, Rat(-1));
  f.set({2, 4, 5}, Rat(-1));
  return f;
}

AltForm spin7_four_form() {
  AltForm f(4, 8);
  f.set({0, 1, 2, 3}, Rat(1));
  f.set({0, 1, 4, 5}, Rat(1));
  f.set({0, 1, 6, 7}, Rat(1));
  f.set({0, 2, 4, 6}, Rat(1));
  f.set({0, 2, 5, 7}, Rat(-1));
  f.set({0, 3, 4, 7}, Rat(-1));
  f.set({0, 3, 5, 6}, Rat(-1));
  f.set({1, 2, 4, 7}, Rat(-1));
  f.set({1, 2, 5, 6}, Rat(-1));
  f.set({1, 3, 4, 6}, Rat(-1));
  f.set({1, 3, 5, 7}, Rat(1));
  f.set({2, 3, 4, 5}, Rat(1));
  f.set({2, 3, 6, 7}, Rat(1));
  f.set({4, 5, 6, 7}, Rat(1));
  return f;
}

RepSpec RepSpec::parse(const std::string& s) {
  auto bad = [&](const std::string& what) {
    throw std::invalid_argument("bad representation spec '" + s + "': " + what);
  };
  auto parse_int = [&](const std::string& t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      bad("expected a positive integer, got '" + t + "'");
    return std::stoi(t);
  };
  RepSpec spec;
  if (s == "g2") { spec.family = RepFamily::G2; return spec; }
  if (s == "spin7") { spec.family = RepFamily::Spin7; return spec; }
  if (s == "spin9") { spec.family = RepFamily::Spin9; return spec; }
  const auto colon = s.find(':');
  if (colon == std::string::npos) bad("unknown family '" + s + "'");
  const std::string fam = s.substr(0, colon);
  const std::string arg = s.substr(colon + 1);
  if (fam == "so") {
    spec.family = RepFamily::So;
    spec.p = parse_int(arg);
    if (spec.p < 2) bad("so(n) needs n >= 2");
  } else if (fam == "u") {
    spec.family = RepFamily::U;
    spec.p = parse_int(arg);
    if (spec.p < 1) bad("u(m) needs m >= 1");
  } else if (fam == "su") {
    spec.family = RepFamily::Su;
    spec.p = parse_int(arg);
    if (spec.p < 2) bad("su(m) needs m >= 2");
  } else if (fam == "sp") {
    const auto plus = arg.find('+');
    if (plus == std::string::npos) {
      spec.family = RepFamily::Sp;
      spec.p = parse_int(arg);
    } else {
      if (arg.substr(plus + 1) != "sp1") bad("expected '+sp1' suffix");
      spec.family = RepFamily::SpSp1;
      spec.p = parse_int(arg.substr(0, plus));
    }
    if (spec.p < 1) bad("sp(m) needs m >= 1");
  } else if (fam == "adjoint-so") {
    spec.family = RepFamily::AdjointSo;
    spec.p = parse_int(arg);
    if (spec.p < 3) bad("adjoint-so(k) needs k >= 3");
  } else if (fam == "adjoint-su") {
    spec.family = RepFamily::AdjointSu;
    spec.p = parse_int(arg);
    if (spec.p < 2) bad("adjoint-su(k) needs k >= 2");
  } else if (fam == "soxso") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) bad("soxso needs two parameters 'p,q'");
    spec.family = RepFamily::SoxSo;
    spec.p = parse_int(arg.substr(0, comma));
    spec.q = parse_int(arg.substr(comma + 1));
    if (spec.p < 3 || spec.q < 3) bad("soxso(p,q) needs p,q >= 3");
  } else {
    bad("unknown family '" + fam + "'");
  }
  return spec;
}

std::string RepSpec::str() const {
  std::ostringstream os;
  switch (family) {
    case RepFamily::So: os << "so:" << p; break;
    case RepFamily::U: os << "u:" << p; break;
    case RepFamily::Su: os << "su:" << p; break;
    case RepFamily::Sp: os << "sp:" << p; break;
    case RepFamily::SpSp1: os << "sp:" << p << "+sp1"; break;
    case RepFamily::G2: os << "g2"; break;
    case RepFamily::Spin7: os << "spin7"; break;
    case RepFamily::Spin9: os << "spin9"; break;
    case RepFamily::AdjointSo: os << "adjoint-so:" << p; break;
    case RepFamily::AdjointSu: os << "adjoint-su:" << p; break;
    case RepFamily::SoxSo: os << "soxso:" << p << "," << q; break;
  }
  return os.str();
}

RVec LieRep::coords_of(const RMat& m) const {
  auto c = basis_span->coords(m.vec());
  if (!c) throw std::invalid_argument("coords_of: matrix outside the algebra span");
  return *c;
}

LieRep make_rep(RepSpec spec, std::size_t n, std::vector<RMat> basis, RMat gram) {
  LieRep rep;
  rep.spec = spec;
  rep.n = n;
  rep.basis = std::move(basis);
  rep.gram = std::move(gram);
  rep.gram_inv = inverse(rep.gram);
  auto span = std::make_shared<SpanSolver<Rat>>(n * n);
  for (const RMat& b : rep.basis)
    if (!span->add(b.vec()))
      throw std::invalid_argument("make_rep: basis matrices are linearly dependent");
  rep.basis_span = std::move(span);
  return rep;
}

LieRep build(const RepSpec& spec) {
  switch (spec.family) {
    case RepFamily::So: {
      require(spec.p >= 2, "so(n) needs n >= 2");
      const std::size_t n = spec.p;
      return make_rep(spec, n, so_wedge_basis(n), RMat::identity(n));
    }
    case RepFamily::U:
    case RepFamily::Su: {
      require(spec.p >= 1, "u(m) needs m >= 1");
      require(spec.family == RepFamily::U || spec.p >= 2, "su(m) needs m >= 2");
      const std::size_t m = spec.p, n = 2 * m;
      auto so = so_wedge_basis(n);
      const RMat j = complex_structure_j(m);
      const bool traceless = spec.family == RepFamily::Su;
      RMat cons = commute_constraint(so, {j}, traceless ? &j : nullptr);
      return make_rep(spec, n, cut_by_kernel(so, cons), RMat::identity(n));
    }
    case RepFamily::Sp:
    case RepFamily::SpSp1: {
      require(spec.p >= 1, "sp(m) needs m >= 1");
      const std::size_t m = spec.p, n = 4 * m;
      auto so = so_wedge_basis(n);
      auto js = quaternionic_triple(m);
      RMat cons = commute_constraint(so, {js[0], js[1], js[2]});
      auto basis = cut_by_kernel(so, cons);
      if (spec.family == RepFamily::SpSp1)
        for (const RMat& j : js) basis.push_back(j);
      return make_rep(spec, n, std::move(basis), RMat::identity(n));
    }
    case RepFamily::G2: {
      auto so = so_wedge_basis(7);
      RMat cons = form_stabilizer_constraint(g2_three_form(), so);
      return make_rep(spec, 7, cut_by_kernel(so, cons), RMat::identity(7));
    }
    case RepFamily::Spin7: {
      auto so = so_wedge_basis(8);
      RMat cons = form_stabilizer_constraint(spin7_four_form(), so);
      return make_rep(spec, 8, cut_by_kernel(so, cons), RMat::identity(8));
    }
    case RepFamily::Spin9: {
      auto gs = spin9_gammas();
      std::vector<RMat> basis;
      basis.reserve(36);
      for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j) basis.push_back(gs[i] * gs[j]);
      return make_rep(spec, 16, std::move(basis), RMat::identity(16));
    }
    case RepFamily::AdjointSo: {
      require(spec.p >= 3, "adjoint-so(k) needs k >= 3");
      const std::size_t k = spec.p;
      auto so = so_wedge_basis(k);
      const std::size_t n = so.size();
      // coordinates of a so(k) matrix over the wedge basis read off directly
      auto so_coords = [&](const RMat& m) {
        RVec c(n, Rat(0));
        for (auto [i, j] : pair_list(k)) c[pair_index(k, i, j)] = m(j, i);
        return c;
      };
      std::vector<RMat> ad(n, RMat(n, n));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          ad[a].set_col(b, so_coords(bracket(so[a], so[b])));
      // basis is orthonormal for -tr(XY)/2, so the invariant gram is identity
      return make_rep(spec, n, std::move(ad), RMat::identity(n));
    }
    case RepFamily::AdjointSu: {
      require(spec.p >= 2, "adjoint-su(k) needs k >= 2");
      const std::size_t k = spec.p;
      auto su = su_matrix_basis(k);
      const std::size_t n = su.mats.size();
      SpanSolver<CRat> span(k * k);
      for (const CMat& b : su.mats) span.add(b.vec());
      auto su_coords = [&](const CMat& m) {
        auto c = span.coords(m.vec());
        if (!c) throw std::logic_error("adjoint-su: bracket left the algebra");
        RVec r(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (!is_zero((*c)[i].im))
            throw std::logic_error("adjoint-su: non-real structure constant");
          r[i] = (*c)[i].re;
        }
        return r;
      };
      std::vector<RMat> ad(n, RMat(n, n));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          ad[a].set_col(b, su_coords(bracket(su.mats[a], su.mats[b])));
      // invariant form -tr(XY)/2; real because the basis is anti-Hermitian
      RMat gram(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
          CRat t = (su.mats[a] * su.mats[b]).trace();
          if (!is_zero(t.im)) throw std::logic_error("adjoint-su: complex trace form");
          gram(a, b) = gram(b, a) = -t.re / 2;
        }
      return make_rep(spec, n, std::move(ad), std::move(gram));
    }
    case RepFamily::SoxSo: {
      require(spec.p >= 3 && spec.q >= 3, "soxso(p,q) needs p,q >= 3");
      const std::size_t p = spec.p, q = spec.q, n = p * q;
      const RMat ip = RMat::identity(p), iq = RMat::identity(q);
      std::vector<RMat> basis;
      for (const RMat& a : so_wedge_basis(p)) basis.push_back(kron(a, iq));
      for (const RMat& b : so_wedge_basis(q)) basis.push_back(kron(ip, b));
      return make_rep(spec, n, std::move(basis), RMat::identity(n));
    }
  }
  throw std::invalid_argument("build: unhandled representation family");
}

bool closure_check(const LieRep& rep) {
  for (std::size_t i = 0; i < rep.dim(); ++i)
    for (std::size_t j = i; j < rep.dim(); ++j)
      if (!rep.in_span(bracket(rep.basis[i], rep.basis[j]))) return false;
  return true;
}

bool metric_skew_check(const LieRep& rep) {
  for (const RMat& b : rep.basis)
    if (!(b.transposed() * rep.gram + rep.gram * b).is_zero_mat()) return false;
  return true;
}

Subspace commutant(const LieRep& rep) {
  const std::size_t n = rep.n, nn = n * n;
  std::vector<RMat> cur;
  cur.reserve(nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RMat e(n, n);
      e(i, j) = 1;
      cur.push_back(std::move(e));
    }
  for (const RMat& b : rep.basis) {
    if (cur.empty()) break;
    RMat m(nn, cur.size());
    for (std::size_t k = 0; k < cur.size(); ++k) m.set_col(k, bracket(b, cur[k]).vec());
    RMat ker = kernel_basis_mat(m);
    if (ker.cols() == cur.size()) continue;
    std::vector<RMat> next;
    next.reserve(ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      RMat x(n, n);
      for (std::size_t k = 0; k < cur.size(); ++k) {
        if (is_zero(ker(k, c))) continue;
        RMat t = cur[k];
        t *= ker(k, c);
        x += t;
      }
      next.push_back(std::move(x));
    }
    cur = std::move(next);
  }
  RMat cols(nn, cur.size());
  for (std::size_t k = 0; k < cur.size(); ++k) cols.set_col(k, cur[k].vec());
  return Subspace::from_columns(nn, cols);
}

std::vector<std::vector<RVec>> structure_constants(const LieRep& rep) {
  const std::size_t d = rep.dim();
  std::vector<std::vector<RVec>> f(d, std::vector<RVec>(d));
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t a = 0; a < d; ++a)
      f[m][a] = rep.coords_of(bracket(rep.basis[m], rep.basis[a]));
  return f;
}

}  // namespace curvspace
