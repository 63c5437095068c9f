#include "curvspace/lorentz.hpp"

#include <json.hpp>

#include <stdexcept>

namespace curvspace {

WittFrame WittFrame::make(std::size_t n) {
  WittFrame f;
  f.n = n;
  f.gram = RMat(n + 2, n + 2);
  f.gram(0, n + 1) = 1;
  f.gram(n + 1, 0) = 1;
  for (std::size_t i = 1; i <= n; ++i) f.gram(i, i) = 1;
  return f;
}

RVec WittFrame::embed_vec(const RVec& v) const {
  RVec out(n + 2, Rat(0));
  for (std::size_t i = 0; i < n; ++i) out[i + 1] = v[i];
  return out;
}

RMat WittFrame::embed_so(const RMat& a) const {
  RMat out(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i + 1, j + 1) = a(i, j);
  return out;
}

SimAlgebra sim_basis(std::size_t n) {
  if (n < 1) throw std::invalid_argument("sim_basis: n >= 1 required");
  WittFrame f = WittFrame::make(n);
  SimAlgebra s;
  s.n = n;
  s.basis.push_back(wedge_mat(f.q(), f.p(), f.gram));  // grading element
  for (auto [i, j] : pair_list(n))
    s.basis.push_back(wedge_mat(f.e(i), f.e(j), f.gram));
  for (std::size_t i = 0; i < n; ++i)
    s.basis.push_back(wedge_mat(f.p(), f.e(i), f.gram));
  return s;
}

LorentzCurv make_lorentz_data(const LieRep& rep, CurvTensor r0, PMap p, RMat t) {
  if (r0.rep != &rep || p.rep != &rep)
    throw std::invalid_argument("lorentz data built over a different representation");
  if (t.rows() != rep.n || t.cols() != rep.n || !t.is_symmetric())
    throw std::invalid_argument("T not symmetric");
  if (!is_zero_vec(cyclic_defect(p)))
    throw std::invalid_argument("P fails the cyclic identity");
  if (!is_zero_vec(bianchi_matrix(rep).apply(r0.flat())))
    throw std::invalid_argument("R0 fails the first Bianchi identity");
  LorentzCurv d;
  d.rep = &rep;
  d.r0 = std::move(r0);
  d.p = std::move(p);
  d.t = std::move(t);
  return d;
}

RMat LorentzTensor::value(std::size_t a, std::size_t b) const {
  const std::size_t dim = frame.n + 2;
  if (a == b) return RMat(dim, dim);
  if (a < b) return values[pair_index(dim, a, b)];
  return -values[pair_index(dim, b, a)];
}

LorentzTensor assemble(const WittFrame& frame, const LorentzCurv& data) {
  const LieRep& rep = *data.rep;
  if (rep.n != frame.n) throw std::invalid_argument("assemble: frame dimension mismatch");
  const std::size_t n = frame.n, dim = n + 2;
  LorentzTensor t;
  t.frame = frame;
  t.values.assign(pair_count(dim), RMat(dim, dim));

  std::vector<RMat> pv;  // P(e_i)
  pv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pv.push_back(data.p.value_on_basis(i));

  // R(u,v) = R0(u,v) + p ^ (P(u)v - P(v)u)
  for (auto [i, j] : pair_list(n)) {
    RMat val = frame.embed_so(data.r0.value(i, j));
    const RVec w = pv[i].col(j) - pv[j].col(i);
    val += wedge_mat(frame.p(), frame.embed_vec(w), frame.gram);
    t.values[pair_index(dim, i + 1, j + 1)] = std::move(val);
  }
  // R(u,q) = P(u) - p ^ T(u)
  for (std::size_t i = 0; i < n; ++i) {
    RMat val = frame.embed_so(pv[i]);
    val -= wedge_mat(frame.p(), frame.embed_vec(data.t.col(i)), frame.gram);
    t.values[pair_index(dim, i + 1, n + 1)] = std::move(val);
  }
  // R(p, .) = 0 already holds: pairs (0, beta) stay zero
  return t;
}

bool full_bianchi_holds(const LorentzTensor& t) {
  const std::size_t dim = t.frame.n + 2;
  for (const auto& tri : triple_list(dim)) {
    const auto [a, b, c] = std::tuple{tri[0], tri[1], tri[2]};
    RVec sum = t.value(a, b).col(c);
    sum = sum + t.value(b, c).col(a);
    sum = sum + t.value(c, a).col(b);
    if (!is_zero_vec(sum)) return false;
  }
  return true;
}

bool pair_symmetry_holds(const LorentzTensor& t) {
  const std::size_t dim = t.frame.n + 2;
  const auto pairs = pair_list(dim);
  std::vector<RMat> gv;
  gv.reserve(pairs.size());
  for (auto [a, b] : pairs) gv.push_back(t.frame.gram * t.value(a, b));
  for (std::size_t x = 0; x < pairs.size(); ++x)
    for (std::size_t y = x; y < pairs.size(); ++y) {
      const auto [a, b] = pairs[x];
      const auto [c, d] = pairs[y];
      if (!(gv[x](d, c) == gv[y](b, a))) return false;
    }
  return true;
}

RMat ricci_full(const LorentzTensor& t) {
  const std::size_t dim = t.frame.n + 2;
  RMat ric(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      Rat sum(0);
      for (std::size_t g = 0; g < dim; ++g) sum += t.value(a, g)(g, b);
      ric(a, b) = sum;
    }
  return ric;
}

bool einstein_check(const LorentzTensor& t, const Rat& lambda) {
  RMat expect = t.frame.gram;
  expect *= lambda;
  return ricci_full(t) == expect;
}

Subspace holonomy_algebra_span(const WittFrame& frame, const LieRep& rep) {
  const std::size_t dim = frame.n + 2;
  RMat cols(dim * dim, rep.dim() + frame.n);
  std::size_t c = 0;
  for (const RMat& b : rep.basis) cols.set_col(c++, frame.embed_so(b).vec());
  for (std::size_t i = 0; i < frame.n; ++i)
    cols.set_col(c++, wedge_mat(frame.p(), frame.e(i), frame.gram).vec());
  return Subspace::from_columns(dim * dim, cols);
}

bool holonomy_containment(const LorentzTensor& t, const Subspace& alg) {
  for (const RMat& v : t.values)
    if (!alg.contains(v.vec())) return false;
  return true;
}

namespace {

std::vector<RMat> lorentz_algebra_basis(const WittFrame& frame, const LieRep& rep) {
  std::vector<RMat> basis;
  basis.reserve(rep.dim() + frame.n);
  for (const RMat& b : rep.basis) basis.push_back(frame.embed_so(b));
  for (std::size_t i = 0; i < frame.n; ++i)
    basis.push_back(wedge_mat(frame.p(), frame.e(i), frame.gram));
  return basis;
}

}  // namespace

Subspace assembly_space(const WittFrame& frame, const LieRep& rep) {
  const std::size_t dim = frame.n + 2;
  const auto alg = lorentz_algebra_basis(frame, rep);
  const std::size_t nd = alg.size();
  const auto pairs = pair_list(dim);
  const auto triples = triple_list(dim);
  // rows: Bianchi (dim per triple) + vanishing of the p-pairs
  RMat m(triples.size() * dim + (dim - 1) * nd, pairs.size() * nd);
  for (std::size_t r = 0; r < triples.size(); ++r) {
    const auto [a, b, c] = std::tuple{triples[r][0], triples[r][1], triples[r][2]};
    for (std::size_t l = 0; l < nd; ++l)
      for (std::size_t x = 0; x < dim; ++x) {
        m(r * dim + x, pair_index(dim, a, b) * nd + l) += alg[l](x, c);
        m(r * dim + x, pair_index(dim, b, c) * nd + l) += alg[l](x, a);
        m(r * dim + x, pair_index(dim, a, c) * nd + l) -= alg[l](x, b);
      }
  }
  std::size_t row = triples.size() * dim;
  for (std::size_t b = 1; b < dim; ++b)
    for (std::size_t l = 0; l < nd; ++l, ++row)
      m(row, pair_index(dim, 0, b) * nd + l) = 1;
  return kernel_subspace(m);
}

RVec assembly_coords(const LorentzTensor& t, const WittFrame& frame, const LieRep& rep) {
  const std::size_t dim = frame.n + 2;
  const auto alg = lorentz_algebra_basis(frame, rep);
  SpanSolver<Rat> span(dim * dim);
  for (const RMat& b : alg) span.add(b.vec());
  const auto pairs = pair_list(dim);
  RVec out(pairs.size() * alg.size(), Rat(0));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto c = span.coords(t.values[p].vec());
    if (!c) throw std::invalid_argument("assembly_coords: value escapes the algebra");
    for (std::size_t l = 0; l < alg.size(); ++l) out[p * alg.size() + l] = (*c)[l];
  }
  return out;
}

namespace {

Rat json_rat(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw std::invalid_argument("expected an exact rational string at " + where);
}

RMat json_matrix(const nlohmann::json& v, std::size_t rows, std::size_t cols,
                 const std::string& name) {
  if (!v.is_array() || v.size() != rows)
    throw std::invalid_argument(name + ": expected " + std::to_string(rows) + " rows");
  RMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& r = v[i];
    if (!r.is_array() || r.size() != cols)
      throw std::invalid_argument(name + ": row " + std::to_string(i) + " needs " +
                                  std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = json_rat(r[j], name + "[" + std::to_string(i) + "][" +
                                   std::to_string(j) + "]");
  }
  return m;
}

}  // namespace

AssembleInput parse_assemble_input(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  for (const char* key : {"algebra", "R0", "P", "T"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("missing key '") + key + "'");
  AssembleInput in;
  if (!j["algebra"].is_string())
    throw std::invalid_argument("'algebra' must be a representation spec string");
  in.spec = RepSpec::parse(j["algebra"].get<std::string>());
  LieRep rep = build(in.spec);  // for the shape checks only
  in.r0 = json_matrix(j["R0"], pair_count(rep.n), rep.dim(), "R0");
  in.p = json_matrix(j["P"], rep.n, rep.dim(), "P");
  in.t = json_matrix(j["T"], rep.n, rep.n, "T");
  return in;
}

}  // namespace curvspace
