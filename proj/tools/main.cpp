#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "curvspace/complexrep.hpp"
#include "curvspace/lorentz.hpp"
#include "curvspace/report.hpp"

namespace {

using curvspace::Rat;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void emit_report(const curvspace::Report& report, const std::string& format) {
  if (format == "json")
    std::cout << report.to_json() << "\n";
  else if (format == "csv")
    std::cout << report.to_csv();
  else
    std::cout << report.to_text();
}

std::pair<std::string, int> split_case(const std::string& s) {
  const auto sep = s.find_first_of(":,");
  if (sep == std::string::npos) return {s, 0};
  const std::string tail = s.substr(sep + 1);
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad case parameter '" + tail + "'");
  return {s.substr(0, sep), std::stoi(tail)};
}

int run_obstruction(const std::string& case_str, const std::string& format) {
  auto [token, param] = split_case(case_str);
  const curvspace::ComplexCase kind = curvspace::complex_case_parse(token);
  if (kind != curvspace::ComplexCase::Sl8Lambda4 && param == 0)
    throw std::invalid_argument("case '" + token + "' needs a parameter, e.g. '" +
                                token + ":3'");
  curvspace::ComplexRep rep = curvspace::build_complex(kind, param);
  const curvspace::CRat value = curvspace::obstruction_at_paper_triple(rep);
  const bool nonzero = !curvspace::is_zero(value);
  if (format == "json") {
    ordered_json j;
    j["case"] = curvspace::complex_case_str(kind);
    if (param != 0) j["param"] = param;
    j["dim_V"] = rep.dim_v;
    j["dim_h"] = rep.dim_h();
    j["obstruction"] = curvspace::rat_str(value);
    j["verdict"] = nonzero ? "highest vector not in P(h)" : "obstruction vanished";
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "case " << curvspace::complex_case_str(kind);
    if (param != 0) std::cout << ":" << param;
    std::cout << "  obstruction = " << curvspace::rat_str(value) << "\n";
    std::cout << (nonzero ? "verdict: highest vector not in P(h)"
                          : "verdict: obstruction vanished")
              << "\n";
  }
  return nonzero ? kExitOk : kExitMismatch;
}

int run_prolongation(const std::string& spec, const std::string& format) {
  std::size_t dim = 0;
  std::string field = "real";
  if (spec.rfind("spc:", 0) == 0) {
    const int m = std::stoi(spec.substr(4));
    if (m < 1) throw std::invalid_argument("spc:m needs m >= 1");
    auto basis = curvspace::sp_standard_basis(m);
    dim = curvspace::kernel_basis_mat(
              curvspace::prolongation_matrix<curvspace::CRat>(2 * m, basis))
              .cols();
    field = "complex";
  } else {
    curvspace::LieRep rep = curvspace::build(spec);
    dim = curvspace::prolongation(rep).dim();
  }
  if (format == "json") {
    ordered_json j;
    j["algebra"] = spec;
    j["field"] = field;
    j["dim_prolongation"] = dim;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "first prolongation of " << spec << ": " << field << " dim " << dim
              << "\n";
  }
  return kExitOk;
}

int run_assemble(const std::string& path, const std::string& check,
                 const std::string& format) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  curvspace::AssembleInput input = curvspace::parse_assemble_input(buf.str());
  curvspace::LieRep rep = curvspace::build(input.spec);
  curvspace::LorentzCurv data = curvspace::make_lorentz_data(
      rep, curvspace::CurvTensor(rep, input.r0), curvspace::PMap(rep, input.p), input.t);
  curvspace::WittFrame frame = curvspace::WittFrame::make(rep.n);
  curvspace::LorentzTensor tensor = curvspace::assemble(frame, data);

  const bool want_bianchi = check == "bianchi" || check == "all";
  const bool want_einstein = check == "einstein" || check == "all";

  bool structural_ok = true;
  ordered_json j;
  j["algebra"] = input.spec.str();
  j["n"] = rep.n;
  if (want_bianchi) {
    const bool bianchi = curvspace::full_bianchi_holds(tensor);
    const bool symmetry = curvspace::pair_symmetry_holds(tensor);
    const bool holonomy = curvspace::holonomy_containment(
        tensor, curvspace::holonomy_algebra_span(frame, rep));
    structural_ok = structural_ok && bianchi && symmetry && holonomy;
    j["bianchi"] = bianchi;
    j["pair_symmetry"] = symmetry;
    j["holonomy_containment"] = holonomy;
  }
  const curvspace::RMat ric = curvspace::ricci_full(tensor);
  if (want_einstein) {
    // the four Ricci identities against the component computations
    bool ricci_ok = true;
    const curvspace::RMat ric0 = curvspace::ricci(data.r0);
    const curvspace::RVec rt = curvspace::ricci_tilde(data.p);
    const std::size_t n = rep.n;
    for (std::size_t b = 0; b < n + 2 && ricci_ok; ++b)
      ricci_ok = curvspace::is_zero(ric(0, b)) && curvspace::is_zero(ric(b, 0));
    for (std::size_t i = 0; i < n && ricci_ok; ++i)
      for (std::size_t k = 0; k < n && ricci_ok; ++k)
        ricci_ok = ric(i + 1, k + 1) == ric0(i, k);
    for (std::size_t i = 0; i < n && ricci_ok; ++i)
      ricci_ok = ric(i + 1, n + 1) == rt[i];
    ricci_ok = ricci_ok && ric(n + 1, n + 1) == data.t.trace();
    structural_ok = structural_ok && ricci_ok;
    j["ricci_identities"] = ricci_ok;
    j["einstein_lambda0"] = curvspace::einstein_check(tensor, Rat(0));
    j["note"] =
        "an Einstein verdict forces lambda = 0: Ric(p,q) = 0 while g(p,q) = 1";
  }
  ordered_json rm = ordered_json::array();
  for (std::size_t i = 0; i < rep.n + 2; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < rep.n + 2; ++k)
      row.push_back(curvspace::rat_str(ric(i, k)));
    rm.push_back(std::move(row));
  }
  j["ricci"] = std::move(rm);

  if (format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "assembled curvature over " << input.spec.str() << " (n = " << rep.n
              << ")\n";
    for (auto& [key, val] : j.items())
      if (val.is_boolean())
        std::cout << "  " << key << ": " << (val.get<bool>() ? "pass" : "FAIL") << "\n";
    std::cout << "  Ric(q,q) = " << curvspace::rat_str(ric(rep.n + 1, rep.n + 1))
              << "\n";
    if (j.contains("note")) std::cout << "  note: " << j["note"].get<std::string>() << "\n";
  }
  return structural_ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvspace: exact curvature component spaces of Lorentzian holonomy algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  bool oracle = false;
  app.add_flag("--oracle", oracle,
               "force the dense serial elimination path (this build has exactly one "
               "elimination path, which already is the dense serial one)");

  std::string rep_spec, pspace_spec, rspace_spec, prolong_spec, obstruction_case;
  std::string assemble_path, assemble_check = "all";
  std::vector<std::string> table_rows;

  auto* rep_cmd = app.add_subcommand("rep", "build a representation and report its structure");
  rep_cmd->add_option("spec", rep_spec, "representation spec, e.g. so:5, g2, soxso:3,3")
      ->required();

  auto* pspace_cmd = app.add_subcommand("pspace", "dimensions of P(h) = P0 + P1");
  pspace_cmd->add_option("spec", pspace_spec)->required();

  auto* rspace_cmd = app.add_subcommand("rspace", "dimensions of R(h) = R0 + R1 + R'");
  rspace_cmd->add_option("spec", rspace_spec)->required();

  auto* table_cmd = app.add_subcommand("verify-table", "verify the dimension table");
  table_cmd->add_option("--rows", table_rows, "subset of rows to verify");

  auto* obstruction_cmd =
      app.add_subcommand("obstruction", "highest-vector obstruction scalar");
  obstruction_cmd
      ->add_option("case", obstruction_case, "sp:n, so-even:m, so-odd:m, or sl8")
      ->required();

  auto* assemble_cmd =
      app.add_subcommand("assemble", "assemble a Lorentzian curvature value from JSON");
  assemble_cmd->add_option("input", assemble_path, "JSON input file")->required();
  assemble_cmd->add_option("--check", assemble_check)
      ->check(CLI::IsMember({"einstein", "bianchi", "all"}));

  auto* prolong_cmd = app.add_subcommand("prolongation", "first prolongation dimension");
  prolong_cmd->add_option("spec", prolong_spec, "representation spec or spc:m")
      ->required();

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rep_cmd->parsed()) {
      emit_report(curvspace::make_rep_report(curvspace::build(rep_spec)), format);
      return kExitOk;
    }
    if (pspace_cmd->parsed()) {
      emit_report(curvspace::make_pspace_report(curvspace::build(pspace_spec)), format);
      return kExitOk;
    }
    if (rspace_cmd->parsed()) {
      emit_report(curvspace::make_rspace_report(curvspace::build(rspace_spec)), format);
      return kExitOk;
    }
    if (table_cmd->parsed()) {
      curvspace::TableSummary summary = curvspace::verify_table(table_rows);
      if (format == "json")
        std::cout << summary.to_json() << "\n";
      else if (format == "csv")
        std::cout << summary.to_csv();
      else
        std::cout << summary.to_text();
      return summary.all_pass ? kExitOk : kExitMismatch;
    }
    if (obstruction_cmd->parsed()) return run_obstruction(obstruction_case, format);
    if (assemble_cmd->parsed())
      return run_assemble(assemble_path, assemble_check, format);
    if (prolong_cmd->parsed()) return run_prolongation(prolong_spec, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
