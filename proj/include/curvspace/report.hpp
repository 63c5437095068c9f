#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvspace/curvature.hpp"

namespace curvspace {

/// Machine-readable summary of one representation: dimensions of the
/// curvature component spaces plus named structural checks.
struct Report {
  std::string algebra;
  std::size_t n = 0;
  std::size_t dim_h = 0;
  std::optional<std::size_t> dim_p, dim_p0, dim_p1;
  std::optional<std::size_t> dim_r, dim_r0, dim_r1, dim_rprime;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> notes;

  bool all_checks_pass() const;
  std::string to_json() const;  // fixed key order, deterministic bytes
  std::string to_csv() const;
  std::string to_text() const;
};

Report make_rep_report(const LieRep& rep);
Report make_pspace_report(const LieRep& rep);
Report make_rspace_report(const LieRep& rep);

/// One verified row of the dimension table.
struct TableRowResult {
  Report report;
  bool pass = true;
  std::vector<std::string> diffs;  // "field: expected X, got Y"
};

/// Specs of all rows in the built-in verification table, in run order.
std::vector<std::string> verify_table_row_names();

/// Runs one row; throws std::invalid_argument for unknown row names.
TableRowResult verify_table_row(const std::string& spec);

struct TableSummary {
  std::vector<TableRowResult> rows;
  bool all_pass = true;

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

/// Empty selection runs every row.
TableSummary verify_table(const std::vector<std::string>& rows = {});

}  // namespace curvspace
