#include <doctest.h>

#include "curvspace/report.hpp"

using namespace curvspace;

TEST_CASE("report JSON is deterministic and byte-stable") {
  LieRep so3 = build("so:3");
  Report a = make_pspace_report(so3);
  Report b = make_pspace_report(build("so:3"));
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_json() ==
        R"({"algebra":"so:3","n":3,"dim_h":3,"dim_P":8,"dim_P0":5,"dim_P1":3,)"
        R"("checks":[{"name":"closure","pass":true},{"name":"skewness","pass":true}]})");
}

TEST_CASE("csv output quotes fields containing commas") {
  Report r = make_rep_report(build("soxso:3,3"));
  const std::string csv = r.to_csv();
  CHECK(csv.find("\"soxso:3,3\"") != std::string::npos);
}

TEST_CASE("verify-table row: so(2) matches the published values") {
  TableRowResult row = verify_table_row("so:2");
  CHECK(row.pass);
  CHECK(*row.report.dim_p1 == 2);
  CHECK(*row.report.dim_p0 == 0);
  CHECK(row.diffs.empty());
}

TEST_CASE("verify-table row: soxso has P1 isomorphic to R^9 and R = R1") {
  TableRowResult row = verify_table_row("soxso:3,3");
  CHECK(row.pass);
  CHECK(*row.report.dim_p1 == 9);
  CHECK(*row.report.dim_p0 == 0);
  CHECK(*row.report.dim_r == 1);
  CHECK(*row.report.dim_r1 == 1);
}

TEST_CASE("verify-table rejects unknown rows") {
  CHECK_THROWS_AS(verify_table_row("so:999"), std::invalid_argument);
  CHECK_THROWS_AS(verify_table({"nonsense"}), std::invalid_argument);
}

TEST_CASE("u(2) row flags the published-value mismatch without failing") {
  TableRowResult row = verify_table_row("u:2");
  CHECK(row.pass);
  REQUIRE(row.report.notes.size() == 1);
  CHECK(row.report.notes[0].find("prints 4") != std::string::npos);
}
