#include <set>
#include <sstream>

#include "doctest.h"
#include "wqsdc/reports.hpp"
#include "wqsdc/svg.hpp"
#include "wqsdc/sweeptable.hpp"

TEST_SUITE("reports") {

TEST_CASE("csv writing and parsing round-trip to the printed digits") {
  wqsdc::SweepTable t;
  t.columns = {"x", "y"};
  t.rows = {{0.1, 1.0 / 3.0}, {0.2, 0.6361413917488912}};
  t.warnings = {"window narrows past 0.17"};
  std::string text = wqsdc::to_csv_string(t);
  CHECK(text.find("# window narrows past 0.17\n") == 0);
  CHECK(text.find("x,y\n") != std::string::npos);

  wqsdc::SweepTable back = wqsdc::read_csv_string(text);
  REQUIRE(back.columns == t.columns);
  REQUIRE(back.rows.size() == t.rows.size());
  REQUIRE(back.warnings.size() == 1);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      CHECK(std::abs(back.rows[r][c] - t.rows[r][c]) <= 1e-11);
    }
  }
  CHECK(back.column_index("y") == 1);
  CHECK_THROWS_AS(back.column_index("z"), std::out_of_range);
  CHECK_THROWS_AS(wqsdc::read_csv_string("x,y\n1.0\n"), std::runtime_error);
}

TEST_CASE("format_value prints 12 significant digits at most") {
  CHECK(wqsdc::format_value(0.5) == "0.5");
  CHECK(wqsdc::format_value(1.0 / 3.0) == "0.333333333333");
  CHECK(wqsdc::format_value(4.0) == "4");
}

TEST_CASE("svg chart is deterministic and self-contained") {
  wqsdc::SweepTable t;
  t.columns = {"x", "y"};
  for (int i = 0; i <= 10; ++i) {
    double x = i / 10.0;
    t.rows.push_back({x, x * x});
  }
  std::string a = wqsdc::render_line_chart(t, "x", {"y"}, "squares");
  std::string b = wqsdc::render_line_chart(t, "x", {"y"}, "squares");
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("polyline") != std::string::npos);
  CHECK(a.find("squares") != std::string::npos);

  wqsdc::SweepTable empty;
  empty.columns = {"x", "y"};
  std::string e = wqsdc::render_line_chart(empty, "x", {"y"}, "none");
  CHECK(e.find("no data") != std::string::npos);
}

TEST_CASE("selfcheck covers the quoted-form reconciliations and passes") {
  wqsdc::SelfCheckReport report = wqsdc::run_selfcheck(0);
  CHECK(report.entries.size() >= 6);
  CHECK(report.all_pass);
  std::set<std::string> ids;
  bool has_equivalence = false, has_discrepancy = false;
  for (const auto& e : report.entries) {
    CHECK(!e.id.empty());
    CHECK((e.kind == "equivalence" || e.kind == "discrepancy"));
    if (e.kind == "equivalence") has_equivalence = true;
    if (e.kind == "discrepancy") has_discrepancy = true;
    CHECK(e.pass);
    CHECK(ids.insert(e.id).second);
  }
  CHECK(has_equivalence);
  CHECK(has_discrepancy);
}

TEST_CASE("selfcheck output is deterministic per seed") {
  std::string a = wqsdc::selfcheck_to_json(wqsdc::run_selfcheck(0)).dump(2);
  std::string b = wqsdc::selfcheck_to_json(wqsdc::run_selfcheck(0)).dump(2);
  CHECK(a == b);
}

TEST_CASE("selfcheck text report labels every entry") {
  wqsdc::SelfCheckReport report = wqsdc::run_selfcheck(0);
  std::string text = wqsdc::selfcheck_to_text(report);
  CHECK(text.find("reconciliation") != std::string::npos);
  for (const auto& e : report.entries) {
    CHECK(text.find(e.id) != std::string::npos);
  }
  CHECK(text.find("[PASS]") != std::string::npos);
}

TEST_CASE("selfcheck json carries the evidence blocks") {
  nlohmann::ordered_json j =
      wqsdc::selfcheck_to_json(wqsdc::run_selfcheck(0));
  REQUIRE(j.contains("entries"));
  REQUIRE(j.contains("all_pass"));
  for (const auto& e : j["entries"]) {
    CHECK(e.contains("id"));
    CHECK(e.contains("kind"));
    CHECK(e.contains("printed_form"));
    CHECK(e.contains("adopted_form"));
    CHECK(e.contains("evidence"));
    CHECK(e.contains("pass"));
  }
}

}  // TEST_SUITE
