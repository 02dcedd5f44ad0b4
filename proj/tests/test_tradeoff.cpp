#include <cmath>
#include <random>

#include "doctest.h"
#include "wqsdc/cloning.hpp"
#include "wqsdc/tradeoff.hpp"

using wqsdc::CloneSpec;
using wqsdc::Cx;

TEST_SUITE("tradeoff") {

TEST_CASE("dbar in free coordinates at a pinned point") {
  CHECK(wqsdc::dbar_from_ps(0.3, 0.8, 0.1, 0.1) ==
        doctest::Approx(0.3301183127572016).epsilon(1e-14));
}

TEST_CASE("dbar on the constrained manifold equals the cloner average") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    double a = u(rng), b = u(rng), c = u(rng);
    double s = a + b + c;
    double A = a / s, B = b / s, G = c / s;
    double ps = 4.0 * A * G;
    double via_ps = wqsdc::dbar_from_ps(ps, B, A, G);
    CloneSpec spec{Cx{std::sqrt(A), 0.0}, Cx{std::sqrt(G), 0.0}};
    CHECK(std::abs(via_ps - wqsdc::average_hs_distance(spec)) < 1e-12);
    CHECK(via_ps >= 1.0 / 3.0 - 1e-12);
  }
}

TEST_CASE("window endpoints zero the margin and respect the threshold") {
  wqsdc::PsWindow w = wqsdc::ps_window(0.8);
  REQUIRE(!w.empty);
  CHECK(w.lo == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(w.hi == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(std::abs(wqsdc::window_margin(w.lo, 0.8)) < 1e-10);
  CHECK(std::abs(wqsdc::window_margin(w.hi, 0.8)) < 1e-10);
  CHECK(wqsdc::window_margin(0.5 * (w.lo + w.hi), 0.8) < 0.0);

  CHECK(wqsdc::ps_window(0.79).empty);
  CHECK(wqsdc::kWindowThresholdBetaSq ==
        doctest::Approx(0.7928932188134524).epsilon(1e-15));
  wqsdc::PsWindow degenerate = wqsdc::ps_window(wqsdc::kWindowThresholdBetaSq);
  REQUIRE(!degenerate.empty);
  CHECK(std::abs(degenerate.lo - degenerate.hi) < 1e-9);
  CHECK(degenerate.lo ==
        doctest::Approx(0.2928932188134524).epsilon(1e-9));
}

TEST_CASE("window is never reachable by normalized weights") {
  auto budget = wqsdc::alpha_gamma_budget();
  CHECK(budget[0] == 0.0);
  CHECK(budget[1] ==
        doctest::Approx(0.20710678118654746).epsilon(1e-14));
  double max_gap = 0.0;
  for (int i = 1; i < 1000; ++i) {
    double beta_sq = static_cast<double>(i) / 1000.0;
    wqsdc::PsWindow w = wqsdc::ps_window(beta_sq);
    if (w.empty) continue;
    double reach = wqsdc::max_constrained_ps(beta_sq);
    max_gap = std::max(max_gap, reach - w.lo);
  }
  CHECK(max_gap <= 1e-12);
}

TEST_CASE("max constrained ps is the balanced split") {
  CHECK(wqsdc::max_constrained_ps(0.2) ==
        doctest::Approx(0.64).epsilon(1e-14));
  CHECK(wqsdc::max_constrained_ps(0.8) ==
        doctest::Approx(0.04).epsilon(1e-14));
}

TEST_CASE("fill in free coordinates matches the closed concurrence fill") {
  double f = wqsdc::fill_from_ps(0.81, 0.1);
  CHECK(f == doctest::Approx(0.6361413917488912).epsilon(1e-13));
  CHECK(f == doctest::Approx(
                 wqsdc::concurrence_fill_closed(0.45, 0.1, 0.45).fill)
                 .epsilon(1e-12));
  wqsdc::ConcurrenceTriple t =
      wqsdc::cfill_components(0.81, 0.45, 0.1, 0.45);
  CHECK(t.c2_a_bc == doctest::Approx(0.99).epsilon(1e-12));
  CHECK(t.c2_b_ac == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(t.c2_c_ab == doctest::Approx(0.99).epsilon(1e-12));
}

TEST_CASE("fill bounds at pinned weights") {
  CHECK(wqsdc::fill_lower_bound(0.1) ==
        doctest::Approx(0.19595917942265426).epsilon(1e-13));
  CHECK(wqsdc::fill_upper_bound(0.1) ==
        doctest::Approx(0.6802041281625645).epsilon(1e-13));
  CHECK(wqsdc::fill_lower_bound(0.17) ==
        doctest::Approx(0.3579756209637703).epsilon(1e-13));
  CHECK(wqsdc::fill_upper_bound(0.17) ==
        doctest::Approx(0.8890486793626253).epsilon(1e-13));
  CHECK(wqsdc::fill_lower_bound(0.017) ==
        doctest::Approx(0.02285388407945095).epsilon(1e-13));
  CHECK(wqsdc::fill_upper_bound(0.017) ==
        doctest::Approx(0.2802151051762778).epsilon(1e-13));
  for (int i = 1; i < 100; ++i) {
    double b = static_cast<double>(i) / 100.0;
    CHECK(wqsdc::fill_upper_bound(b) >= wqsdc::fill_lower_bound(b));
  }
}

TEST_CASE("numeric inversion runs the cubic backwards") {
  double fill = wqsdc::fill_from_ps(0.81, 0.1);
  wqsdc::NumericRoot root = wqsdc::ps_from_fill(fill, 0.1);
  CHECK(std::abs(root.ps - 0.81) < 1e-8);
  CHECK(std::abs(root.residual) < 1e-12);
  CHECK(std::abs(wqsdc::cubic_value(root.ps, fill, 0.1)) < 1e-12);

  // At the lower bound the root is exactly a third of the middle
  // squared concurrence.
  wqsdc::NumericRoot low =
      wqsdc::ps_from_fill(wqsdc::fill_lower_bound(0.1), 0.1);
  CHECK(low.ps == doctest::Approx(0.12).epsilon(1e-9));

  wqsdc::NumericRoot zero = wqsdc::ps_from_fill(0.0, 0.1);
  CHECK(zero.ps == 0.0);
  CHECK(zero.residual == 0.0);
}

TEST_CASE("numeric inversion validates its domain") {
  CHECK_THROWS_AS(wqsdc::ps_from_fill(-0.1, 0.1), std::domain_error);
  CHECK_THROWS_AS(wqsdc::ps_from_fill(0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(wqsdc::ps_from_fill(0.5, 1.0), std::domain_error);
  // Above the upper bound the root leaves [0,1].
  CHECK_THROWS_AS(wqsdc::ps_from_fill(0.9, 0.1), std::domain_error);
}

TEST_CASE("verbatim resolvent misses the root, corrected form lands it") {
  double fill = wqsdc::fill_from_ps(0.81, 0.1);
  wqsdc::ClosedFormRoot cf = wqsdc::ps_from_fill_closed_form(fill, 0.1);
  CHECK(cf.trace.discriminant ==
        doctest::Approx(0.583960656825).epsilon(1e-9));
  CHECK(cf.ps == doctest::Approx(cf.trace.u3 + cf.trace.v3).epsilon(1e-15));
  CHECK(cf.cubic_residual ==
        doctest::Approx(-0.11114609770389816).epsilon(1e-10));
  CHECK(std::abs(cf.corrected_root - 0.81) < 1e-9);
}

TEST_CASE("resolvent goes undefined at negative discriminant") {
  wqsdc::ClosedFormRoot cf = wqsdc::ps_from_fill_closed_form(0.15, 0.1);
  CHECK(cf.trace.discriminant < 0.0);
  CHECK(std::isnan(cf.ps));
  CHECK(std::isnan(cf.corrected_root));
  CHECK(std::isnan(cf.trace.u3));
}

TEST_CASE("dbar figure grid hits pinned abscissas") {
  wqsdc::SweepTable t =
      wqsdc::figure_dbar_vs_ps({{0.1, 0.8, 0.1}}, 101);
  REQUIRE(t.rows.size() == 101);
  std::size_t ps_col = t.column_index("ps");
  std::size_t dbar_col = t.column_index("dbar");
  std::size_t ref_col = t.column_index("reference");
  const auto& row30 = t.rows[30];
  CHECK(row30[ps_col] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(row30[dbar_col] ==
        doctest::Approx(0.3301183127572016).epsilon(1e-13));
  CHECK(row30[ref_col] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("family fill figure is one row per n") {
  wqsdc::SweepTable t = wqsdc::figure_wn_fill(50);
  REQUIRE(t.rows.size() == 50);
  std::size_t fill_col = t.column_index("fill");
  CHECK(t.rows.front()[fill_col] ==
        doctest::Approx(0.8034284189446518).epsilon(1e-12));
  CHECK(t.rows.back()[fill_col] ==
        doctest::Approx(0.21170535913352537).epsilon(1e-12));
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i][fill_col] < t.rows[i - 1][fill_col]);
  }
}

TEST_CASE("inversion figure stays inside the fill bounds") {
  wqsdc::SweepTable t = wqsdc::figure_ps_vs_fill(0.1, 50);
  REQUIRE(t.rows.size() == 50);
  CHECK(t.warnings.empty());
  std::size_t fill_col = t.column_index("fill");
  std::size_t ps_col = t.column_index("ps");
  double lo = wqsdc::fill_lower_bound(0.1);
  double hi = std::min(wqsdc::fill_upper_bound(0.1), wqsdc::kFillCeiling);
  CHECK(t.rows.front()[fill_col] == doctest::Approx(lo).epsilon(1e-12));
  CHECK(t.rows.back()[fill_col] == doctest::Approx(hi).epsilon(1e-12));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    double fill = t.rows[i][fill_col];
    double ps = t.rows[i][ps_col];
    CHECK(std::abs(wqsdc::cubic_value(ps, fill, 0.1)) < 1e-10);
    CHECK(std::abs(wqsdc::fill_from_ps(ps, 0.1) - fill) < 1e-8);
    if (i > 0) CHECK(ps > t.rows[i - 1][ps_col]);
  }
}

TEST_CASE("inversion figure warns on narrow or empty windows") {
  wqsdc::SweepTable narrow = wqsdc::figure_ps_vs_fill(0.2, 10);
  CHECK(!narrow.warnings.empty());
  CHECK(narrow.rows.size() == 10);

  wqsdc::SweepTable empty = wqsdc::figure_ps_vs_fill(0.625, 10);
  CHECK(!empty.warnings.empty());
  CHECK(empty.rows.empty());

  CHECK_THROWS_AS(wqsdc::figure_ps_vs_fill(1.2, 10), std::domain_error);
  CHECK_THROWS_AS(wqsdc::figure_ps_vs_fill(0.1, 1), std::domain_error);
}

}  // TEST_SUITE
