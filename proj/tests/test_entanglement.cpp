#include <cmath>

#include "doctest.h"
#include "wqsdc/entanglement.hpp"

using wqsdc::Cx;
using wqsdc::StateVector;

namespace {

StateVector one_excitation(double alpha_sq, double beta_sq, double gamma_sq) {
  std::vector<Cx> amps(8, Cx{0.0, 0.0});
  amps[0b001] = Cx{std::sqrt(alpha_sq), 0.0};
  amps[0b010] = Cx{std::sqrt(beta_sq), 0.0};
  amps[0b100] = Cx{std::sqrt(gamma_sq), 0.0};
  return StateVector::normalized({"A", "B", "C"}, std::move(amps));
}

}  // namespace

TEST_SUITE("entanglement") {

TEST_CASE("one-excitation squared concurrences are 4s(1-s)") {
  StateVector s = one_excitation(0.45, 0.1, 0.45);
  wqsdc::ConcurrenceTriple t = wqsdc::concurrence_triple(s);
  CHECK(t.c2_a_bc == doctest::Approx(0.99).epsilon(1e-12));
  CHECK(t.c2_b_ac == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(t.c2_c_ab == doctest::Approx(0.99).epsilon(1e-12));
}

TEST_CASE("product state has zero concurrences and zero fill") {
  StateVector s = StateVector::basis({"A", "B", "C"}, 5);
  wqsdc::ConcurrenceTriple t = wqsdc::concurrence_triple(s);
  CHECK(t.c2_a_bc == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(t.c2_b_ac == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(wqsdc::concurrence_fill(s).fill ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("balanced one-excitation state reaches fill 8/9") {
  double third = 1.0 / 3.0;
  wqsdc::FillReport generic =
      wqsdc::concurrence_fill(one_excitation(third, third, third));
  wqsdc::FillReport closed =
      wqsdc::concurrence_fill_closed(third, third, third);
  CHECK(generic.fill == doctest::Approx(8.0 / 9.0).epsilon(1e-10));
  CHECK(closed.fill == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("generic and closed fill paths agree off balance") {
  const double cases[][3] = {{0.45, 0.1, 0.45},
                             {0.5, 0.3, 0.2},
                             {0.7, 0.05, 0.25},
                             {0.2, 0.6, 0.2}};
  for (const auto& c : cases) {
    wqsdc::FillReport generic =
        wqsdc::concurrence_fill(one_excitation(c[0], c[1], c[2]));
    wqsdc::FillReport closed =
        wqsdc::concurrence_fill_closed(c[0], c[1], c[2]);
    CHECK(std::abs(generic.fill - closed.fill) < 1e-10);
    CHECK(std::abs(generic.q - closed.q) < 1e-10);
  }
  wqsdc::FillReport pinned = wqsdc::concurrence_fill_closed(0.45, 0.1, 0.45);
  CHECK(pinned.fill == doctest::Approx(0.636141391748891).epsilon(1e-12));
}

TEST_CASE("closed fill validates its weights") {
  CHECK_THROWS_AS(wqsdc::concurrence_fill_closed(-0.1, 0.6, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(wqsdc::concurrence_fill_closed(0.5, 0.4, 0.4),
                  std::invalid_argument);
}

TEST_CASE("concurrence_triple rejects bad inputs") {
  CHECK_THROWS_AS(wqsdc::concurrence_triple(StateVector::basis({"A"}, 0)),
                  std::invalid_argument);
  StateVector raw = StateVector::unnormalized(
      {"A", "B", "C"}, std::vector<Cx>(8, Cx{0.5, 0.0}));
  CHECK_THROWS_AS(wqsdc::concurrence_triple(raw), std::invalid_argument);
}

TEST_CASE("one-parameter family closed form at the ends") {
  CHECK(wqsdc::wn_fill(1) ==
        doctest::Approx(0.8034284189446518).epsilon(1e-12));
  CHECK(wqsdc::wn_fill(50) ==
        doctest::Approx(0.21170535913352537).epsilon(1e-12));
  CHECK_THROWS_AS(wqsdc::wn_fill(0), std::invalid_argument);
  CHECK_THROWS_AS(wqsdc::wn_state(wqsdc::WnParams{0, 0.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("family fill is strictly decreasing in n") {
  double prev = wqsdc::wn_fill(1);
  for (std::uint64_t n = 2; n <= 50; ++n) {
    double cur = wqsdc::wn_fill(n);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("family state matches its closed-form fill, phases included") {
  for (std::uint64_t n : {std::uint64_t{1}, std::uint64_t{3},
                          std::uint64_t{12}}) {
    wqsdc::WnParams params{n, 0.7, -1.3};
    StateVector s = wqsdc::wn_state(params);
    CHECK(s.num_qubits() == 3);
    CHECK(std::abs(wqsdc::concurrence_fill(s).fill - wqsdc::wn_fill(n)) <
          1e-10);
  }
}

TEST_CASE("family amplitudes sit on the one-excitation support") {
  StateVector s = wqsdc::wn_state(wqsdc::WnParams{2, 0.0, 0.0});
  double inv = 1.0 / std::sqrt(6.0);
  CHECK(std::abs(s.amplitude(0b100) - Cx{inv, 0.0}) < 1e-12);
  CHECK(std::abs(s.amplitude(0b010) - Cx{std::sqrt(2.0) * inv, 0.0}) < 1e-12);
  CHECK(std::abs(s.amplitude(0b001) - Cx{std::sqrt(3.0) * inv, 0.0}) < 1e-12);
  CHECK(std::abs(s.amplitude(0b000)) == 0.0);
}

}  // TEST_SUITE
