#include <cmath>

#include "doctest.h"
#include "wqsdc/attacks.hpp"

using wqsdc::AttackKind;
using wqsdc::Convention;
using wqsdc::Cx;
using wqsdc::SecretState;
using wqsdc::WStateParams;

namespace {

wqsdc::RunConfig config_for(double alpha_sq, double beta_sq, double gamma_sq) {
  wqsdc::RunConfig config;
  config.secret = SecretState::validated(Cx{0.6, 0}, Cx{0.8, 0});
  config.wparams = WStateParams::validated(Cx{std::sqrt(alpha_sq), 0.0},
                                           Cx{std::sqrt(beta_sq), 0.0},
                                           Cx{std::sqrt(gamma_sq), 0.0});
  config.convention = Convention::literal;
  return config;
}

}  // namespace

TEST_SUITE("attacks") {

TEST_CASE("receiver without the bits averages one half") {
  wqsdc::AttackReport r = wqsdc::simulate_attack(
      AttackKind::receiver, config_for(0.5, 0.3, 0.2), 10000, 1);
  CHECK(r.kind == AttackKind::receiver);
  CHECK(r.analytic_mean == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.sampled.shots == 10000);
  CHECK(std::abs(r.sampled.estimate - 0.5) < 2e-2);
}

TEST_CASE("controller hijack quality depends on the withheld weights") {
  struct Row {
    double alpha_sq, beta_sq, gamma_sq, identity;
  };
  const Row rows[] = {
      {0.6, 0.2, 0.2, 0.57},
      {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.5},
      {0.45, 0.1, 0.45, 0.5},
      {0.2, 0.2, 0.6, 0.43},
  };
  for (const Row& row : rows) {
    wqsdc::AttackReport r = wqsdc::simulate_attack(
        AttackKind::controller,
        config_for(row.alpha_sq, row.beta_sq, row.gamma_sq), 0, 0);
    CHECK(r.identity_mean == doctest::Approx(row.identity).epsilon(1e-12));
    // Knowing the sender's bits does not restore the honest fidelity when
    // the cloner strengths are wrong.
    CHECK(r.with_bits_mean == doctest::Approx(0.5392).epsilon(1e-12));
    CHECK(r.honest_fidelity == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("eavesdropper finds no quantum carrier between controller and receiver") {
  wqsdc::AttackReport r = wqsdc::simulate_attack(
      AttackKind::eve, config_for(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0), 20, 9);
  CHECK(r.runs == 20);
  CHECK(r.quantum_events_bob_to_charlie == 0);
  CHECK(r.classical_messages_bob_to_charlie >= 1);
}

TEST_CASE("reports serialize only the relevant fields") {
  wqsdc::AttackReport recv = wqsdc::simulate_attack(
      AttackKind::receiver, config_for(0.5, 0.3, 0.2), 100, 1);
  nlohmann::ordered_json jr = wqsdc::attack_report_to_json(recv);
  CHECK(jr.contains("analytic_mean"));
  CHECK(jr.contains("sampled"));
  CHECK(!jr.contains("identity_mean"));

  wqsdc::AttackReport ctrl = wqsdc::simulate_attack(
      AttackKind::controller, config_for(0.5, 0.3, 0.2), 0, 0);
  nlohmann::ordered_json jc = wqsdc::attack_report_to_json(ctrl);
  CHECK(jc.contains("identity_mean"));
  CHECK(jc.contains("with_bits_mean"));
  CHECK(jc.contains("honest_fidelity"));
  CHECK(!jc.contains("runs"));

  wqsdc::AttackReport eve = wqsdc::simulate_attack(
      AttackKind::eve, config_for(0.5, 0.3, 0.2), 5, 2);
  nlohmann::ordered_json je = wqsdc::attack_report_to_json(eve);
  CHECK(je.contains("runs"));
  CHECK(je.contains("classical_messages_bob_to_charlie"));
  CHECK(je.contains("quantum_events_bob_to_charlie"));
  CHECK(!je.contains("analytic_mean"));
  CHECK(je["kind"] == "eve");
}

TEST_CASE("attack kind names") {
  CHECK(wqsdc::attack_kind_name(AttackKind::receiver) == "receiver");
  CHECK(wqsdc::attack_kind_name(AttackKind::controller) == "controller");
  CHECK(wqsdc::attack_kind_name(AttackKind::eve) == "eve");
}

}  // TEST_SUITE
