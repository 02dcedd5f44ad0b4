#include "wqsdc/attacks.hpp"

#include <stdexcept>

#include "wqsdc/density.hpp"

namespace wqsdc {

namespace {

constexpr double kZeroWeight = 1e-24;

struct ControllerMeans {
  double identity = 0.0;
  double with_bits = 0.0;
  double honest = 0.0;
};

// Weighted enumeration over sender branches, controller outcome 0, and the
// Bell branches after the attacker's p=q=0 clone (only the symmetric pair
// survives there). The honest column uses the true-parameter cloner and the
// bits-keyed correction instead.
ControllerMeans controller_enumeration(const RunConfig& config) {
  const WStateParams& w = config.wparams;
  StateVector composite = prepare_composite(config.secret, w);
  auto alice = alice_bell_measurement(composite);
  CloneSpec wz{Cx{0.0, 0.0}, Cx{0.0, 0.0}, Convention::literal};

  double total_attack = 0.0, acc_identity = 0.0, acc_bits = 0.0;
  double total_honest = 0.0, acc_honest = 0.0;
  for (const AliceOutcome& branch : alice) {
    if (branch.probability <= kZeroWeight) continue;
    auto bob = bob_measurement(branch.bracket);
    if (bob[0].probability <= 0.0) continue;
    StateVector secret_sv = StateVector::normalized(
        {"mach"}, {config.secret.a, config.secret.b});
    double reach = branch.probability * bob[0].probability;

    CloneOutput cloned = clone(bob[0].residual, wz);
    auto attack_branches =
        branch_decompose(cloned.state, MeasurementBasis::bell(),
                         {"orig", "copy"});
    Pauli keyed = correction_for_bits(branch.bits);
    for (const Branch& ab : attack_branches) {
      if (ab.weight <= kZeroWeight) continue;
      StateVector machine = ab.residual.renormalized();
      double wgt = reach * ab.weight;
      total_attack += wgt;
      acc_identity += wgt * fidelity(secret_sv, machine);
      acc_bits += wgt * fidelity(secret_sv, apply_correction(machine, keyed));
    }

    auto honest = charlie_clone_and_bell(bob[0].residual, w,
                                         config.convention);
    if (honest[2].weight > kZeroWeight) {
      StateVector repaired = apply_correction(honest[2].machine, keyed);
      total_honest += reach * honest[2].weight;
      acc_honest += reach * honest[2].weight * fidelity(secret_sv, repaired);
    }
  }
  if (total_attack <= 0.0 || total_honest <= 0.0) {
    throw std::domain_error(
        "controller attack: no reachable decode branch (success probability "
        "is zero)");
  }
  return ControllerMeans{acc_identity / total_attack,
                         acc_bits / total_attack, acc_honest / total_honest};
}

}  // namespace

std::string attack_kind_name(AttackKind kind) {
  switch (kind) {
    case AttackKind::receiver: return "receiver";
    case AttackKind::controller: return "controller";
    case AttackKind::eve: return "eve";
  }
  throw std::logic_error("attack_kind_name: unreachable");
}

AttackReport simulate_attack(AttackKind kind, const RunConfig& config,
                             std::uint64_t shots, std::uint64_t seed) {
  AttackReport report;
  report.kind = kind;
  switch (kind) {
    case AttackKind::receiver: {
      report.note =
          "receiver decodes without the sender's two bits, guessing the "
          "repair Pauli uniformly over {I,X,Z,ZX}";
      report.analytic_mean =
          blind_guess_mean_fidelity_analytic(config.wparams, config.secret);
      report.sampled = blind_guess_mean_fidelity_sampled(
          config.wparams, config.secret, shots, seed);
      break;
    }
    case AttackKind::controller: {
      report.note =
          "controller captures the receiver qubit, clones with the p=q=0 "
          "machine (shared weights withheld from him), and decodes with "
          "identity; with_bits_mean shows the bits alone do not restore the "
          "honest baseline";
      ControllerMeans means = controller_enumeration(config);
      report.identity_mean = means.identity;
      report.with_bits_mean = means.with_bits;
      report.honest_fidelity = means.honest;
      break;
    }
    case AttackKind::eve: {
      report.note =
          "structural check: after distribution no quantum event crosses the "
          "controller->receiver channel; only classical bits flow there";
      report.runs = shots;
      for (std::uint64_t r = 0; r < shots; ++r) {
        RunConfig rc = config;
        rc.seed = seed ^ r;
        Transcript t = run_protocol(rc);
        for (const Event& e : t.events) {
          if (e.party != "bob_to_charlie") continue;
          if (e.step == "message") {
            ++report.classical_messages_bob_to_charlie;
          } else {
            ++report.quantum_events_bob_to_charlie;
          }
        }
      }
      break;
    }
  }
  return report;
}

nlohmann::ordered_json attack_report_to_json(const AttackReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["kind"] = attack_kind_name(report.kind);
  j["note"] = report.note;
  switch (report.kind) {
    case AttackKind::receiver:
      j["analytic_mean"] = report.analytic_mean;
      j["sampled"] = {{"estimate", report.sampled.estimate},
                      {"std_error", report.sampled.std_error},
                      {"shots", report.sampled.shots}};
      break;
    case AttackKind::controller:
      j["identity_mean"] = report.identity_mean;
      j["with_bits_mean"] = report.with_bits_mean;
      j["honest_fidelity"] = report.honest_fidelity;
      break;
    case AttackKind::eve:
      j["runs"] = report.runs;
      j["classical_messages_bob_to_charlie"] =
          report.classical_messages_bob_to_charlie;
      j["quantum_events_bob_to_charlie"] =
          report.quantum_events_bob_to_charlie;
      break;
  }
  return j;
}

}  // namespace wqsdc
