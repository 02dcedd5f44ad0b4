// Adversary scenarios for the controlled protocol. Each scenario reports
// mean recovered fidelity (or a structural property) next to the honest
// baseline so the control value of the withheld information is explicit.

#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "wqsdc/protocol.hpp"

namespace wqsdc {

enum class AttackKind { receiver, controller, eve };

std::string attack_kind_name(AttackKind kind);

struct AttackReport {
  AttackKind kind = AttackKind::receiver;
  std::string note;

  // receiver: decode without the sender's bits, guessing the Pauli uniformly.
  double analytic_mean = 0.0;
  McEstimate sampled;

  // controller: grab the receiver qubit, clone with the p=q=0 machine
  // (shared weights withheld), decode with identity or with the bits.
  double identity_mean = 0.0;
  double with_bits_mean = 0.0;
  double honest_fidelity = 0.0;

  // eve: structural count of what crosses the controller->receiver channel.
  std::uint64_t runs = 0;
  std::uint64_t classical_messages_bob_to_charlie = 0;
  std::uint64_t quantum_events_bob_to_charlie = 0;
};

// receiver: shots Monte-Carlo draws beside the exact 1/2 average.
// controller: exact weighted enumeration (shots unused).
// eve: shots full protocol runs, transcripts scanned structurally.
AttackReport simulate_attack(AttackKind kind, const RunConfig& config,
                             std::uint64_t shots, std::uint64_t seed);

// Only the fields relevant to the scenario are emitted.
nlohmann::ordered_json attack_report_to_json(const AttackReport& report);

}  // namespace wqsdc
