// Controlled direct-communication protocol over a shared three-qubit state
// alpha|001> + beta|010> + gamma|100> held by sender (A), controller (B),
// and receiver (C).
//
// One round: the sender tensors her secret qubit A1 onto her share A2 and
// Bell-measures (A1,A2), broadcasting two bits; the controller measures B
// in the computational basis and releases the round only on outcome 0; the
// receiver clones his collapsed qubit with the (p=alpha, q=gamma) machine,
// Bell-measures (original, copy), keeps the psi+ branch, and repairs the
// machine qubit with the Pauli fixed by the sender's bits.
//
// Branch weights follow the CloneSpec convention: literal reads raw squared
// amplitudes off the unnormalized post-clone state (success probability
// exactly 4|alpha|^2|gamma|^2, recovery fidelity exactly 1); physical uses
// the isometric cloner, making every branch weight an honest probability.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wqsdc/cloning.hpp"
#include "wqsdc/measurement.hpp"
#include "wqsdc/statevector.hpp"

namespace wqsdc {

struct SecretState {
  Cx a{1.0, 0.0};
  Cx b{0.0, 0.0};

  // Validates |a|^2 + |b|^2 = 1 within 1e-9, then rescales exactly.
  static SecretState validated(Cx a, Cx b);
};

struct WStateParams {
  Cx alpha{0.0, 0.0};
  Cx beta{0.0, 0.0};
  Cx gamma{0.0, 0.0};

  // Validates the squared magnitudes sum to 1 within 1e-9, then rescales.
  static WStateParams validated(Cx alpha, Cx beta, Cx gamma);
};

// alpha|001> + beta|010> + gamma|100> over labels {A,B,C} (A most
// significant).
StateVector w_state(const WStateParams& params);

// Secret on A1 tensored with the shared state on {A2,B,C}; labels
// {A1,A2,B,C}.
StateVector prepare_composite(const SecretState& secret,
                              const WStateParams& params);

// Two classical bits per Bell outcome, indexed in basis order
// [phi+, phi-, psi+, psi-] -> ["00", "11", "01", "10"].
const std::array<std::string, 4>& bell_bits_codebook();

struct AliceOutcome {
  std::size_t index = 0;     // Bell basis index
  std::string outcome_name;  // "phi+", "phi-", "psi+", "psi-"
  std::string bits;          // codebook entry broadcast to the controller
  StateVector bracket;       // unnormalized {B,C} state, sqrt(2) x residual
  double probability = 0.0;  // = 0.5 * squared norm of bracket
};

// All four sender outcomes; probabilities sum to 1.
std::array<AliceOutcome, 4> alice_bell_measurement(const StateVector& composite);

struct BobOutcome {
  int outcome = 0;          // measured value of B
  StateVector residual;     // normalized {C} state; zero vector if weight 0
  double probability = 0.0; // conditional on the sender's branch
};

// Computational measurement of B on a (possibly unnormalized) {B,C} state;
// conditional probabilities are weight ratios, so input scale cancels.
std::array<BobOutcome, 2> bob_measurement(const StateVector& bc_state);

struct CharlieOutcome {
  std::size_t index = 0;
  std::string outcome_name;
  StateVector machine;   // normalized machine qubit; zero vector if weight 0
  double weight = 0.0;   // literal: raw branch weight; physical: probability
};

// Clone with p=alpha, q=gamma, then Bell-decompose (original, copy).
// Requires a normalized single-qubit input.
std::array<CharlieOutcome, 4> charlie_clone_and_bell(const StateVector& c_state,
                                                     const WStateParams& params,
                                                     Convention convention);

enum class Pauli { I, X, Z, ZX };

std::string pauli_name(Pauli op);

// The repair table keyed by the sender's bits: 00 -> X, 11 -> ZX, 01 -> I,
// 10 -> Z. Throws std::invalid_argument on unknown bits.
Pauli correction_for_bits(const std::string& bits);

// Alternative table with the 00/10 entries exchanged (00 -> Z, 10 -> X);
// kept so reports can quantify that it breaks perfect recovery.
Pauli correction_variant_rows14(const std::string& bits);

// ZX applies sigma_x first, then sigma_z.
StateVector apply_correction(const StateVector& machine, Pauli op);

struct RunConfig {
  SecretState secret;
  WStateParams wparams;
  Convention convention = Convention::literal;
  std::uint64_t seed = 0;
  int max_retries = 16;  // additional attempts after the first
};

struct Event {
  std::string step;    // prepare | measure | message | clone | correct | abort
  std::string party;   // alice | bob | charlie | alice_to_bob | bob_to_charlie
  std::string basis;   // bell | computational | ""
  std::string outcome; // outcome name, correction name, or ""
  std::string bits;    // classical bits carried, or ""
  double probability = -1.0;  // sampled probability; -1 encodes "none"
};

struct Transcript {
  RunConfig config;
  std::vector<Event> events;  // across every attempt, in execution order
  bool succeeded = false;
  std::string abort_stage;    // "bob_one" | "charlie_not_psi_plus" | ""
  double fidelity = 0.0;      // NaN unless succeeded
  double branch_probability = 0.0;  // product of sampled probabilities,
                                    // final attempt up to its last outcome
  int attempts = 0;
};

// Runs rounds until success or the retry budget is spent. Deterministic per
// seed: one generator drives every sample across attempts.
Transcript run_protocol(const RunConfig& config);

// Stable field order: config, events, outcome, fidelity, branch_probability.
// Complex numbers serialize as [re, im]; absent probabilities/bits as null.
nlohmann::ordered_json transcript_to_json(const Transcript& transcript);

// Success probability of one round (no retries), three ways.
double success_probability_analytic(const WStateParams& params);
double success_probability_enumerate(const WStateParams& params,
                                     const SecretState& secret,
                                     Convention convention);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t shots = 0;
};

// Samples sender and controller outcomes per shot (generator seeded
// seed ^ shot so shots are order-independent); physical draws the receiver
// outcome too, literal accumulates the raw psi+ weight, which keeps the
// estimator unbiased for the literal enumeration value.
McEstimate success_probability_monte_carlo(const WStateParams& params,
                                           const SecretState& secret,
                                           Convention convention,
                                           std::uint64_t shots,
                                           std::uint64_t seed);

// Mean recovered fidelity when the receiver never learns the sender's bits
// and guesses the repair Pauli uniformly: exactly 1/2 for every secret.
// Throws std::domain_error when the success probability vanishes.
double blind_guess_mean_fidelity_analytic(const WStateParams& params,
                                          const SecretState& secret);
McEstimate blind_guess_mean_fidelity_sampled(const WStateParams& params,
                                             const SecretState& secret,
                                             std::uint64_t shots,
                                             std::uint64_t seed);

}  // namespace wqsdc
