#include "wqsdc/protocol.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wqsdc/density.hpp"

namespace wqsdc {

namespace {

constexpr double kValidationTolerance = 1e-9;
constexpr double kZeroWeight = 1e-24;

StateVector w_state_labeled(const WStateParams& params,
                            std::vector<std::string> labels) {
  std::vector<Cx> amps(8, Cx{0.0, 0.0});
  amps[0b001] = params.alpha;
  amps[0b010] = params.beta;
  amps[0b100] = params.gamma;
  return StateVector::normalized(std::move(labels), std::move(amps));
}

StateVector zero_state(std::vector<std::string> labels) {
  std::vector<Cx> amps(std::size_t{1} << labels.size(), Cx{0.0, 0.0});
  return StateVector::unnormalized(std::move(labels), std::move(amps));
}

nlohmann::ordered_json complex_json(Cx v) {
  return nlohmann::ordered_json::array({v.real(), v.imag()});
}

const char* convention_name(Convention c) {
  return c == Convention::literal ? "paper-literal" : "physical";
}

}  // namespace

SecretState SecretState::validated(Cx a, Cx b) {
  double norm = std::norm(a) + std::norm(b);
  if (std::abs(norm - 1.0) > kValidationTolerance) {
    throw std::invalid_argument("SecretState: |a|^2 + |b|^2 must be 1");
  }
  double s = std::sqrt(norm);
  return SecretState{a / s, b / s};
}

WStateParams WStateParams::validated(Cx alpha, Cx beta, Cx gamma) {
  double norm = std::norm(alpha) + std::norm(beta) + std::norm(gamma);
  if (std::abs(norm - 1.0) > kValidationTolerance) {
    throw std::invalid_argument(
        "WStateParams: squared magnitudes must sum to 1");
  }
  double s = std::sqrt(norm);
  return WStateParams{alpha / s, beta / s, gamma / s};
}

StateVector w_state(const WStateParams& params) {
  return w_state_labeled(params, {"A", "B", "C"});
}

StateVector prepare_composite(const SecretState& secret,
                              const WStateParams& params) {
  StateVector head = StateVector::normalized({"A1"}, {secret.a, secret.b});
  return tensor({head, w_state_labeled(params, {"A2", "B", "C"})});
}

const std::array<std::string, 4>& bell_bits_codebook() {
  static const std::array<std::string, 4> codebook = {"00", "11", "01", "10"};
  return codebook;
}

std::array<AliceOutcome, 4> alice_bell_measurement(
    const StateVector& composite) {
  auto branches =
      branch_decompose(composite, MeasurementBasis::bell(), {"A1", "A2"});
  std::array<AliceOutcome, 4> out;
  const double sqrt2 = std::sqrt(2.0);
  for (std::size_t i = 0; i < 4; ++i) {
    const Branch& br = branches[i];
    std::vector<Cx> scaled = br.residual.amplitudes();
    for (Cx& v : scaled) v *= sqrt2;
    out[i] = AliceOutcome{
        br.outcome, br.outcome_name, bell_bits_codebook()[i],
        StateVector::unnormalized(br.residual.labels(), std::move(scaled)),
        br.weight};
  }
  return out;
}

std::array<BobOutcome, 2> bob_measurement(const StateVector& bc_state) {
  auto branches = branch_decompose(
      bc_state, MeasurementBasis::computational(1), {"B"});
  double total = branches[0].weight + branches[1].weight;
  if (total <= kZeroWeight) {
    throw std::domain_error("bob_measurement: zero-weight input state");
  }
  std::array<BobOutcome, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const Branch& br = branches[i];
    out[i].outcome = static_cast<int>(i);
    out[i].probability = br.weight / total;
    out[i].residual = br.weight > kZeroWeight ? br.residual.renormalized()
                                              : zero_state(br.residual.labels());
  }
  return out;
}

std::array<CharlieOutcome, 4> charlie_clone_and_bell(
    const StateVector& c_state, const WStateParams& params,
    Convention convention) {
  CloneOutput cloned =
      clone(c_state, CloneSpec{params.alpha, params.gamma, convention});
  auto branches =
      branch_decompose(cloned.state, MeasurementBasis::bell(), {"orig", "copy"});
  std::array<CharlieOutcome, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const Branch& br = branches[i];
    out[i].index = br.outcome;
    out[i].outcome_name = br.outcome_name;
    out[i].weight = br.weight;
    out[i].machine = br.weight > kZeroWeight
                         ? br.residual.renormalized()
                         : zero_state(br.residual.labels());
  }
  return out;
}

std::string pauli_name(Pauli op) {
  switch (op) {
    case Pauli::I: return "I";
    case Pauli::X: return "X";
    case Pauli::Z: return "Z";
    case Pauli::ZX: return "ZX";
  }
  throw std::logic_error("pauli_name: unreachable");
}

Pauli correction_for_bits(const std::string& bits) {
  if (bits == "00") return Pauli::X;
  if (bits == "11") return Pauli::ZX;
  if (bits == "01") return Pauli::I;
  if (bits == "10") return Pauli::Z;
  throw std::invalid_argument("correction_for_bits: unknown bits '" + bits +
                              "'");
}

Pauli correction_variant_rows14(const std::string& bits) {
  if (bits == "00") return Pauli::Z;
  if (bits == "11") return Pauli::ZX;
  if (bits == "01") return Pauli::I;
  if (bits == "10") return Pauli::X;
  throw std::invalid_argument("correction_variant_rows14: unknown bits '" +
                              bits + "'");
}

StateVector apply_correction(const StateVector& machine, Pauli op) {
  static const std::vector<Cx> x = {Cx{0, 0}, Cx{1, 0}, Cx{1, 0}, Cx{0, 0}};
  static const std::vector<Cx> z = {Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{-1, 0}};
  // sigma_z * sigma_x: x first, then z.
  static const std::vector<Cx> zx = {Cx{0, 0}, Cx{1, 0}, Cx{-1, 0}, Cx{0, 0}};
  const std::string& target = machine.labels().at(0);
  switch (op) {
    case Pauli::I: return machine;
    case Pauli::X: return apply_on(machine, x, {target});
    case Pauli::Z: return apply_on(machine, z, {target});
    case Pauli::ZX: return apply_on(machine, zx, {target});
  }
  throw std::logic_error("apply_correction: unreachable");
}

Transcript run_protocol(const RunConfig& config) {
  Transcript t;
  t.config = config;
  t.fidelity = std::numeric_limits<double>::quiet_NaN();
  std::mt19937_64 rng(config.seed);
  int max_attempts = config.max_retries + 1;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    t.attempts = attempt;
    t.events.push_back({"prepare", "alice", "", "", "", -1.0});
    StateVector composite = prepare_composite(config.secret, config.wparams);
    auto alice = alice_bell_measurement(composite);
    std::vector<double> aw(4);
    for (std::size_t i = 0; i < 4; ++i) aw[i] = alice[i].probability;
    std::size_t ai = sample_index(aw, rng);
    t.events.push_back({"measure", "alice", "bell", alice[ai].outcome_name,
                        alice[ai].bits, alice[ai].probability});
    t.events.push_back(
        {"message", "alice_to_bob", "", "", alice[ai].bits, -1.0});
    auto bob = bob_measurement(alice[ai].bracket);
    std::size_t bi =
        sample_index({bob[0].probability, bob[1].probability}, rng);
    t.events.push_back({"measure", "bob", "computational",
                        std::to_string(bob[bi].outcome), "",
                        bob[bi].probability});
    double prod = alice[ai].probability * bob[bi].probability;
    if (bi == 1) {
      t.events.push_back({"abort", "bob", "", "bob_one", "", -1.0});
      t.abort_stage = "bob_one";
      t.branch_probability = prod;
      continue;
    }
    t.events.push_back(
        {"message", "bob_to_charlie", "", "", alice[ai].bits, -1.0});
    t.events.push_back({"clone", "charlie", "", "", "", -1.0});
    auto charlie =
        charlie_clone_and_bell(bob[bi].residual, config.wparams,
                               config.convention);
    std::vector<double> cw(4);
    double ctotal = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      cw[i] = charlie[i].weight;
      ctotal += cw[i];
    }
    std::size_t ci = sample_index(cw, rng);
    double cprob = charlie[ci].weight / ctotal;
    t.events.push_back(
        {"measure", "charlie", "bell", charlie[ci].outcome_name, "", cprob});
    prod *= cprob;
    if (charlie[ci].outcome_name != "psi+") {
      t.events.push_back(
          {"abort", "charlie", "", "charlie_not_psi_plus", "", -1.0});
      t.abort_stage = "charlie_not_psi_plus";
      t.branch_probability = prod;
      continue;
    }
    Pauli op = correction_for_bits(alice[ai].bits);
    StateVector corrected = apply_correction(charlie[ci].machine, op);
    t.events.push_back(
        {"correct", "charlie", "", pauli_name(op), alice[ai].bits, -1.0});
    StateVector secret_sv = StateVector::normalized(
        {corrected.labels().at(0)}, {config.secret.a, config.secret.b});
    t.fidelity = fidelity(secret_sv, corrected);
    t.succeeded = true;
    t.abort_stage.clear();
    t.branch_probability = prod;
    break;
  }
  return t;
}

nlohmann::ordered_json transcript_to_json(const Transcript& transcript) {
  using json = nlohmann::ordered_json;
  json j;
  const RunConfig& c = transcript.config;
  j["config"] = {
      {"secret", {{"a", complex_json(c.secret.a)}, {"b", complex_json(c.secret.b)}}},
      {"wparams",
       {{"alpha", complex_json(c.wparams.alpha)},
        {"beta", complex_json(c.wparams.beta)},
        {"gamma", complex_json(c.wparams.gamma)}}},
      {"convention", convention_name(c.convention)},
      {"seed", c.seed},
      {"max_retries", c.max_retries}};
  j["events"] = json::array();
  for (const Event& e : transcript.events) {
    json je;
    je["step"] = e.step;
    je["party"] = e.party;
    je["basis"] = e.basis.empty() ? json(nullptr) : json(e.basis);
    je["outcome"] = e.outcome.empty() ? json(nullptr) : json(e.outcome);
    je["bits"] = e.bits.empty() ? json(nullptr) : json(e.bits);
    je["probability"] =
        e.probability < 0.0 ? json(nullptr) : json(e.probability);
    j["events"].push_back(std::move(je));
  }
  if (transcript.succeeded) {
    j["outcome"] = {{"status", "succeeded"}, {"attempts", transcript.attempts}};
    j["fidelity"] = transcript.fidelity;
  } else {
    j["outcome"] = {{"status", "aborted"},
                    {"stage", transcript.abort_stage},
                    {"attempts", transcript.attempts}};
    j["fidelity"] = nullptr;
  }
  j["branch_probability"] = transcript.branch_probability;
  return j;
}

double success_probability_analytic(const WStateParams& params) {
  return 4.0 * std::norm(params.alpha) * std::norm(params.gamma);
}

double success_probability_enumerate(const WStateParams& params,
                                     const SecretState& secret,
                                     Convention convention) {
  StateVector composite = prepare_composite(secret, params);
  auto alice = alice_bell_measurement(composite);
  double total = 0.0;
  for (const AliceOutcome& branch : alice) {
    if (branch.probability <= kZeroWeight) continue;
    auto bob = bob_measurement(branch.bracket);
    if (bob[0].probability <= 0.0) continue;
    auto charlie =
        charlie_clone_and_bell(bob[0].residual, params, convention);
    total += branch.probability * bob[0].probability * charlie[2].weight;
  }
  return total;
}

namespace {

// Per-branch tables reused across Monte-Carlo shots.
struct BranchTable {
  std::vector<double> alice_weights;
  std::array<double, 4> bob0 = {0, 0, 0, 0};
  std::array<std::vector<double>, 4> charlie_weights;
  std::array<double, 4> psi_plus_raw = {0, 0, 0, 0};
};

BranchTable build_branch_table(const WStateParams& params,
                               const SecretState& secret,
                               Convention convention) {
  BranchTable tab;
  StateVector composite = prepare_composite(secret, params);
  auto alice = alice_bell_measurement(composite);
  tab.alice_weights.resize(4, 0.0);
  for (std::size_t i = 0; i < 4; ++i) {
    tab.alice_weights[i] = alice[i].probability;
    if (alice[i].probability <= kZeroWeight) continue;
    auto bob = bob_measurement(alice[i].bracket);
    tab.bob0[i] = bob[0].probability;
    if (bob[0].probability <= 0.0) continue;
    auto charlie =
        charlie_clone_and_bell(bob[0].residual, params, convention);
    tab.charlie_weights[i].resize(4);
    for (std::size_t j = 0; j < 4; ++j) {
      tab.charlie_weights[i][j] = charlie[j].weight;
    }
    tab.psi_plus_raw[i] = charlie[2].weight;
  }
  return tab;
}

McEstimate summarize(double sum, double sumsq, std::uint64_t shots) {
  double mean = sum / static_cast<double>(shots);
  double variance = 0.0;
  if (shots > 1) {
    variance = (sumsq - static_cast<double>(shots) * mean * mean) /
               static_cast<double>(shots - 1);
    variance = std::max(0.0, variance);
  }
  return McEstimate{mean, std::sqrt(variance / static_cast<double>(shots)),
                    shots};
}

}  // namespace

McEstimate success_probability_monte_carlo(const WStateParams& params,
                                           const SecretState& secret,
                                           Convention convention,
                                           std::uint64_t shots,
                                           std::uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument("success_probability_monte_carlo: shots >= 1");
  }
  BranchTable tab = build_branch_table(params, secret, convention);
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    std::mt19937_64 rng(seed ^ s);
    std::size_t ai = sample_index(tab.alice_weights, rng);
    double p0 = tab.bob0[ai];
    double value = 0.0;
    std::size_t bi = sample_index({p0, 1.0 - p0}, rng);
    if (bi == 0) {
      if (convention == Convention::literal) {
        value = tab.psi_plus_raw[ai];
      } else {
        std::size_t ci = sample_index(tab.charlie_weights[ai], rng);
        value = ci == 2 ? 1.0 : 0.0;
      }
    }
    sum += value;
    sumsq += value * value;
  }
  return summarize(sum, sumsq, shots);
}

namespace {

// Success branches with machine states, for the blind-guess scenario.
struct SuccessBranch {
  double weight;        // literal branch weight: P(alice) P(bob 0) w(psi+)
  StateVector machine;  // normalized machine state of the psi+ branch
};

std::vector<SuccessBranch> success_branches(const WStateParams& params,
                                            const SecretState& secret) {
  StateVector composite = prepare_composite(secret, params);
  auto alice = alice_bell_measurement(composite);
  std::vector<SuccessBranch> out;
  for (const AliceOutcome& branch : alice) {
    if (branch.probability <= kZeroWeight) continue;
    auto bob = bob_measurement(branch.bracket);
    if (bob[0].probability <= 0.0) continue;
    auto charlie =
        charlie_clone_and_bell(bob[0].residual, params, Convention::literal);
    double w = branch.probability * bob[0].probability * charlie[2].weight;
    if (w <= kZeroWeight) continue;
    out.push_back({w, charlie[2].machine});
  }
  return out;
}

constexpr std::array<Pauli, 4> kGuessOps = {Pauli::I, Pauli::X, Pauli::Z,
                                            Pauli::ZX};

}  // namespace

double blind_guess_mean_fidelity_analytic(const WStateParams& params,
                                          const SecretState& secret) {
  auto branches = success_branches(params, secret);
  double total = 0.0;
  double acc = 0.0;
  for (const SuccessBranch& br : branches) {
    StateVector secret_sv = StateVector::normalized(
        {br.machine.labels().at(0)}, {secret.a, secret.b});
    double mean_over_ops = 0.0;
    for (Pauli op : kGuessOps) {
      mean_over_ops += fidelity(secret_sv, apply_correction(br.machine, op));
    }
    mean_over_ops /= static_cast<double>(kGuessOps.size());
    total += br.weight;
    acc += br.weight * mean_over_ops;
  }
  if (total <= 0.0) {
    throw std::domain_error(
        "blind_guess_mean_fidelity_analytic: success probability is zero");
  }
  return acc / total;
}

McEstimate blind_guess_mean_fidelity_sampled(const WStateParams& params,
                                             const SecretState& secret,
                                             std::uint64_t shots,
                                             std::uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument("blind_guess_mean_fidelity_sampled: shots >= 1");
  }
  auto branches = success_branches(params, secret);
  if (branches.empty()) {
    throw std::domain_error(
        "blind_guess_mean_fidelity_sampled: success probability is zero");
  }
  std::vector<double> weights;
  weights.reserve(branches.size());
  for (const SuccessBranch& br : branches) weights.push_back(br.weight);
  StateVector secret_sv = StateVector::normalized(
      {branches[0].machine.labels().at(0)}, {secret.a, secret.b});
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    std::mt19937_64 rng(seed ^ s);
    std::size_t bi = sample_index(weights, rng);
    std::size_t oi = sample_index({1.0, 1.0, 1.0, 1.0}, rng);
    double f = fidelity(secret_sv,
                        apply_correction(branches[bi].machine, kGuessOps[oi]));
    sum += f;
    sumsq += f * f;
  }
  return summarize(sum, sumsq, shots);
}

}  // namespace wqsdc
