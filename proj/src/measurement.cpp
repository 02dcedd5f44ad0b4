#include "wqsdc/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace wqsdc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_orthonormal(const std::vector<std::vector<Cx>>& vectors) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      Cx acc{0.0, 0.0};
      for (std::size_t k = 0; k < vectors[i].size(); ++k)
        acc += std::conj(vectors[i][k]) * vectors[j][k];
      const Cx want = (i == j) ? Cx{1.0, 0.0} : Cx{0.0, 0.0};
      if (std::abs(acc - want) > kUnitaryTolerance)
        throw std::invalid_argument("measurement basis is not orthonormal");
    }
  }
}

}  // namespace

MeasurementBasis MeasurementBasis::computational(std::size_t qubits) {
  if (qubits == 0 || qubits > 10)
    throw std::invalid_argument("computational basis needs 1..10 qubits");
  const std::size_t d = std::size_t{1} << qubits;
  MeasurementBasis basis{Kind::computational, qubits, {}, {}};
  basis.vectors.assign(d, std::vector<Cx>(d, Cx{0.0, 0.0}));
  for (std::size_t i = 0; i < d; ++i) {
    basis.vectors[i][i] = Cx{1.0, 0.0};
    std::string name(qubits, '0');
    for (std::size_t b = 0; b < qubits; ++b)
      if ((i >> (qubits - 1 - b)) & 1u) name[b] = '1';
    basis.outcome_names.push_back(name);
  }
  check_orthonormal(basis.vectors);
  return basis;
}

MeasurementBasis MeasurementBasis::bell() {
  MeasurementBasis basis{Kind::bell, 2, {}, {}};
  basis.vectors = {
      {Cx{kInvSqrt2, 0}, Cx{0, 0}, Cx{0, 0}, Cx{kInvSqrt2, 0}},    // phi+
      {Cx{kInvSqrt2, 0}, Cx{0, 0}, Cx{0, 0}, Cx{-kInvSqrt2, 0}},   // phi-
      {Cx{0, 0}, Cx{kInvSqrt2, 0}, Cx{kInvSqrt2, 0}, Cx{0, 0}},    // psi+
      {Cx{0, 0}, Cx{kInvSqrt2, 0}, Cx{-kInvSqrt2, 0}, Cx{0, 0}}};  // psi-
  basis.outcome_names = {"phi+", "phi-", "psi+", "psi-"};
  check_orthonormal(basis.vectors);
  return basis;
}

std::vector<Branch> branch_decompose(const StateVector& state,
                                     const MeasurementBasis& basis,
                                     const std::vector<std::string>& targets) {
  if (targets.size() != basis.qubits)
    throw std::invalid_argument("target count does not match basis arity");
  if (state.normalized_flag() &&
      std::abs(state.squared_norm() - 1.0) > kNormTolerance)
    throw std::invalid_argument("normalized-flagged state drifted out of norm");

  const std::size_t n = state.num_qubits();
  std::vector<std::size_t> tshift(targets.size());
  std::vector<bool> is_target(n, false);
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const std::size_t pos = state.label_index(targets[j]);
    if (is_target[pos]) throw std::invalid_argument("duplicate target label");
    is_target[pos] = true;
    tshift[j] = n - 1 - pos;
  }
  std::vector<std::string> rest_labels;
  std::vector<std::size_t> rshift;
  for (std::size_t pos = 0; pos < n; ++pos) {
    if (!is_target[pos]) {
      rest_labels.push_back(state.labels()[pos]);
      rshift.push_back(n - 1 - pos);
    }
  }

  const std::size_t dt = std::size_t{1} << targets.size();
  const std::size_t dr = std::size_t{1} << rest_labels.size();
  std::vector<Branch> branches;
  branches.reserve(basis.vectors.size());
  for (std::size_t o = 0; o < basis.vectors.size(); ++o) {
    std::vector<Cx> residual(dr, Cx{0.0, 0.0});
    for (std::size_t r = 0; r < dr; ++r) {
      std::size_t rbits = 0;
      for (std::size_t j = 0; j < rshift.size(); ++j)
        if ((r >> (rshift.size() - 1 - j)) & 1u)
          rbits |= std::size_t{1} << rshift[j];
      Cx acc{0.0, 0.0};
      for (std::size_t t = 0; t < dt; ++t) {
        std::size_t tbits = 0;
        for (std::size_t j = 0; j < tshift.size(); ++j)
          if ((t >> (tshift.size() - 1 - j)) & 1u)
            tbits |= std::size_t{1} << tshift[j];
        acc += std::conj(basis.vectors[o][t]) * state.amplitude(rbits | tbits);
      }
      residual[r] = acc;
    }
    StateVector res = StateVector::unnormalized(rest_labels, std::move(residual));
    const double weight = res.squared_norm();
    branches.push_back(
        Branch{o, basis.outcome_names[o], weight, std::move(res)});
  }
  return branches;
}

namespace {

StateVector rebuild_collapsed(const StateVector& state,
                              const MeasurementBasis& basis,
                              const std::vector<std::string>& targets,
                              const Branch& branch) {
  // Full-register post-measurement state: outcome vector on the targets,
  // normalized residual on the rest.
  const std::size_t n = state.num_qubits();
  std::vector<std::size_t> tshift(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j)
    tshift[j] = n - 1 - state.label_index(targets[j]);
  std::vector<std::size_t> rshift;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::string& l = state.labels()[pos];
    bool targeted = false;
    for (const std::string& t : targets) targeted = targeted || (t == l);
    if (!targeted) rshift.push_back(n - 1 - pos);
  }

  std::vector<Cx> amps(state.dim(), Cx{0.0, 0.0});
  const bool dead = branch.weight <= 0.0;
  const double scale = dead ? 0.0 : 1.0 / std::sqrt(branch.weight);
  const std::size_t dt = std::size_t{1} << targets.size();
  for (std::size_t t = 0; t < dt; ++t) {
    std::size_t tbits = 0;
    for (std::size_t j = 0; j < tshift.size(); ++j)
      if ((t >> (tshift.size() - 1 - j)) & 1u)
        tbits |= std::size_t{1} << tshift[j];
    for (std::size_t r = 0; r < branch.residual.dim(); ++r) {
      std::size_t rbits = 0;
      for (std::size_t j = 0; j < rshift.size(); ++j)
        if ((r >> (rshift.size() - 1 - j)) & 1u)
          rbits |= std::size_t{1} << rshift[j];
      amps[rbits | tbits] =
          basis.vectors[branch.outcome][t] * branch.residual.amplitude(r) * scale;
    }
  }
  return dead ? StateVector::unnormalized(state.labels(), std::move(amps))
              : StateVector::normalized(state.labels(), std::move(amps));
}

}  // namespace

std::vector<MeasurementRecord> measure_all(
    const StateVector& state, const MeasurementBasis& basis,
    const std::vector<std::string>& targets) {
  std::vector<MeasurementRecord> records;
  for (const Branch& b : branch_decompose(state, basis, targets))
    records.push_back(MeasurementRecord{
        b.outcome, b.outcome_name, b.weight,
        rebuild_collapsed(state, basis, targets, b)});
  return records;
}

std::size_t sample_index(const std::vector<double>& weights,
                         std::mt19937_64& rng) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0 && w > -1e-12) continue;  // clamp tiny negative noise
    if (w < 0.0) throw std::domain_error("negative sampling weight");
    total += w;
  }
  if (total <= 0.0) throw std::domain_error("sampling weights sum to zero");
  std::uniform_real_distribution<double> uni(0.0, total);
  const double draw = uni(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += std::max(weights[i], 0.0);
    if (draw <= acc) return i;
  }
  return weights.size() - 1;
}

MeasurementRecord measure_sample(const StateVector& state,
                                 const MeasurementBasis& basis,
                                 const std::vector<std::string>& targets,
                                 std::mt19937_64& rng) {
  const std::vector<Branch> branches = branch_decompose(state, basis, targets);
  std::vector<double> weights;
  weights.reserve(branches.size());
  double total = 0.0;
  for (const Branch& b : branches) {
    weights.push_back(b.weight);
    total += b.weight;
  }
  const std::size_t pick = sample_index(weights, rng);
  const Branch& b = branches[pick];
  return MeasurementRecord{b.outcome, b.outcome_name, b.weight / total,
                           rebuild_collapsed(state, basis, targets, b)};
}

MeasurementRecord measure_sample(const StateVector& state,
                                 const MeasurementBasis& basis,
                                 const std::vector<std::string>& targets,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return measure_sample(state, basis, targets, rng);
}

}  // namespace wqsdc
