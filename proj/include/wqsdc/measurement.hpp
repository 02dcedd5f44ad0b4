// Projective measurement on a subset of qubits.
//
// branch_decompose is the workhorse: it resolves a state into outcome
// branches, each carrying the raw squared-norm weight and the unnormalized
// residual over the remaining qubits. For normalized inputs the weights sum
// to 1 and are honest probabilities; for raw-weight vectors they are read
// off the amplitudes directly, which is exactly the literal convention.
//
// Bell basis ordering is fixed as phi+ = (|00>+|11>)/sqrt2,
// phi- = (|00>-|11>)/sqrt2, psi+ = (|01>+|10>)/sqrt2, psi- = (|01>-|10>)/sqrt2.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wqsdc/statevector.hpp"

namespace wqsdc {

struct MeasurementBasis {
  enum class Kind { computational, bell };

  Kind kind;
  std::size_t qubits;
  std::vector<std::vector<Cx>> vectors;  // orthonormal, dim 2^qubits each
  std::vector<std::string> outcome_names;

  static MeasurementBasis computational(std::size_t qubits);
  static MeasurementBasis bell();
};

struct Branch {
  std::size_t outcome;
  std::string outcome_name;
  double weight;         // squared norm of the residual, not renormalized
  StateVector residual;  // remaining labels, unnormalized (scalar state if none)
};

struct MeasurementRecord {
  std::size_t outcome;
  std::string outcome_name;
  double probability;
  StateVector collapsed;  // full register, targets projected, normalized
};

// Outcome branches in basis order. Targets must be distinct labels of state;
// a normalized-flagged state whose norm drifted beyond kNormTolerance is
// rejected.
std::vector<Branch> branch_decompose(const StateVector& state,
                                     const MeasurementBasis& basis,
                                     const std::vector<std::string>& targets);

// Every outcome with probability and normalized post-measurement state.
// Zero-weight outcomes keep a zero collapsed vector (flagged unnormalized).
std::vector<MeasurementRecord> measure_all(const StateVector& state,
                                           const MeasurementBasis& basis,
                                           const std::vector<std::string>& targets);

// Samples one outcome with probability proportional to branch weight.
MeasurementRecord measure_sample(const StateVector& state,
                                 const MeasurementBasis& basis,
                                 const std::vector<std::string>& targets,
                                 std::mt19937_64& rng);
MeasurementRecord measure_sample(const StateVector& state,
                                 const MeasurementBasis& basis,
                                 const std::vector<std::string>& targets,
                                 std::uint64_t seed);

// Index selection shared by every sampling site: weights need not be
// pre-normalized, their sum must be positive.
std::size_t sample_index(const std::vector<double>& weights,
                         std::mt19937_64& rng);

}  // namespace wqsdc
