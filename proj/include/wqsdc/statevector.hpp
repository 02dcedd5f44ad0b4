// Dense complex state vector over a small set of named qubits.
//
// Ordering convention: big-endian by label order. The first label in the
// label list is the most significant bit of the amplitude index, so for
// labels {A, B} the amplitude at index 0b10 is the |1>_A |0>_B component.
//
// Vectors carry an explicit normalization flag. Normalized vectors are
// validated at construction (squared norm within kNormTolerance of 1, then
// snapped exactly). Unnormalized vectors are a deliberate mode: branch
// residuals and literal-convention cloner outputs keep their raw weights.

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wqsdc {

using Cx = std::complex<double>;

inline constexpr double kNormTolerance = 1e-6;      // construction drift allowance
inline constexpr double kUnitaryTolerance = 1e-10;  // operator admission gate
inline constexpr double kTightTolerance = 1e-12;    // exact-identity assertions

class StateVector {
 public:
  // Zero-qubit scalar state with amplitude 1; the neutral element of tensor().
  StateVector();

  // Validates |squared norm - 1| <= kNormTolerance, then renormalizes exactly.
  static StateVector normalized(std::vector<std::string> labels,
                                std::vector<Cx> amplitudes);

  // No norm requirement; the vector is flagged as a raw-weight carrier.
  static StateVector unnormalized(std::vector<std::string> labels,
                                  std::vector<Cx> amplitudes);

  // Computational basis state |index> over the given labels.
  static StateVector basis(std::vector<std::string> labels, std::size_t index);

  std::size_t num_qubits() const { return labels_.size(); }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Cx>& amplitudes() const { return amps_; }
  Cx amplitude(std::size_t index) const { return amps_.at(index); }
  bool normalized_flag() const { return normalized_; }

  double squared_norm() const;
  StateVector renormalized() const;  // throws on (near) zero vector

  // Position of a label in the label list; throws std::invalid_argument if absent.
  std::size_t label_index(const std::string& label) const;

  // One line per amplitude: index<TAB>re<TAB>im, indices ascending.
  void dump(std::ostream& out) const;

 private:
  StateVector(std::vector<std::string> labels, std::vector<Cx> amplitudes,
              bool normalized);

  std::vector<std::string> labels_;
  std::vector<Cx> amps_;
  bool normalized_;
};

// Kronecker product in argument order; the first part owns the most
// significant bits. Duplicate labels across parts are rejected.
StateVector tensor(const std::vector<StateVector>& parts);

// Applies a k-qubit operator (row-major, dimension 2^k) to the target labels.
// The first target is the most significant bit of the operator index.
// The matrix must be unitary within kUnitaryTolerance.
StateVector apply_on(const StateVector& state, const std::vector<Cx>& op,
                     const std::vector<std::string>& targets);

// True when a and b differ only by a global phase (and norm scale), i.e.
// |<a|b>|^2 = <a|a><b|b> within tol.
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol);

}  // namespace wqsdc
