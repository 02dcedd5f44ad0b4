// Three-qubit entanglement quantified by the concurrence fill: a Heron-like
// area expression over the three one-to-rest squared concurrences.
//
//   C^2_{i(jk)} = 4 det(rho_i),  Q = (C^2_A + C^2_B + C^2_C)/2,
//   F = [ (16/3) Q (Q - C^2_A)(Q - C^2_B)(Q - C^2_C) ]^{1/4}.
//
// For the one-excitation family alpha|001> + beta|010> + gamma|100> the
// squared concurrences collapse to 4s(1-s) in the squared magnitudes and a
// closed form for F follows; both paths are exposed and must agree.

#pragma once

#include <cstdint>

#include "wqsdc/statevector.hpp"

namespace wqsdc {

struct ConcurrenceTriple {
  double c2_a_bc;  // first label vs rest
  double c2_b_ac;
  double c2_c_ab;
};

struct FillReport {
  ConcurrenceTriple triple;
  double q;     // half the squared-concurrence sum
  double fill;  // F in [0,1]
};

// det clamp: tiny negative determinants are numerical noise and snap to 0;
// anything below -kDetTolerance signals a broken input and throws.
inline constexpr double kDetTolerance = 1e-12;
// Radicand clamp for the fourth root, so numerically degenerate boundary
// states do not abort sweeps.
inline constexpr double kRadicandTolerance = 1e-10;

// Requires a normalized three-qubit state; labels in order (A, B, C).
ConcurrenceTriple concurrence_triple(const StateVector& state);

// Generic path via partial traces and determinants.
FillReport concurrence_fill(const StateVector& state);

// Closed form in the squared magnitudes of the one-excitation family;
// arguments must be in [0,1] and sum to 1 within kNormTolerance.
FillReport concurrence_fill_closed(double alpha_sq, double beta_sq,
                                   double gamma_sq);

struct WnParams {
  std::uint64_t n = 1;
  double phase_g = 0.0;  // phase on the |010> component
  double phase_d = 0.0;  // phase on the |001> component
};

// (|100> + sqrt(n) e^{i g} |010> + sqrt(n+1) e^{i d} |001>) / sqrt(2+2n),
// labels (A, B, C). Requires n >= 1.
StateVector wn_state(const WnParams& params);

// Closed-form fill of wn_state: 2 (n^2 (n^2+3n+1) / (3 (1+n)^6))^{1/4}.
double wn_fill(std::uint64_t n);

}  // namespace wqsdc
