// Two-parameter symmetric cloning transformation and its distance analytics.
//
// The machine maps the basis states of an unknown qubit as
//   |0>|blank>|Q>  ->  (|00> + p(|01> + |10>)) |Q0>
//   |1>|blank>|Q>  ->  (|11> + q(|01> + |10>)) |Q1>
// with p = q = 0 reducing to the basis-copying limit. The machine register
// kets admit two readings, selected by Convention:
//
//   literal   - |Q0>, |Q1> are treated as orthonormal unit kets and branch
//               weights are read directly off the (unnormalized) output
//               amplitudes. This is the reading the protocol tables assume.
//   physical  - |Q0>, |Q1> are scaled by 1/sqrt(1+2|p|^2), 1/sqrt(1+2|q|^2)
//               so the map is an exact isometry and branch weights are
//               honest probabilities.
//
// The reduced-output analytics (single-copy distance and its average) follow
// the diagonal approximation in the machine basis: cross terms between the
// two machine blocks are dropped and the single-qubit reduction carries a
// doubled symmetric-subspace weight. Both quirks are deliberate; they are
// what the closed forms integrate, and the selfcheck report documents how
// they differ from the exact partial trace.

#pragma once

#include <cstdint>

#include "wqsdc/density.hpp"
#include "wqsdc/statevector.hpp"

namespace wqsdc {

enum class Convention { literal, physical };

struct CloneSpec {
  Cx p{0.0, 0.0};
  Cx q{0.0, 0.0};
  Convention convention = Convention::literal;
};

// Linear map restricted to the |input>|blank>|Q> subspace: the two columns
// are the images of basis inputs |0> and |1| over output labels
// (orig, copy, mach), big-endian.
struct CloneMap {
  CloneSpec spec;
  std::vector<Cx> column0;  // image of |0>|blank>|Q>, dimension 8
  std::vector<Cx> column1;  // image of |1>|blank>|Q>, dimension 8

  double column_squared_norm(int which) const;
  // Columns orthonormal within tol (always true under physical convention).
  bool is_isometry(double tol) const;
};

CloneMap build_clone_map(const CloneSpec& spec);

struct CloneOutput {
  StateVector state;   // labels {orig, copy, mach}
  Cx x, y;             // input amplitudes the map was applied to
  CloneSpec spec;
  double squared_norm; // of state as produced (1 under physical convention)
};

// Applies the map to a normalized single-qubit input x|0> + y|1>.
CloneOutput clone(const StateVector& input, const CloneSpec& spec);

enum class ReducedKind { original, copy, pair };
enum class ReducedStyle { exact, diagonal_approx };

// exact: true partial trace of the renormalized output.
// diagonal_approx: machine-diagonal closed forms (see the header comment);
// uses the isometry-derived machine norms regardless of convention, since
// those are what the distance analytics assume.
DensityMatrix reduced_output(const CloneOutput& output, ReducedKind which,
                             ReducedStyle style);

// Single-copy Hilbert-Schmidt distance between the input projector and the
// diagonal-approximation reduced original, as a function of m = |x|^2:
//   D(m) = 4|q|^4 (1-m)^2 / (1+2|q|^2)^2
//        + 4|p|^4 m^2     / (1+2|p|^2)^2  + 2 m (1-m).
double analytic_hs_distance(double m, const CloneSpec& spec);

// Closed-form average of D(m) over m in [0,1]:
//   (4/3) (|p|^4/(1+2|p|^2)^2 + |q|^4/(1+2|q|^2)^2) + 1/3.
double average_hs_distance(const CloneSpec& spec);

// Composite-Simpson average of the matrix-path distance (clone, reduce,
// subtract, trace) over m in [0,1]; the independent oracle route for the
// closed form above. panels must be even and >= 2.
double average_hs_distance_quadrature(const CloneSpec& spec,
                                      std::size_t panels = 10000);

}  // namespace wqsdc
