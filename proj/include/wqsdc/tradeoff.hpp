// Analytic bridges between the protocol success probability ps, the average
// cloning distance dbar, and the concurrence fill F of the shared triple.
//
// Coordinates: beta_sq is the controller weight |beta|^2; alpha_sq and
// gamma_sq are the outer weights. The constrained manifold has
// ps = 4*alpha_sq*gamma_sq; several functions below also accept free
// (ps, beta_sq) coordinates where ps is swept as an independent axis.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "wqsdc/entanglement.hpp"
#include "wqsdc/sweeptable.hpp"

namespace wqsdc {

// dbar as a function of (ps, weights):
//   dbar = 1/3 + (4/3) * [(1 - beta_sq + ps/2)^2 + ps^2/4 - ps/2]
//                / ((1 + 2*gamma_sq)^2 * (1 + 2*alpha_sq)^2).
// On the constrained manifold (ps = 4*alpha_sq*gamma_sq, weights normalized)
// this equals average_hs_distance for the cloner with |p|^2 = alpha_sq,
// |q|^2 = gamma_sq, and is bounded below by 1/3.
double dbar_from_ps(double ps, double beta_sq, double alpha_sq,
                    double gamma_sq);

// The quadratic (1 - beta_sq + ps/2)^2 + ps^2/4 - ps/2 whose sign decides
// whether dbar_from_ps sits below 1/3. Negative inside the window.
double window_margin(double ps, double beta_sq);

// Threshold weight below which the sub-1/3 window is empty.
inline const double kWindowThresholdBetaSq = (3.0 - std::sqrt(2.0)) / 2.0;

struct PsWindow {
  double beta_sq = 0.0;
  bool empty = true;
  double lo = 0.0;  // meaningful only when !empty
  double hi = 0.0;
};

// Roots of window_margin in ps: (beta_sq - 1/2) -/+ sqrt(disc)/2 with
// disc = 12*beta_sq - 4*beta_sq^2 - 7. Empty iff beta_sq is below
// kWindowThresholdBetaSq - 1e-12; a nonnegative disc is clamped at zero so
// the threshold itself yields the degenerate single-point window.
PsWindow ps_window(double beta_sq);

// Interval of admissible |alpha|^2 + |gamma|^2 for which the window
// constraint can hold under normalization: [0, 1/sqrt(2) - 1/2].
std::array<double, 2> alpha_gamma_budget();

// Largest ps reachable by normalized weights at fixed beta_sq:
// max over alpha_sq + gamma_sq = 1 - beta_sq of 4*alpha_sq*gamma_sq.
double max_constrained_ps(double beta_sq);

// Fill re-expressed in free (ps, beta_sq) coordinates:
//   F = (64/3 * ps^2 * beta_sq^2 * (ps + 4*beta_sq - 4*beta_sq^2))^(1/4).
// Consistent with concurrence_fill_closed when ps = 4*alpha_sq*gamma_sq.
double fill_from_ps(double ps, double beta_sq);

// The three one-to-rest squared concurrences in the same coordinates.
// Requires alpha_sq > 0 and gamma_sq > 0 (the ratios below divide by them):
//   c2_a_bc = ps * (1 - gamma_sq) / alpha_sq
//   c2_b_ac = 4 * beta_sq * (1 - beta_sq)
//   c2_c_ab = ps * (1 - alpha_sq) / gamma_sq
ConcurrenceTriple cfill_components(double ps, double alpha_sq, double beta_sq,
                                   double gamma_sq);

// Admissible fill range for inverting F -> ps with the root inside [0,1]:
//   lower = (16384/81 * beta_sq^5 * (1-beta_sq)^3)^(1/4)
//   upper = (8192/81 * beta_sq^5 * (1-beta_sq)^3 + 64/3 * beta_sq^2)^(1/4)
double fill_lower_bound(double beta_sq);
double fill_upper_bound(double beta_sq);

// Global ceiling on the fill (balanced-triple value, rounded as adopted).
inline constexpr double kFillCeiling = 0.88889;

// Inversion target: ps^3 + 4*beta_sq*(1-beta_sq)*ps^2 - 3*F^4/(64*beta_sq^2).
double cubic_value(double ps, double fill, double beta_sq);

struct NumericRoot {
  double ps = 0.0;
  double residual = 0.0;
};

// Unique nonnegative root of cubic_value in ps, by sign-change bisection on
// [0, 1 + 1e-9] followed by one Newton polish. Requires fill >= 0 and
// beta_sq in (0,1); throws std::domain_error when the root would exceed 1
// (fill above fill_upper_bound). fill = 0 returns the exact root 0.
NumericRoot ps_from_fill(double fill, double beta_sq);

// Intermediates of the depressed-cubic resolvent in the normalized form
// a0*x^3 + 3*a1*x^2 + 3*a2*x + a3 (so a1 = 4*beta_sq*(1-beta_sq)/3):
//   h = a0*a2 - a1^2, g = a0^2*a3 - 3*a0*a1*a2 + 2*a1^3,
//   discriminant = g^2 + 4*h^3, u3/v3 = (-g +/- sqrt(discriminant))/2.
// root_sum = u3 + v3 taken directly as the root, skipping the cube roots
// and the -a1 shift of the standard resolvent; kept because the self-check
// report quantifies its failure to solve the cubic.
struct CardanoTrace {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  double h = 0.0, g = 0.0;
  double discriminant = 0.0;
  double u3 = 0.0, v3 = 0.0;
  double root_sum = 0.0;
};

struct ClosedFormRoot {
  double ps = 0.0;              // trace.root_sum, the formula taken verbatim
  double cubic_residual = 0.0;  // cubic_value at ps; generally nonzero
  double corrected_root = 0.0;  // cbrt(u3) + cbrt(v3) - a1; solves the cubic
  CardanoTrace trace;
};

// Evaluates the closed-form resolvent verbatim and reports its residual
// alongside the corrected root. When discriminant < 0 the real-arithmetic
// formula is undefined: u3, v3, ps, and both roots come back NaN.
ClosedFormRoot ps_from_fill_closed_form(double fill, double beta_sq);

// Figure data. Grid order is deterministic: outer loop over input tuples,
// inner loop over the swept axis.

// Columns ps,dbar,alpha_sq,beta_sq,gamma_sq,reference; ps sweeps [0,1] on a
// (points-1)-step grid per tuple; reference is the constant 1/3 floor.
SweepTable figure_dbar_vs_ps(
    const std::vector<std::array<double, 3>>& weight_triples,
    std::size_t points);

// Columns n,fill for n = 1..n_max over the one-parameter state family.
SweepTable figure_wn_fill(std::uint64_t n_max);

// Columns beta_sq,fill,ps; fill sweeps [fill_lower_bound, min(upper, ceiling)]
// inclusive. beta_sq outside (0,1) throws std::domain_error; beta_sq above
// 0.17 emits a warning row (the inversion window narrows) but still sweeps;
// an empty fill range emits a warning and zero rows.
SweepTable figure_ps_vs_fill(double beta_sq, std::size_t points);

}  // namespace wqsdc
