#include "wqsdc/tradeoff.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wqsdc {

double window_margin(double ps, double beta_sq) {
  double t = 1.0 - beta_sq + ps / 2.0;
  return t * t + ps * ps / 4.0 - ps / 2.0;
}

double dbar_from_ps(double ps, double beta_sq, double alpha_sq,
                    double gamma_sq) {
  double na = 1.0 + 2.0 * alpha_sq;
  double ng = 1.0 + 2.0 * gamma_sq;
  return 1.0 / 3.0 +
         (4.0 / 3.0) * window_margin(ps, beta_sq) / (ng * ng * na * na);
}

PsWindow ps_window(double beta_sq) {
  PsWindow w;
  w.beta_sq = beta_sq;
  if (beta_sq < kWindowThresholdBetaSq - 1e-12) {
    return w;
  }
  // At the threshold the discriminant is an exact zero that rounds slightly
  // negative; clamp so the degenerate window survives.
  double disc = 12.0 * beta_sq - 4.0 * beta_sq * beta_sq - 7.0;
  disc = std::max(0.0, disc);
  double half = 0.5 * std::sqrt(disc);
  w.empty = false;
  w.lo = (beta_sq - 0.5) - half;
  w.hi = (beta_sq - 0.5) + half;
  return w;
}

std::array<double, 2> alpha_gamma_budget() {
  return {0.0, 1.0 / std::sqrt(2.0) - 0.5};
}

double max_constrained_ps(double beta_sq) {
  double rest = 1.0 - beta_sq;
  return rest * rest;
}

double fill_from_ps(double ps, double beta_sq) {
  double b2 = beta_sq * beta_sq;
  double radicand =
      (64.0 / 3.0) * ps * ps * b2 * (ps + 4.0 * beta_sq - 4.0 * b2);
  return std::sqrt(std::sqrt(std::max(0.0, radicand)));
}

ConcurrenceTriple cfill_components(double ps, double alpha_sq, double beta_sq,
                                   double gamma_sq) {
  if (alpha_sq <= 0.0 || gamma_sq <= 0.0) {
    throw std::domain_error(
        "cfill_components: alpha_sq and gamma_sq must be positive");
  }
  ConcurrenceTriple t;
  t.c2_a_bc = ps * (1.0 - gamma_sq) / alpha_sq;
  t.c2_b_ac = 4.0 * beta_sq * (1.0 - beta_sq);
  t.c2_c_ab = ps * (1.0 - alpha_sq) / gamma_sq;
  return t;
}

double fill_lower_bound(double beta_sq) {
  double rest = 1.0 - beta_sq;
  double radicand =
      (16384.0 / 81.0) * std::pow(beta_sq, 5) * rest * rest * rest;
  return std::sqrt(std::sqrt(std::max(0.0, radicand)));
}

double fill_upper_bound(double beta_sq) {
  double rest = 1.0 - beta_sq;
  double radicand =
      (8192.0 / 81.0) * std::pow(beta_sq, 5) * rest * rest * rest +
      (64.0 / 3.0) * beta_sq * beta_sq;
  return std::sqrt(std::sqrt(std::max(0.0, radicand)));
}

double cubic_value(double ps, double fill, double beta_sq) {
  double c2 = 4.0 * beta_sq * (1.0 - beta_sq);
  double f2 = fill * fill;
  return ps * ps * ps + c2 * ps * ps -
         3.0 * f2 * f2 / (64.0 * beta_sq * beta_sq);
}

NumericRoot ps_from_fill(double fill, double beta_sq) {
  if (!(fill >= 0.0)) {
    throw std::domain_error("ps_from_fill: fill must be nonnegative");
  }
  if (!(beta_sq > 0.0 && beta_sq < 1.0)) {
    throw std::domain_error("ps_from_fill: beta_sq must lie in (0,1)");
  }
  if (fill == 0.0) {
    return {0.0, 0.0};
  }
  double lo = 0.0;
  double hi = 1.0 + 1e-9;
  if (cubic_value(hi, fill, beta_sq) < 0.0) {
    throw std::domain_error(
        "ps_from_fill: no root in [0,1]; fill exceeds fill_upper_bound(" +
        std::to_string(beta_sq) + ")");
  }
  // cubic_value(0) = -3 fill^4 / (64 beta_sq^2) < 0, so the bracket holds.
  while (hi - lo > 1e-14) {
    double mid = 0.5 * (lo + hi);
    if (cubic_value(mid, fill, beta_sq) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double p = 0.5 * (lo + hi);
  double c2 = 4.0 * beta_sq * (1.0 - beta_sq);
  double deriv = 3.0 * p * p + 2.0 * c2 * p;
  if (deriv > 0.0) {
    p -= cubic_value(p, fill, beta_sq) / deriv;
  }
  return {p, cubic_value(p, fill, beta_sq)};
}

ClosedFormRoot ps_from_fill_closed_form(double fill, double beta_sq) {
  if (!(beta_sq > 0.0 && beta_sq < 1.0)) {
    throw std::domain_error(
        "ps_from_fill_closed_form: beta_sq must lie in (0,1)");
  }
  ClosedFormRoot out;
  CardanoTrace& t = out.trace;
  double c2 = 4.0 * beta_sq * (1.0 - beta_sq);
  double f2 = fill * fill;
  t.a0 = 1.0;
  t.a1 = c2 / 3.0;
  t.a2 = 0.0;
  t.a3 = -3.0 * f2 * f2 / (64.0 * beta_sq * beta_sq);
  t.h = t.a0 * t.a2 - t.a1 * t.a1;
  t.g = t.a0 * t.a0 * t.a3 - 3.0 * t.a0 * t.a1 * t.a2 + 2.0 * t.a1 * t.a1 * t.a1;
  t.discriminant = t.g * t.g + 4.0 * t.h * t.h * t.h;
  double nan = std::numeric_limits<double>::quiet_NaN();
  if (t.discriminant < 0.0) {
    t.u3 = nan;
    t.v3 = nan;
    t.root_sum = nan;
    out.ps = nan;
    out.cubic_residual = nan;
    out.corrected_root = nan;
    return out;
  }
  double sq = std::sqrt(t.discriminant);
  t.u3 = 0.5 * (-t.g + sq);
  t.v3 = 0.5 * (-t.g - sq);
  t.root_sum = t.u3 + t.v3;
  out.ps = t.root_sum;
  out.cubic_residual = cubic_value(out.ps, fill, beta_sq);
  out.corrected_root = std::cbrt(t.u3) + std::cbrt(t.v3) - t.a1;
  return out;
}

SweepTable figure_dbar_vs_ps(
    const std::vector<std::array<double, 3>>& weight_triples,
    std::size_t points) {
  if (points < 2) {
    throw std::domain_error("figure_dbar_vs_ps: points must be at least 2");
  }
  SweepTable table;
  table.columns = {"ps", "dbar", "alpha_sq", "beta_sq", "gamma_sq",
                   "reference"};
  for (const auto& w : weight_triples) {
    for (std::size_t i = 0; i < points; ++i) {
      double ps = static_cast<double>(i) / static_cast<double>(points - 1);
      table.rows.push_back({ps, dbar_from_ps(ps, w[1], w[0], w[2]), w[0],
                            w[1], w[2], 1.0 / 3.0});
    }
  }
  return table;
}

SweepTable figure_wn_fill(std::uint64_t n_max) {
  if (n_max < 1) {
    throw std::domain_error("figure_wn_fill: n_max must be at least 1");
  }
  SweepTable table;
  table.columns = {"n", "fill"};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    table.rows.push_back({static_cast<double>(n), wn_fill(n)});
  }
  return table;
}

SweepTable figure_ps_vs_fill(double beta_sq, std::size_t points) {
  if (!(beta_sq > 0.0 && beta_sq < 1.0)) {
    throw std::domain_error("figure_ps_vs_fill: beta_sq must lie in (0,1)");
  }
  if (points < 2) {
    throw std::domain_error("figure_ps_vs_fill: points must be at least 2");
  }
  SweepTable table;
  table.columns = {"beta_sq", "fill", "ps"};
  if (beta_sq > 0.17) {
    table.warnings.push_back(
        "beta_sq " + format_value(beta_sq) +
        " exceeds 0.17; the invertible fill range narrows toward the ceiling");
  }
  double lo = fill_lower_bound(beta_sq);
  double hi = std::min(fill_upper_bound(beta_sq), kFillCeiling);
  if (hi < lo) {
    table.warnings.push_back("empty fill range at beta_sq " +
                             format_value(beta_sq) + ": lower bound " +
                             format_value(lo) + " exceeds cap " +
                             format_value(hi));
    return table;
  }
  for (std::size_t i = 0; i < points; ++i) {
    double f =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    table.rows.push_back({beta_sq, f, ps_from_fill(f, beta_sq).ps});
  }
  return table;
}

}  // namespace wqsdc
