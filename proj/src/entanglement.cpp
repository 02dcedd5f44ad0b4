#include "wqsdc/entanglement.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "wqsdc/density.hpp"

namespace wqsdc {

namespace {

double one_to_rest_c2(const StateVector& state, const std::string& label) {
  DensityMatrix rho = partial_trace(state, {label});
  std::complex<double> det =
      rho.m(0, 0) * rho.m(1, 1) - rho.m(0, 1) * rho.m(1, 0);
  double value = 4.0 * det.real();
  if (value < -kDetTolerance) {
    throw std::invalid_argument("concurrence_triple: negative determinant " +
                                std::to_string(value));
  }
  return value < 0.0 ? 0.0 : value;
}

FillReport fill_from_triple(const ConcurrenceTriple& triple) {
  double q = 0.5 * (triple.c2_a_bc + triple.c2_b_ac + triple.c2_c_ab);
  double radicand = (16.0 / 3.0) * q * (q - triple.c2_a_bc) *
                    (q - triple.c2_b_ac) * (q - triple.c2_c_ab);
  if (radicand < -kRadicandTolerance) {
    throw std::invalid_argument("concurrence_fill: negative radicand " +
                                std::to_string(radicand));
  }
  double fill = radicand <= 0.0 ? 0.0 : std::sqrt(std::sqrt(radicand));
  return FillReport{triple, q, fill};
}

}  // namespace

ConcurrenceTriple concurrence_triple(const StateVector& state) {
  if (state.num_qubits() != 3) {
    throw std::invalid_argument("concurrence_triple: need three qubits");
  }
  if (!state.normalized_flag()) {
    throw std::invalid_argument("concurrence_triple: need a normalized state");
  }
  return ConcurrenceTriple{one_to_rest_c2(state, state.labels()[0]),
                           one_to_rest_c2(state, state.labels()[1]),
                           one_to_rest_c2(state, state.labels()[2])};
}

FillReport concurrence_fill(const StateVector& state) {
  return fill_from_triple(concurrence_triple(state));
}

FillReport concurrence_fill_closed(double alpha_sq, double beta_sq,
                                   double gamma_sq) {
  if (alpha_sq < 0.0 || beta_sq < 0.0 || gamma_sq < 0.0) {
    throw std::invalid_argument("concurrence_fill_closed: negative weight");
  }
  double sum = alpha_sq + beta_sq + gamma_sq;
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw std::invalid_argument(
        "concurrence_fill_closed: weights must sum to 1");
  }
  // One-excitation family: each one-to-rest squared concurrence is
  // 4 s (1 - s) for the corresponding squared magnitude s.
  ConcurrenceTriple triple{4.0 * gamma_sq * (1.0 - gamma_sq),
                           4.0 * beta_sq * (1.0 - beta_sq),
                           4.0 * alpha_sq * (1.0 - alpha_sq)};
  return fill_from_triple(triple);
}

StateVector wn_state(const WnParams& params) {
  if (params.n < 1) {
    throw std::invalid_argument("wn_state: n must be at least 1");
  }
  double n = static_cast<double>(params.n);
  double scale = 1.0 / std::sqrt(2.0 + 2.0 * n);
  std::vector<Cx> amps(8, Cx{0.0, 0.0});
  amps[0b100] = scale;
  amps[0b010] = std::sqrt(n) * std::exp(Cx{0.0, params.phase_g}) * scale;
  amps[0b001] =
      std::sqrt(n + 1.0) * std::exp(Cx{0.0, params.phase_d}) * scale;
  return StateVector::normalized({"A", "B", "C"}, amps);
}

double wn_fill(std::uint64_t n_index) {
  if (n_index < 1) {
    throw std::invalid_argument("wn_fill: n must be at least 1");
  }
  double n = static_cast<double>(n_index);
  double inner =
      n * n * (n * n + 3.0 * n + 1.0) / (3.0 * std::pow(1.0 + n, 6.0));
  return 2.0 * std::sqrt(std::sqrt(inner));
}

}  // namespace wqsdc
