#include "wqsdc/cloning.hpp"

#include <cmath>
#include <stdexcept>

namespace wqsdc {

namespace {

const std::vector<std::string> kCloneLabels = {"orig", "copy", "mach"};

double machine_norm0(const CloneSpec& spec) {
  return 1.0 / (1.0 + 2.0 * std::norm(spec.p));
}

double machine_norm1(const CloneSpec& spec) {
  return 1.0 / (1.0 + 2.0 * std::norm(spec.q));
}

}  // namespace

double CloneMap::column_squared_norm(int which) const {
  const std::vector<Cx>& col = (which == 0) ? column0 : column1;
  double n2 = 0.0;
  for (const Cx& a : col) n2 += std::norm(a);
  return n2;
}

bool CloneMap::is_isometry(double tol) const {
  Cx cross{0.0, 0.0};
  for (std::size_t i = 0; i < column0.size(); ++i)
    cross += std::conj(column0[i]) * column1[i];
  return std::abs(column_squared_norm(0) - 1.0) <= tol &&
         std::abs(column_squared_norm(1) - 1.0) <= tol &&
         std::abs(cross) <= tol;
}

CloneMap build_clone_map(const CloneSpec& spec) {
  const double s0 = (spec.convention == Convention::physical)
                        ? std::sqrt(machine_norm0(spec))
                        : 1.0;
  const double s1 = (spec.convention == Convention::physical)
                        ? std::sqrt(machine_norm1(spec))
                        : 1.0;
  // Index layout over (orig, copy, mach): orig is the most significant bit.
  std::vector<Cx> c0(8, Cx{0.0, 0.0});
  std::vector<Cx> c1(8, Cx{0.0, 0.0});
  c0[0b000] = s0;           // |00>|Q0>
  c0[0b010] = spec.p * s0;  // |01>|Q0>
  c0[0b100] = spec.p * s0;  // |10>|Q0>
  c1[0b111] = s1;           // |11>|Q1>
  c1[0b011] = spec.q * s1;  // |01>|Q1>
  c1[0b101] = spec.q * s1;  // |10>|Q1>
  return CloneMap{spec, std::move(c0), std::move(c1)};
}

CloneOutput clone(const StateVector& input, const CloneSpec& spec) {
  if (input.num_qubits() != 1)
    throw std::invalid_argument("clone input must be a single qubit");
  if (std::abs(input.squared_norm() - 1.0) > kNormTolerance)
    throw std::invalid_argument("clone input must be normalized");
  const Cx x = input.amplitude(0);
  const Cx y = input.amplitude(1);
  const CloneMap map = build_clone_map(spec);
  std::vector<Cx> amps(8, Cx{0.0, 0.0});
  for (std::size_t i = 0; i < 8; ++i)
    amps[i] = x * map.column0[i] + y * map.column1[i];
  StateVector state = (spec.convention == Convention::physical)
                          ? StateVector::normalized(kCloneLabels, std::move(amps))
                          : StateVector::unnormalized(kCloneLabels, std::move(amps));
  const double n2 = state.squared_norm();
  return CloneOutput{std::move(state), x, y, spec, n2};
}

DensityMatrix reduced_output(const CloneOutput& output, ReducedKind which,
                             ReducedStyle style) {
  if (style == ReducedStyle::exact) {
    const StateVector psi = output.state.renormalized();
    switch (which) {
      case ReducedKind::original:
        return partial_trace(psi, {"orig"});
      case ReducedKind::copy:
        return partial_trace(psi, {"copy"});
      case ReducedKind::pair:
        return partial_trace(psi, {"orig", "copy"});
    }
  }

  const double n0 = machine_norm0(output.spec);
  const double n1 = machine_norm1(output.spec);
  const double X = std::norm(output.x);
  const double Y = std::norm(output.y);
  const double p2 = std::norm(output.spec.p);
  const double q2 = std::norm(output.spec.q);

  if (which == ReducedKind::pair) {
    // X n0 (|00><00| + 2|p|^2 |xi><xi|) + Y n1 (|11><11| + 2|q|^2 |xi><xi|)
    // with |xi> = (|01> + |10>)/sqrt2; machine cross blocks dropped.
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = X * n0;
    m(3, 3) = Y * n1;
    const double w = 2.0 * (X * p2 * n0 + Y * q2 * n1);
    m(1, 1) = w / 2.0;
    m(2, 2) = w / 2.0;
    m(1, 2) = w / 2.0;
    m(2, 1) = w / 2.0;
    return DensityMatrix{std::move(m), {"orig", "copy"}};
  }

  // Single-qubit reduction with the doubled symmetric-subspace weight; the
  // original and copy marginals coincide by construction.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 0) = X + 2.0 * Y * q2 * n1;
  m(1, 1) = Y + 2.0 * X * p2 * n0;
  const std::string label = (which == ReducedKind::original) ? "orig" : "copy";
  return DensityMatrix{std::move(m), {label}};
}

double analytic_hs_distance(double m, const CloneSpec& spec) {
  if (m < 0.0 || m > 1.0)
    throw std::invalid_argument("m must lie in [0,1]");
  const double n0 = machine_norm0(spec);
  const double n1 = machine_norm1(spec);
  const double p4 = std::norm(spec.p) * std::norm(spec.p);
  const double q4 = std::norm(spec.q) * std::norm(spec.q);
  return 4.0 * q4 * (1.0 - m) * (1.0 - m) * n1 * n1 +
         4.0 * p4 * m * m * n0 * n0 + 2.0 * m * (1.0 - m);
}

double average_hs_distance(const CloneSpec& spec) {
  const double n0 = machine_norm0(spec);
  const double n1 = machine_norm1(spec);
  const double p4 = std::norm(spec.p) * std::norm(spec.p);
  const double q4 = std::norm(spec.q) * std::norm(spec.q);
  return (4.0 / 3.0) * (p4 * n0 * n0 + q4 * n1 * n1) + 1.0 / 3.0;
}

double average_hs_distance_quadrature(const CloneSpec& spec,
                                      std::size_t panels) {
  if (panels < 2 || panels % 2 != 0)
    throw std::invalid_argument("panels must be even and >= 2");
  const auto integrand = [&spec](double m) {
    const double x = std::sqrt(m);
    const double y = std::sqrt(1.0 - m);
    const StateVector input = StateVector::normalized(
        {"in"}, {Cx{x, 0.0}, Cx{y, 0.0}});
    const DensityMatrix rho_in = outer(input);
    DensityMatrix rho_in_anon{rho_in.m, {"orig"}};
    const CloneOutput out = clone(input, spec);
    const DensityMatrix reduced =
        reduced_output(out, ReducedKind::original, ReducedStyle::diagonal_approx);
    return hs_distance(rho_in_anon, reduced);
  };
  const double h = 1.0 / static_cast<double>(panels);
  double acc = integrand(0.0) + integrand(1.0);
  for (std::size_t i = 1; i < panels; ++i)
    acc += integrand(static_cast<double>(i) * h) * ((i % 2 == 1) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace wqsdc
