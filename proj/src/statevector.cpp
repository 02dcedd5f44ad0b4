#include "wqsdc/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

namespace wqsdc {

namespace {

void check_shape(const std::vector<std::string>& labels,
                 const std::vector<Cx>& amps) {
  if (labels.size() > 20)
    throw std::invalid_argument("state vector limited to 20 qubits");
  const std::size_t want = std::size_t{1} << labels.size();
  if (amps.size() != want)
    throw std::invalid_argument("amplitude count does not match label count");
  std::set<std::string> uniq(labels.begin(), labels.end());
  if (uniq.size() != labels.size())
    throw std::invalid_argument("duplicate qubit label");
  for (const Cx& a : amps)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("non-finite amplitude");
}

}  // namespace

StateVector::StateVector() : labels_{}, amps_{Cx{1.0, 0.0}}, normalized_(true) {}

StateVector::StateVector(std::vector<std::string> labels,
                         std::vector<Cx> amplitudes, bool normalized)
    : labels_(std::move(labels)),
      amps_(std::move(amplitudes)),
      normalized_(normalized) {}

StateVector StateVector::normalized(std::vector<std::string> labels,
                                    std::vector<Cx> amplitudes) {
  check_shape(labels, amplitudes);
  double n2 = 0.0;
  for (const Cx& a : amplitudes) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > kNormTolerance)
    throw std::invalid_argument("state not normalized within tolerance");
  const double scale = 1.0 / std::sqrt(n2);
  for (Cx& a : amplitudes) a *= scale;
  return StateVector(std::move(labels), std::move(amplitudes), true);
}

StateVector StateVector::unnormalized(std::vector<std::string> labels,
                                      std::vector<Cx> amplitudes) {
  check_shape(labels, amplitudes);
  return StateVector(std::move(labels), std::move(amplitudes), false);
}

StateVector StateVector::basis(std::vector<std::string> labels,
                               std::size_t index) {
  const std::size_t dim = std::size_t{1} << labels.size();
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  std::vector<Cx> amps(dim, Cx{0.0, 0.0});
  amps[index] = Cx{1.0, 0.0};
  return normalized(std::move(labels), std::move(amps));
}

double StateVector::squared_norm() const {
  double n2 = 0.0;
  for (const Cx& a : amps_) n2 += std::norm(a);
  return n2;
}

StateVector StateVector::renormalized() const {
  const double n2 = squared_norm();
  if (n2 < 1e-300) throw std::domain_error("cannot normalize a zero vector");
  std::vector<Cx> amps = amps_;
  const double scale = 1.0 / std::sqrt(n2);
  for (Cx& a : amps) a *= scale;
  return StateVector(labels_, std::move(amps), true);
}

std::size_t StateVector::label_index(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw std::invalid_argument("unknown qubit label: " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

void StateVector::dump(std::ostream& out) const {
  out.precision(17);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    out << i << '\t' << amps_[i].real() << '\t' << amps_[i].imag() << '\n';
}

StateVector tensor(const std::vector<StateVector>& parts) {
  std::vector<std::string> labels;
  std::vector<Cx> amps{Cx{1.0, 0.0}};
  bool normalized = true;
  for (const StateVector& part : parts) {
    labels.insert(labels.end(), part.labels().begin(), part.labels().end());
    std::vector<Cx> next(amps.size() * part.dim());
    for (std::size_t i = 0; i < amps.size(); ++i)
      for (std::size_t j = 0; j < part.dim(); ++j)
        next[i * part.dim() + j] = amps[i] * part.amplitude(j);
    amps = std::move(next);
    normalized = normalized && part.normalized_flag();
  }
  std::set<std::string> uniq(labels.begin(), labels.end());
  if (uniq.size() != labels.size())
    throw std::invalid_argument("duplicate qubit label across tensor parts");
  return normalized ? StateVector::normalized(std::move(labels), std::move(amps))
                    : StateVector::unnormalized(std::move(labels), std::move(amps));
}

StateVector apply_on(const StateVector& state, const std::vector<Cx>& op,
                     const std::vector<std::string>& targets) {
  const std::size_t k = targets.size();
  const std::size_t d = std::size_t{1} << k;
  if (op.size() != d * d)
    throw std::invalid_argument("operator dimension does not match target count");

  // Unitarity gate: op^dagger op = identity within kUnitaryTolerance.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Cx acc{0.0, 0.0};
      for (std::size_t r = 0; r < d; ++r)
        acc += std::conj(op[r * d + i]) * op[r * d + j];
      const Cx want = (i == j) ? Cx{1.0, 0.0} : Cx{0.0, 0.0};
      if (std::abs(acc - want) > kUnitaryTolerance)
        throw std::invalid_argument("operator is not unitary within tolerance");
    }
  }

  const std::size_t n = state.num_qubits();
  std::vector<std::size_t> shift(k);
  for (std::size_t j = 0; j < k; ++j)
    shift[j] = n - 1 - state.label_index(targets[j]);

  std::vector<Cx> out(state.dim(), Cx{0.0, 0.0});
  const std::vector<Cx>& in = state.amplitudes();
  for (std::size_t base = 0; base < state.dim(); ++base) {
    bool clear = true;
    for (std::size_t j = 0; j < k; ++j)
      if ((base >> shift[j]) & 1u) { clear = false; break; }
    if (!clear) continue;
    // base has all target bits zero; scatter the local operator block.
    for (std::size_t r = 0; r < d; ++r) {
      std::size_t row = base;
      for (std::size_t j = 0; j < k; ++j)
        if ((r >> (k - 1 - j)) & 1u) row |= std::size_t{1} << shift[j];
      Cx acc{0.0, 0.0};
      for (std::size_t c = 0; c < d; ++c) {
        std::size_t col = base;
        for (std::size_t j = 0; j < k; ++j)
          if ((c >> (k - 1 - j)) & 1u) col |= std::size_t{1} << shift[j];
        acc += op[r * d + c] * in[col];
      }
      out[row] = acc;
    }
  }
  return state.normalized_flag()
             ? StateVector::normalized(state.labels(), std::move(out))
             : StateVector::unnormalized(state.labels(), std::move(out));
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.dim() != b.dim()) return false;
  Cx inner{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i)
    inner += std::conj(a.amplitude(i)) * b.amplitude(i);
  return std::abs(std::norm(inner) - a.squared_norm() * b.squared_norm()) <= tol;
}

}  // namespace wqsdc
