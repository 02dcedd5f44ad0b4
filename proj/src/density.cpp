#include "wqsdc/density.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace wqsdc {

namespace {

// Bit layout helpers for the big-endian label convention.
std::size_t insert_bits(const std::vector<std::size_t>& shifts,
                        std::size_t pattern) {
  std::size_t out = 0;
  for (std::size_t j = 0; j < shifts.size(); ++j)
    if ((pattern >> (shifts.size() - 1 - j)) & 1u)
      out |= std::size_t{1} << shifts[j];
  return out;
}

}  // namespace

bool DensityMatrix::is_hermitian(double tol) const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      (m + m.adjoint()) * 0.5);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix outer(const StateVector& psi) {
  const std::size_t d = psi.dim();
  Eigen::MatrixXcd m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          psi.amplitude(r) * std::conj(psi.amplitude(c));
  return DensityMatrix{std::move(m), psi.labels()};
}

DensityMatrix partial_trace(const StateVector& psi,
                            const std::vector<std::string>& keep) {
  if (keep.empty()) throw std::invalid_argument("keep set must be non-empty");
  const std::size_t n = psi.num_qubits();
  std::vector<std::size_t> keep_shift(keep.size());
  std::vector<bool> kept(n, false);
  for (std::size_t j = 0; j < keep.size(); ++j) {
    const std::size_t pos = psi.label_index(keep[j]);
    if (kept[pos]) throw std::invalid_argument("duplicate label in keep set");
    kept[pos] = true;
    keep_shift[j] = n - 1 - pos;
  }
  std::vector<std::size_t> env_shift;
  for (std::size_t pos = 0; pos < n; ++pos)
    if (!kept[pos]) env_shift.push_back(n - 1 - pos);

  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t de = std::size_t{1} << env_shift.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                              static_cast<Eigen::Index>(dk));
  for (std::size_t r = 0; r < dk; ++r) {
    const std::size_t rbits = insert_bits(keep_shift, r);
    for (std::size_t c = 0; c < dk; ++c) {
      const std::size_t cbits = insert_bits(keep_shift, c);
      Cx acc{0.0, 0.0};
      for (std::size_t e = 0; e < de; ++e) {
        const std::size_t ebits = insert_bits(env_shift, e);
        acc += psi.amplitude(rbits | ebits) *
               std::conj(psi.amplitude(cbits | ebits));
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix{std::move(m), keep};
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep) {
  if (rho.labels.empty())
    throw std::invalid_argument("density matrix has no label layout");
  if (keep.empty()) throw std::invalid_argument("keep set must be non-empty");
  const std::size_t n = rho.labels.size();
  if (rho.dim() != (std::size_t{1} << n))
    throw std::invalid_argument("density dimension does not match labels");

  std::vector<std::size_t> keep_shift(keep.size());
  std::vector<bool> kept(n, false);
  for (std::size_t j = 0; j < keep.size(); ++j) {
    std::size_t pos = n;
    for (std::size_t i = 0; i < n; ++i)
      if (rho.labels[i] == keep[j]) { pos = i; break; }
    if (pos == n) throw std::invalid_argument("unknown label in keep set");
    if (kept[pos]) throw std::invalid_argument("duplicate label in keep set");
    kept[pos] = true;
    keep_shift[j] = n - 1 - pos;
  }
  std::vector<std::size_t> env_shift;
  for (std::size_t pos = 0; pos < n; ++pos)
    if (!kept[pos]) env_shift.push_back(n - 1 - pos);

  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t de = std::size_t{1} << env_shift.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                              static_cast<Eigen::Index>(dk));
  for (std::size_t r = 0; r < dk; ++r) {
    const std::size_t rbits = insert_bits(keep_shift, r);
    for (std::size_t c = 0; c < dk; ++c) {
      const std::size_t cbits = insert_bits(keep_shift, c);
      Cx acc{0.0, 0.0};
      for (std::size_t e = 0; e < de; ++e) {
        const std::size_t ebits = insert_bits(env_shift, e);
        acc += rho.m(static_cast<Eigen::Index>(rbits | ebits),
                     static_cast<Eigen::Index>(cbits | ebits));
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix{std::move(m), keep};
}

double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("dimension mismatch in hs_distance");
  const Eigen::MatrixXcd d = rho.m - sigma.m;
  return (d * d.adjoint()).trace().real();
}

double fidelity(const StateVector& pure, const StateVector& other) {
  if (pure.dim() != other.dim())
    throw std::invalid_argument("dimension mismatch in fidelity");
  Cx inner{0.0, 0.0};
  for (std::size_t i = 0; i < pure.dim(); ++i)
    inner += std::conj(pure.amplitude(i)) * other.amplitude(i);
  return std::norm(inner);
}

double fidelity(const StateVector& pure, const DensityMatrix& rho) {
  if (pure.dim() != rho.dim())
    throw std::invalid_argument("dimension mismatch in fidelity");
  Cx acc{0.0, 0.0};
  for (std::size_t r = 0; r < pure.dim(); ++r)
    for (std::size_t c = 0; c < pure.dim(); ++c)
      acc += std::conj(pure.amplitude(r)) *
             rho.m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
             pure.amplitude(c);
  return acc.real();
}

}  // namespace wqsdc
