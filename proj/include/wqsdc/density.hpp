// Density matrices, partial traces and the two state-comparison metrics used
// throughout the toolkit (Hilbert-Schmidt distance and fidelity).

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "wqsdc/statevector.hpp"

namespace wqsdc {

struct DensityMatrix {
  Eigen::MatrixXcd m;
  // Label bookkeeping for reduced operators; empty for anonymous matrices.
  std::vector<std::string> labels;

  std::size_t dim() const { return static_cast<std::size_t>(m.rows()); }
  Cx trace() const { return m.trace(); }
  bool is_hermitian(double tol) const;
  double min_eigenvalue() const;  // smallest eigenvalue of the Hermitian part
};

// |psi><psi| with whatever norm psi carries (no implicit renormalization).
DensityMatrix outer(const StateVector& psi);

// Reduced operator over the kept labels, in the order given by keep.
// keep must be a non-empty subset of the state labels.
DensityMatrix partial_trace(const StateVector& psi,
                            const std::vector<std::string>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep);

// Tr[(rho - sigma)(rho - sigma)^dagger]; symmetric and >= 0.
double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

double fidelity(const StateVector& pure, const StateVector& other);  // |<a|b>|^2
double fidelity(const StateVector& pure, const DensityMatrix& rho);  // <a|rho|a>

}  // namespace wqsdc
