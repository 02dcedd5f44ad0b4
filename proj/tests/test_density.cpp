#include <cmath>

#include "doctest.h"
#include "wqsdc/density.hpp"

using wqsdc::Cx;
using wqsdc::DensityMatrix;
using wqsdc::StateVector;

TEST_SUITE("density") {

TEST_CASE("outer product of a pure state has unit trace") {
  StateVector s =
      StateVector::normalized({"A"}, {Cx{0.6, 0}, Cx{0.0, 0.8}});
  DensityMatrix rho = wqsdc::outer(s);
  CHECK(rho.dim() == 2);
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rho.is_hermitian(1e-12));
  CHECK(rho.min_eigenvalue() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("partial trace of a product state recovers the factor") {
  StateVector a = StateVector::normalized({"A"}, {Cx{0.6, 0}, Cx{0.8, 0}});
  StateVector b = StateVector::basis({"B"}, 1);
  StateVector t = wqsdc::tensor({a, b});
  DensityMatrix ra = wqsdc::partial_trace(t, {"A"});
  CHECK(ra.m(0, 0).real() == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(ra.m(1, 1).real() == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(ra.m(0, 1).real() == doctest::Approx(0.48).epsilon(1e-12));
}

TEST_CASE("partial trace of a maximally entangled pair is maximally mixed") {
  double r = 1.0 / std::sqrt(2.0);
  StateVector bell = StateVector::normalized(
      {"A", "B"}, {Cx{r, 0}, Cx{0, 0}, Cx{0, 0}, Cx{r, 0}});
  DensityMatrix ra = wqsdc::partial_trace(bell, {"A"});
  CHECK(ra.m(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ra.m(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(ra.m(0, 1)) < 1e-12);
}

TEST_CASE("partial trace keep-order controls the reduced layout") {
  StateVector a = StateVector::basis({"A"}, 0);
  StateVector b = StateVector::basis({"B"}, 1);
  StateVector t = wqsdc::tensor({a, b});
  // keep {B, A}: index 0b10 means B=1, A=0, which is the support.
  DensityMatrix rba = wqsdc::partial_trace(t, {"B", "A"});
  CHECK(rba.m(2, 2).real() == doctest::Approx(1.0).epsilon(1e-12));
  DensityMatrix rab = wqsdc::partial_trace(t, {"A", "B"});
  CHECK(rab.m(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("density-input partial trace matches the pure-state path") {
  StateVector s = StateVector::normalized(
      {"A", "B"}, {Cx{0.5, 0}, Cx{0.5, 0}, Cx{0.5, 0}, Cx{-0.5, 0}});
  DensityMatrix full = wqsdc::outer(s);
  full.labels = s.labels();
  DensityMatrix from_rho = wqsdc::partial_trace(full, {"B"});
  DensityMatrix from_psi = wqsdc::partial_trace(s, {"B"});
  CHECK(wqsdc::hs_distance(from_rho, from_psi) ==
        doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("hs_distance between orthogonal pure states is 2") {
  DensityMatrix r0 = wqsdc::outer(StateVector::basis({"A"}, 0));
  DensityMatrix r1 = wqsdc::outer(StateVector::basis({"A"}, 1));
  CHECK(wqsdc::hs_distance(r0, r1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(wqsdc::hs_distance(r0, r0) == doctest::Approx(0.0));
}

TEST_CASE("fidelity of pure states is the squared overlap") {
  StateVector a = StateVector::normalized({"A"}, {Cx{0.6, 0}, Cx{0.8, 0}});
  StateVector b = StateVector::basis({"A"}, 0);
  CHECK(wqsdc::fidelity(a, b) == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(wqsdc::fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fidelity against a density matrix is the expectation") {
  StateVector a = StateVector::normalized({"A"}, {Cx{0.6, 0}, Cx{0.8, 0}});
  DensityMatrix mixed;
  mixed.m = Eigen::MatrixXcd::Zero(2, 2);
  mixed.m(0, 0) = 0.5;
  mixed.m(1, 1) = 0.5;
  CHECK(wqsdc::fidelity(a, mixed) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("dimension mismatches are rejected") {
  StateVector a = StateVector::basis({"A"}, 0);
  StateVector ab = StateVector::basis({"A", "B"}, 0);
  CHECK_THROWS_AS(wqsdc::fidelity(a, ab), std::invalid_argument);
  DensityMatrix r1 = wqsdc::outer(a);
  DensityMatrix r2 = wqsdc::outer(ab);
  CHECK_THROWS_AS(wqsdc::hs_distance(r1, r2), std::invalid_argument);
}

}  // TEST_SUITE
