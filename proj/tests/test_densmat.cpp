// Copyright 2026 The eigenfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "eigenfid/densmat.hpp"
#include "eigenfid/error.hpp"
#include "support/oracles.hpp"
#include "support/random_objects.hpp"

using namespace eigenfid;

namespace {

DensityMatrix diag2(double a, double b) {
  const double p[] = {a, b};
  return DensityMatrix::diagonal(p);
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an eigenfid::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("density matrix validation") {
  CMatrix m(2, 2);
  m << 0.5, cplx(0, 0.1), cplx(0, 0.1), 0.5;  // not Hermitian
  CHECK(code_of([&] { DensityMatrix r(m); }) == ErrorCode::NonHermitianInput);
  m << 0.6, 0, 0, 0.6;
  CHECK(code_of([&] { DensityMatrix r(m); }) == ErrorCode::NotDensityMatrix);
  m << 1.2, 0, 0, -0.2;
  CHECK(code_of([&] { DensityMatrix r(m); }) == ErrorCode::NotDensityMatrix);
  CVector v(2);
  v << 1.0, 1.0;
  CHECK(code_of([&] { PureState p(v); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("eigendecompose: trivial spectra") {
  const double p[] = {0.2, 0.5, 0.3};
  const Spectrum s = eigendecompose(DensityMatrix::diagonal(p));
  CHECK(s.values[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s.values[1] == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(s.values[2] == doctest::Approx(0.2).epsilon(1e-14));

  const Spectrum pure = eigendecompose(DensityMatrix::from_pure(PureState::basis(2, 0)));
  CHECK(pure.values[0] == doctest::Approx(1.0));
  CHECK(std::abs(pure.values[1]) < 1e-14);
}

TEST_CASE("eigendecompose matches power iteration with deflation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = testsupport::random_density(rng, 4, 4);
    const Spectrum s = eigendecompose(DensityMatrix(m));
    const std::vector<double> ref = testsupport::power_iteration_eigenvalues(m);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(s.values[i] - ref[static_cast<size_t>(i)]) < 1e-8);
    CHECK(std::abs(s.values.sum() - 1.0) < 1e-10);
    // orthonormal columns and reconstruction
    CHECK((s.vectors.adjoint() * s.vectors - CMatrix::Identity(4, 4)).norm() < 1e-10);
    const CMatrix back = s.vectors * s.values.cast<cplx>().asDiagonal() * s.vectors.adjoint();
    CHECK((back - m).norm() < 1e-10);
    for (int i = 0; i + 1 < 4; ++i) CHECK(s.values[i] >= s.values[i + 1]);
  }
}

TEST_CASE("eigenfidelity examples") {
  std::mt19937_64 rng(3);
  const PureState psi(testsupport::random_vector(rng, 3));
  CHECK(eigenfidelity(DensityMatrix::from_pure(psi)).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eigenfidelity(DensityMatrix::maximally_mixed(2)).value == doctest::Approx(0.5).epsilon(1e-14));
  const Eigenfidelity r = eigenfidelity(diag2(0.75, 0.25));
  CHECK(r.value == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(std::abs(std::abs(r.closest[0]) - 1.0) < 1e-12);
  CHECK(eigenerror(diag2(0.75, 0.25)) == doctest::Approx(0.25));
}

TEST_CASE("fidelity_to_pure") {
  CHECK(fidelity_to_pure(diag2(0.75, 0.25), PureState::basis(2, 0)) == doctest::Approx(0.75));
  std::mt19937_64 rng(5);
  const PureState psi(testsupport::random_vector(rng, 4));
  CHECK(fidelity_to_pure(DensityMatrix::from_pure(psi), psi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(code_of([&] { fidelity_to_pure(diag2(0.5, 0.5), psi); }) == ErrorCode::DimensionMismatch);

  // spectral-expansion oracle: sum_i f_i |<psi_i|phi>|^2
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = testsupport::random_density(rng, 5, 3);
    const PureState phi(testsupport::random_vector(rng, 5));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    double expect = 0.0;
    for (int i = 0; i < 5; ++i) {
      expect += es.eigenvalues()[i] * std::norm(es.eigenvectors().col(i).dot(phi.amplitudes()));
    }
    CHECK(std::abs(fidelity_to_pure(DensityMatrix(m), phi) - expect) < 1e-10);
  }
}

TEST_CASE("schatten norm examples and errors") {
  std::mt19937_64 rng(8);
  const PureState psi(testsupport::random_vector(rng, 3));
  CHECK(schatten_norm(DensityMatrix::from_pure(psi), 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(schatten_norm(DensityMatrix::maximally_mixed(2), 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(schatten_norm(diag2(0.75, 0.25), 2.0) == doctest::Approx(std::sqrt(0.625)).epsilon(1e-14));
  CHECK(code_of([&] { schatten_norm(diag2(0.5, 0.5), 0.0); }) == ErrorCode::InvalidOrder);
  CHECK(code_of([&] { schatten_norm(diag2(0.5, 0.5), -1.0); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("purity, linear entropy and the eigenfidelity interval") {
  CHECK(purity(diag2(0.75, 0.25)) == doctest::Approx(0.625));
  CHECK(linear_entropy(diag2(0.75, 0.25)) == doctest::Approx(0.375));
  CHECK(purity(DensityMatrix::maximally_mixed(2)) == doctest::Approx(0.5));
  CHECK(purity(DensityMatrix::from_pure(PureState::basis(3, 1))) == doctest::Approx(1.0));

  Interval b = eigenfidelity_bounds(diag2(0.75, 0.25));
  CHECK(b.lower == doctest::Approx(0.625));
  CHECK(b.upper == doctest::Approx(0.8125));
  b = eigenfidelity_bounds(DensityMatrix::maximally_mixed(2));
  CHECK(b.lower == doctest::Approx(0.5));
  CHECK(b.upper == doctest::Approx(0.75));
  b = eigenfidelity_bounds(DensityMatrix::from_pure(PureState::basis(2, 1)));
  CHECK(b.lower == doctest::Approx(1.0));
  CHECK(b.upper == doctest::Approx(1.0));
}

TEST_CASE("passive state and effective temperature") {
  const EnergyBasis basis = EnergyBasis::canonical((RVector(2) << 0.0, 1.0).finished());
  const DensityMatrix p = passive_state(diag2(0.3, 0.7), basis);
  CHECK(p(0, 0).real() == doctest::Approx(0.7));
  CHECK(p(1, 1).real() == doctest::Approx(0.3));

  const DensityMatrix pure = passive_state(DensityMatrix::from_pure(PureState::basis(2, 1)), basis);
  CHECK(pure(0, 0).real() == doctest::Approx(1.0));

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho(testsupport::random_density(rng, 2, 2));
    const DensityMatrix ps = passive_state(rho, basis);
    const Spectrum s = eigendecompose(rho);
    CHECK(std::abs(ps(0, 1)) < 1e-12);
    CHECK(ps(0, 0).real() == doctest::Approx(s.values[0]).epsilon(1e-12));
    CHECK(ps(1, 1).real() == doctest::Approx(s.values[1]).epsilon(1e-12));
    CHECK(std::abs(eigenfidelity(ps).value - eigenfidelity(rho).value) < 1e-12);
  }

  CHECK(effective_temperature(DensityMatrix::from_pure(PureState::basis(2, 0)), basis) == 0.0);
  CHECK(std::isinf(effective_temperature(DensityMatrix::maximally_mixed(2), basis)));
  const double r = 1.0 / (1.0 + std::exp(-1.0));
  CHECK(effective_temperature(diag2(r, 1.0 - r), basis) == doctest::Approx(1.0).epsilon(1e-12));
  const double p3[] = {0.5, 0.3, 0.2};
  CHECK(code_of([&] {
          effective_temperature(DensityMatrix::diagonal(p3),
                                EnergyBasis::canonical((RVector(3) << 0, 1, 2).finished()));
        }) == ErrorCode::InvalidDimension);
}

TEST_CASE("property: inequality chains on random states") {
  std::mt19937_64 rng(2024);
  const double orders[] = {1, 2, 4, 8, 16};
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 7;
    const int rank = 1 + trial % d;
    const DensityMatrix rho(testsupport::random_density(rng, d, rank));
    const Eigenfidelity top = eigenfidelity(rho);
    const double r = top.value;
    for (int k = 0; k < 30; ++k) {
      CHECK(fidelity_to_pure(rho, PureState(testsupport::random_vector(rng, d))) <= r + 1e-12);
    }
    CHECK(std::abs(fidelity_to_pure(rho, top.closest) - r) < 1e-10);

    double previous = std::numeric_limits<double>::infinity();
    for (double p : orders) {
      const double n = schatten_norm(rho, p);
      CHECK(n / std::pow(d, 1.0 / p) <= r + 1e-10);
      CHECK(r <= n + 1e-10);
      if (p > 1) CHECK(std::pow(n, p / (p - 1)) <= r + 1e-10);
      CHECK(n >= std::pow(d, 1.0 / p) / d - 1e-10);  // norm never below the maximally mixed one
      CHECK(n <= previous + 1e-12);                  // non-increasing as p doubles
      previous = n;
    }
    const Interval b = eigenfidelity_bounds(rho);
    CHECK(b.lower <= r + 1e-12);
    CHECK(r <= b.upper + 1e-12);
    const double sl = linear_entropy(rho);
    CHECK(0.5 * sl <= 1.0 - r + 1e-12);
    CHECK(1.0 - r <= sl + 1e-12);
  }
}

TEST_CASE("property: Schatten norms converge to the spectral radius") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho(testsupport::random_density(rng, 2, 2));
    CHECK(std::abs(schatten_norm(rho, 64.0) - eigenfidelity(rho).value) <= 0.02);
  }
}
