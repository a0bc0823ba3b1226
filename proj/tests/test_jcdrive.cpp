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
#include <random>

#include "eigenfid/error.hpp"
#include "eigenfid/jcdrive.hpp"
#include "support/oracles.hpp"
#include "support/random_objects.hpp"

using namespace eigenfid;

namespace {

double channel_diff(const QubitChannel& a, const QubitChannel& b) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, (a.image(i, j) - b.image(i, j)).cwiseAbs().maxCoeff());
  return d;
}

// Compares against the truncated bipartite Hamiltonian diagonalized directly.
double brute_force_gap(const DriveDistribution& drive, double g, double tau) {
  const int n_cut = drive.n_max() + 2;
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(drive.n_max() + 1);
  for (int n = drive.n_min(); n <= drive.n_max(); ++n) amps[n] = drive.amplitude(n);
  const double t = tau / (g * std::sqrt(drive.mean()));
  Eigen::Matrix2cd images[2][2];
  testsupport::brute_force_jc_images(amps, g, t, n_cut, images);
  JCConfig cfg;
  cfg.coupling = g;
  cfg.tau = tau;
  const QubitChannel ch = build_channel_exact(drive, cfg);
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, (ch.image(i, j) - images[i][j]).cwiseAbs().maxCoeff());
  return d;
}

}  // namespace

TEST_CASE("drive distributions") {
  const DriveDistribution p = poisson_drive(25.0);
  CHECK(p.kind() == DriveKind::Poisson);
  CHECK(p.coefficients().norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.realized_mean() == doctest::Approx(25.0).epsilon(1e-9));
  CHECK(p.realized_variance() == doctest::Approx(25.0).epsilon(1e-8));
  CHECK(p.moments_consistent());
  CHECK(std::norm(p.amplitude(25)) ==
        doctest::Approx(std::exp(-25.0 + 25 * std::log(25.0) - std::lgamma(26.0))).epsilon(1e-10));
  CHECK(p.amplitude(-1) == cplx(0.0));

  const DriveDistribution b = binomial_drive(25.0, 5.0);
  CHECK(b.binomial_width() == 20);
  CHECK(b.realized_mean() == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(b.realized_variance() == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(b.n_min() == 15);
  CHECK(b.n_max() == 35);

  const DriveDistribution f = fock_drive(7);
  CHECK(f.realized_mean() == 7.0);
  CHECK(f.realized_variance() == 0.0);
  CHECK(f.fano() == 0.0);

  CVector c(2);
  c << 1.0, cplx(0.0, 1.0);
  const DriveDistribution u = DriveDistribution::custom(3, c / std::sqrt(2.0));
  CHECK(u.realized_mean() == doctest::Approx(3.5));
  CHECK(u.kind() == DriveKind::Custom);
  CHECK_THROWS_AS(DriveDistribution::custom(0, c), Error);
}

TEST_CASE("drive validation codes") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IOError;
  };
  CHECK(code([] { poisson_drive(0.0); }) == ErrorCode::InvalidMean);
  CHECK(code([] { binomial_drive(25.0, 5.1); }) == ErrorCode::UnsupportedParameters);
  CHECK(code([] { binomial_drive(4.0, 4.0); }) == ErrorCode::UnsupportedParameters);
  CHECK(code([] { fock_drive(-1); }) != ErrorCode::IOError);
}

TEST_CASE("binomial literal mode reports its realized moments") {
  const DriveDistribution b = binomial_drive(25.0, 5.0, BinomialMode::Literal);
  CHECK(b.binomial_width() == 10);
  CHECK(b.realized_mean() == doctest::Approx(20.0).epsilon(1e-12));
  CHECK(b.realized_variance() == doctest::Approx(2.5).epsilon(1e-12));
  CHECK_FALSE(b.moments_consistent());
  CHECK(b.mean() == 25.0);
}

TEST_CASE("channel agrees with brute-force diagonalization") {
  CHECK(brute_force_gap(poisson_drive(9.0), 1.0, kPi / 2) < 1e-10);
  CHECK(brute_force_gap(poisson_drive(16.0), 2.5, 1.3) < 1e-10);
  CHECK(brute_force_gap(binomial_drive(25.0, 5.0), 1.0, kPi) < 1e-10);
  CHECK(brute_force_gap(binomial_drive(25.0, 5.0, BinomialMode::Literal), 0.7, 0.4) < 1e-10);
  CHECK(brute_force_gap(fock_drive(6), 1.0, kPi / 4) < 1e-10);
  std::mt19937_64 rng(3);
  CVector c = testsupport::random_vector(rng, 6);
  CHECK(brute_force_gap(DriveDistribution::custom(2, c), 1.0, 2.0) < 1e-10);
}

TEST_CASE("Fock drive at a quarter rotation") {
  JCConfig cfg;
  cfg.tau = kPi / 4;
  const QubitChannel ch = build_channel_exact(fock_drive(10), cfg);
  CHECK(std::abs(ch.image(0, 0)(0, 0).real() - 0.5) < 1e-12);
  CHECK(std::abs(ch.image(0, 0)(1, 1).real() - 0.5) < 1e-12);
  CHECK(std::abs(ch.image(0, 0)(0, 1)) < 1e-12);
  const double s = std::sin(std::sqrt(11.0 / 10.0) * kPi / 4);
  CHECK(ch.image(1, 1)(0, 0).real() == doctest::Approx(s * s).epsilon(1e-12));
  // only |N,0><N,1| survives the partial trace: E01 = cos(w_N t) cos(w_{N+1} t) |0><1|
  const double c = std::cos(std::sqrt(11.0 / 10.0) * kPi / 4);
  CHECK(std::abs(ch.image(0, 1)(0, 1) - cplx(std::cos(kPi / 4) * c)) < 1e-12);
  CHECK(std::abs(ch.image(0, 1)(1, 0)) < 1e-12);
}

TEST_CASE("channel is CPTP and depends only on g t") {
  JCConfig cfg;
  cfg.tau = 1.1;
  const DriveDistribution d = poisson_drive(50.0);
  const QubitChannel a = build_channel_exact(d, cfg);
  CHECK(a.tp_residual() < 1e-10);
  CHECK(a.cp_min_eigenvalue() > -1e-10);
  cfg.coupling = 3.0;
  CHECK(channel_diff(a, build_channel_exact(d, cfg)) < 1e-12);
  const double t = interaction_time(cfg, 50.0);
  CHECK(t == doctest::Approx(1.1 / (3.0 * std::sqrt(50.0))));
  CHECK(channel_diff(a, jc_channel_at_time(d, 3.0, t)) < 1e-12);
}

TEST_CASE("f matrices reassemble the channel") {
  const DriveDistribution d = binomial_drive(25.0, 5.0);
  JCConfig cfg;
  cfg.tau = 0.9;
  const QubitChannel ch = build_channel_exact(d, cfg);
  Mat2 e[4] = {Mat2::Zero(), Mat2::Zero(), Mat2::Zero(), Mat2::Zero()};
  for (int n = d.n_min(); n <= d.n_max(); ++n) {
    const FMatrixSet f = f_matrices(n, cfg.tau, d.mean(), d);
    const double w = std::norm(d.amplitude(n));
    e[0] += w * f.f00;
    e[1] += w * f.f01;
    e[2] += w * f.f10;
    e[3] += w * f.f11;
  }
  CHECK((e[0] - ch.image(0, 0)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((e[1] - ch.image(0, 1)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((e[2] - ch.image(1, 0)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((e[3] - ch.image(1, 1)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("second-order expansion converges to the exact channel") {
  JCConfig cfg;
  cfg.tau = kPi / 2;
  double previous = 1.0;
  for (double nbar : {25.0, 100.0, 400.0}) {
    const QubitChannel exact = build_channel_exact(poisson_drive(nbar), cfg);
    const QubitChannel approx = build_channel_taylor2(nbar, nbar, DriveKind::Poisson, cfg);
    const double gap = channel_diff(exact, approx);
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(previous <= 1e-3);

  const QubitChannel exact = build_channel_exact(binomial_drive(400.0, 80.0), cfg);
  const QubitChannel approx = build_channel_taylor2(400.0, 80.0, DriveKind::Binomial, cfg);
  CHECK(channel_diff(exact, approx) <= 1e-3);
  CHECK_THROWS_AS(build_channel_taylor2(4.0, 25.0, DriveKind::Poisson, cfg), Error);
}

TEST_CASE("asymptotic bound") {
  const double tau = 1.2;
  const double s2 = std::sin(tau) * std::sin(tau);
  CHECK(asymptotic_eigenerror_lower_bound(DriveKind::Poisson, 100.0, 100.0, tau) ==
        doctest::Approx((tau * tau + s2) / 600.0));
  // binomial at unit Fano factor coincides with Poisson
  CHECK(asymptotic_eigenerror_lower_bound(DriveKind::Binomial, 100.0, 100.0, tau) ==
        doctest::Approx(asymptotic_eigenerror_lower_bound(DriveKind::Poisson, 100.0, 100.0, tau)));
  CHECK(std::isinf(asymptotic_eigenerror_lower_bound(DriveKind::Binomial, 100.0, 0.0, tau)));
  // binomial optimum over the variance: var^2 = nbar^2 sin^2 / tau^2
  const double nbar = 400.0;
  const double best = nbar * std::sin(tau) / tau;
  const double at_best = asymptotic_eigenerror_lower_bound(DriveKind::Binomial, nbar, best, tau);
  CHECK(at_best < asymptotic_eigenerror_lower_bound(DriveKind::Binomial, nbar, 0.9 * best, tau));
  CHECK(at_best < asymptotic_eigenerror_lower_bound(DriveKind::Binomial, nbar, 1.1 * best, tau));

  JCConfig cfg;
  cfg.tau = kPi / 2;
  const double lower = channel_eigenerror_bounds(build_channel_exact(poisson_drive(1600.0), cfg)).lower;
  const double asym = asymptotic_eigenerror_lower_bound(DriveKind::Poisson, 1600.0, 1600.0, cfg.tau);
  CHECK(std::abs(lower / asym - 1.0) < 0.01);
}

TEST_CASE("bipartite evolution reduces to the channel") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    JCConfig cfg;
    cfg.tau = u(rng);
    cfg.coupling = u(rng);
    const DriveDistribution drive = trial % 3 == 0   ? poisson_drive(10.0 + trial)
                                    : trial % 3 == 1 ? binomial_drive(30.0, 4.0 + trial % 2)
                                                     : fock_drive(5 + trial);
    const PureState psi(testsupport::random_vector(rng, 2));
    const BipartiteState out = evolve_bipartite(drive, psi, cfg);
    CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const DensityMatrix reduced = out.reduced_qubit();
    const DensityMatrix via_channel = apply(build_channel_exact(drive, cfg), DensityMatrix::from_pure(psi));
    CHECK((reduced.matrix() - via_channel.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
}
