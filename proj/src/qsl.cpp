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

#include "eigenfid/qsl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eigenfid/error.hpp"

namespace eigenfid {

RotationTarget::RotationTarget(double theta) : theta_(theta) {
  if (!(theta >= 0.0 && theta <= kPi / 2)) {
    throw Error(ErrorCode::InvalidArgument, "rotation angle must lie in [0, pi/2]");
  }
}

double mt_time(const RotationTarget& target, const HamiltonianMoments& m) {
  if (m.stdev < 0.0) throw Error(ErrorCode::InvalidArgument, "energy spread must be >= 0");
  if (target.theta() == 0.0) return 0.0;
  if (m.stdev == 0.0) return std::numeric_limits<double>::infinity();
  return target.theta() / m.stdev;
}

double ml_time(const RotationTarget& target, const HamiltonianMoments& m) {
  if (!(m.mean > 0.0)) {
    throw Error(ErrorCode::NonpositiveMeanEnergy,
                "Margolus-Levitin time needs a positive mean energy above the ground state");
  }
  return target.theta() / m.mean;
}

JCMoments jc_moments(const DriveDistribution& drive, const PureState& qubit, const JCConfig& cfg,
                     Frame frame) {
  if (qubit.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "qubit state must be 2-dimensional");
  const double g = cfg.coupling;
  if (!(g > 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling g must be > 0");

  const int lo = std::max(0, drive.n_min() - 1);
  const int hi = drive.n_max() + 1;
  const int rows = hi - lo + 1;
  CMatrix psi = CMatrix::Zero(rows, 2);
  for (int n = drive.n_min(); n <= drive.n_max(); ++n) {
    psi(n - lo, 0) = drive.amplitude(n) * qubit[0];
    psi(n - lo, 1) = drive.amplitude(n) * qubit[1];
  }

  // H = g i (b l^dagger - b^dagger l):  |n,0> -> i g sqrt(n) |n-1,1>,
  //                                     |n,1> -> -i g sqrt(n+1) |n+1,0>.
  const cplx ig(0.0, g);
  CMatrix hpsi = CMatrix::Zero(rows, 2);
  for (int n = lo; n <= hi; ++n) {
    const int r = n - lo;
    if (n >= 1 && r >= 1) hpsi(r - 1, 1) += ig * std::sqrt(static_cast<double>(n)) * psi(r, 0);
    if (r + 1 < rows) hpsi(r + 1, 0) -= ig * std::sqrt(n + 1.0) * psi(r, 1);
    if (frame == Frame::Lab) {
      hpsi(r, 0) += cfg.carrier * n * psi(r, 0);
      hpsi(r, 1) += cfg.carrier * (n + 1.0) * psi(r, 1);
    }
  }

  JCMoments out;
  const double mean = psi.cwiseProduct(hpsi.conjugate()).sum().real();
  const double second = hpsi.squaredNorm();
  out.moments = {mean, std::sqrt(std::max(0.0, second - mean * mean))};
  // Blocks {|n,0>, |n-1,1>} have energies carrier*n +- g sqrt(n).
  double ground = 0.0;
  for (int n = 1; n <= hi; ++n) {
    const double shift = frame == Frame::Lab ? cfg.carrier * n : 0.0;
    ground = std::min(ground, shift - g * std::sqrt(static_cast<double>(n)));
  }
  out.ground_energy = ground;
  out.asymptote = g * std::sqrt(std::max(0.0, drive.mean()));
  return out;
}

PureState phase_aligned_qubit(const DriveDistribution& drive) {
  // <b> = sum_n sqrt(n+1) conj(b_n) b_{n+1}.
  cplx b_mean = 0.0;
  for (int n = drive.n_min(); n < drive.n_max(); ++n) {
    b_mean += std::sqrt(n + 1.0) * std::conj(drive.amplitude(n)) * drive.amplitude(n + 1);
  }
  const double phase = std::arg(b_mean) + kPi / 2;
  CVector q(2);
  q << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), phase);
  return PureState(q);
}

double bipartite_angle(double theta_logical, double drive_overlap) {
  if (!(theta_logical >= 0.0 && theta_logical <= kPi / 2)) {
    throw Error(ErrorCode::InvalidArgument, "logical angle must lie in [0, pi/2]");
  }
  if (!(drive_overlap >= 0.0 && drive_overlap <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "drive overlap must lie in [0, 1]");
  }
  return std::acos(drive_overlap * std::cos(theta_logical));
}

double qsl_eigenerror_bound(double theta, double mean) {
  return asymptotic_eigenerror_lower_bound(DriveKind::Poisson, mean, mean, theta);
}

double qsl_eigenerror_small_angle(double theta, double mean) {
  if (!(mean > 0.0)) throw Error(ErrorCode::InvalidMean, "mean photon number must be > 0");
  return theta * theta / (3.0 * mean);
}

double photons_for_eigenerror(double theta, double eigenerror) {
  if (!(eigenerror > 0.0)) throw Error(ErrorCode::InvalidArgument, "target eigenerror must be > 0");
  const double s = std::sin(theta);
  return (theta * theta + s * s) / (6.0 * eigenerror);
}

}  // namespace eigenfid
