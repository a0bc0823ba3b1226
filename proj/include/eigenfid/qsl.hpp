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

// Quantum speed limits (Mandelstam-Tamm, Margolus-Levitin) for the JC
// interaction and the eigenerror bound they imply. Units: hbar = 1, so
// energies are in rad/s.

#pragma once

#include "eigenfid/jcdrive.hpp"

namespace eigenfid {

struct HamiltonianMoments {
  double mean = 0.0;   // <H>
  double stdev = 0.0;  // Delta H >= 0
};

/// Bures angle between initial and target pure states, in [0, pi/2].
class RotationTarget {
 public:
  explicit RotationTarget(double theta);
  double theta() const noexcept { return theta_; }

 private:
  double theta_;
};

/// hbar theta / Delta H; +infinity when Delta H = 0.
double mt_time(const RotationTarget& target, const HamiltonianMoments& m);

/// hbar theta / <H>; <H> must be measured above the ground energy and be
/// positive (NonpositiveMeanEnergy otherwise).
double ml_time(const RotationTarget& target, const HamiltonianMoments& m);

enum class Frame {
  Rotating,  // interaction term only
  Lab,       // adds hbar omega (b^dagger b + l^dagger l)
};

struct JCMoments {
  HamiltonianMoments moments;  // exact, on the product state
  double ground_energy = 0.0;  // lowest eigenvalue of H on the truncated space
  double asymptote = 0.0;      // hbar g sqrt(nbar)

  /// Mean shifted to be measured from the ground energy (for ml_time).
  HamiltonianMoments above_ground() const {
    return {moments.mean - ground_energy, moments.stdev};
  }
};

/// Exact <H> and Delta H of |drive> (x) |qubit> on the Fock window
/// [n_min - 1, n_max + 1], which holds H|psi> without truncation error.
JCMoments jc_moments(const DriveDistribution& drive, const PureState& qubit, const JCConfig& cfg,
                     Frame frame = Frame::Rotating);

/// Equal-weight qubit superposition whose relative phase maximizes |<H>| for
/// this drive; then <H> = hbar g |<b>|.
PureState phase_aligned_qubit(const DriveDistribution& drive);

/// Angle between the initial and final bipartite states when the drive
/// states overlap by `drive_overlap`: arccos(drive_overlap cos theta).
double bipartite_angle(double theta_logical, double drive_overlap);

/// (theta^2 + sin^2 theta) / (6 nbar): the coherent-drive eigenerror floor
/// once the speed limit forces tau >= theta.
double qsl_eigenerror_bound(double theta, double mean);

/// theta^2 / (3 nbar).
double qsl_eigenerror_small_angle(double theta, double mean);

/// Mean photon number at which qsl_eigenerror_bound equals `eigenerror`.
double photons_for_eigenerror(double theta, double eigenerror);

}  // namespace eigenfid
