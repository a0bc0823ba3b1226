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

// Qubit CPTP channels stored as basis images E_ij = E[|i><j|], with the
// channel-level purity / eigenfidelity / gate-fidelity machinery.

#pragma once

#include <cstddef>

#include "eigenfid/densmat.hpp"
#include "eigenfid/haar.hpp"

namespace eigenfid {

struct ChannelTolerance {
  double trace = 1e-10;      // tr E00 = tr E11 = 1, tr E01 = tr E10 = 0
  double hermitian = 1e-10;  // E10 = E01^dagger, E00 and E11 Hermitian
  double cp = 1e-8;          // Choi eigenvalues >= -cp
};

/// 2x2 unitary target gate.
class TargetGate {
 public:
  explicit TargetGate(const Mat2& u);

  static TargetGate identity();
  static TargetGate pauli_x();
  static TargetGate pauli_y();
  static TargetGate pauli_z();
  static TargetGate hadamard();

  const Mat2& matrix() const noexcept { return u_; }

 private:
  Mat2 u_;
};

/// 4x4 Choi matrix C = sum_ij |i><j| (x) G(|i><j|), row index 2*i + a.
/// No 1/d normalization: tr[(rho^T (x) rho) C] = <alpha|G(rho)|alpha> for
/// rho = |alpha><alpha|.
struct ChoiMatrix {
  Mat4 entries;
};

class QubitChannel {
 public:
  /// Validates trace preservation, Hermiticity preservation and complete
  /// positivity. Throws InvalidChannel or CPViolation.
  QubitChannel(const Mat2& e00, const Mat2& e01, const Mat2& e10, const Mat2& e11,
               const ChannelTolerance& tol = {});

  static QubitChannel identity();
  /// Every input goes to I/2.
  static QubitChannel depolarizing();
  /// rho -> U rho U^dagger.
  static QubitChannel unitary(const TargetGate& u);

  /// E[|i><j|].
  const Mat2& image(int i, int j) const { return e_[2 * i + j]; }

  /// sum_ij rho_ij E_ij without any validation of the output.
  Mat2 apply_raw(const Mat2& rho) const;

  /// Matrix T with vec(E(rho)) = T vec(rho), vec index 2*row + col.
  Mat4 transfer() const;
  /// Choi matrix of the channel itself.
  Mat4 choi() const;

  double tp_residual() const;
  double cp_min_eigenvalue() const;

 private:
  Mat2 e_[4];
};

/// Output of the channel on rho; throws CPViolation for an output eigenvalue
/// below -1e-8.
DensityMatrix apply(const QubitChannel& channel, const DensityMatrix& rho);

/// outer after inner.
QubitChannel compose(const QubitChannel& outer, const QubitChannel& inner);

/// C-fold composition of the same channel (C >= 1).
QubitChannel power(const QubitChannel& channel, int times);

/// Haar average of the output purity, closed form
/// (1/3) tr(E00^2 + E00 E11 + E11^2 + E01 E10).
double average_purity(const QubitChannel& channel);

/// [gamma_bar, (1 + gamma_bar)/2], which brackets the channel eigenfidelity.
Interval channel_eigenfidelity_bounds(const QubitChannel& channel);

/// Eigenerror bracket [S_L/2, S_L] with S_L = 1 - gamma_bar.
Interval channel_eigenerror_bounds(const QubitChannel& channel);

/// Haar-averaged output eigenfidelity r_bar computed deterministically with
/// a product rule on the Bloch sphere: 64-point Gauss-Legendre in cos(theta)
/// times a 128-point uniform grid in phi. The rule integrates the purity exactly, so the
/// result always respects channel_eigenfidelity_bounds.
double channel_eigenfidelity(const QubitChannel& channel);

/// Monte Carlo estimate of r_bar.
McEstimate channel_eigenfidelity_mc(const QubitChannel& channel, SeededSampler& sampler,
                                    std::size_t n_samples);

/// Haar average of rho^T (x) rho for qubits.
Eigen::Matrix4d a_matrix();

/// Choi matrix of rho -> U^dagger E[rho] U.
ChoiMatrix choi_matrix(const QubitChannel& channel, const TargetGate& gate);

/// tr(A S_U): Haar-averaged fidelity between E[rho] and U rho U^dagger.
double average_gate_fidelity(const QubitChannel& channel, const TargetGate& gate);

/// Largest eigenvalue of a 2x2 Hermitian unit-trace matrix.
double qubit_eigenfidelity(const Mat2& rho) noexcept;

}  // namespace eigenfid
