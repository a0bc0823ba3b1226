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

// Density matrices, pure states and the state-level eigenfidelity
// diagnostics: spectral radius, Schatten norms, purity bounds and the
// passive-state / effective-temperature picture.

#pragma once

#include <span>

#include "eigenfid/types.hpp"

namespace eigenfid {

/// Acceptance slack used when validating a density matrix.
struct StateTolerance {
  double hermitian = 1e-12;  // elementwise |M - M^dagger|
  double trace = 1e-12;      // |tr M - 1|
  double psd = 1e-10;        // smallest eigenvalue >= -psd
};

/// Unit-norm state vector.
class PureState {
 public:
  explicit PureState(CVector amplitudes);

  static PureState basis(int dim, int index);

  int dim() const noexcept { return static_cast<int>(amps_.size()); }
  const CVector& amplitudes() const noexcept { return amps_; }
  cplx operator[](int i) const { return amps_[i]; }

 private:
  CVector amps_;
};

/// Hermitian, unit-trace, positive semidefinite matrix. The stored matrix is
/// the Hermitian part (M + M^dagger)/2 of the input.
class DensityMatrix {
 public:
  explicit DensityMatrix(const CMatrix& entries, const StateTolerance& tol = {});

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix diagonal(std::span<const double> populations);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const noexcept { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }

 private:
  CMatrix m_;
};

/// Eigenvalues in descending order with matching orthonormal eigenvector
/// columns.
struct Spectrum {
  RVector values;
  CMatrix vectors;
};

/// Energy levels e_1 < ... < e_d and the corresponding eigenbasis columns.
class EnergyBasis {
 public:
  EnergyBasis(RVector levels, CMatrix basis);

  /// Computational basis with the given (strictly increasing) energies.
  static EnergyBasis canonical(const RVector& levels);

  int dim() const noexcept { return static_cast<int>(levels_.size()); }
  const RVector& levels() const noexcept { return levels_; }
  const CMatrix& basis() const noexcept { return basis_; }

 private:
  RVector levels_;
  CMatrix basis_;
};

/// Spectral decomposition of a Hermitian matrix. Throws NonHermitianInput
/// when |M - M^dagger| exceeds `hermitian_tol` anywhere.
Spectrum eigendecompose_hermitian(const CMatrix& m, double hermitian_tol = 1e-12);
Spectrum eigendecompose(const DensityMatrix& rho);

struct Eigenfidelity {
  double value;       // spectral radius r(rho)
  PureState closest;  // top eigenvector
};

/// Largest eigenvalue and its eigenvector, i.e. the best fidelity any pure
/// target can reach. For a degenerate top eigenvalue the first eigenvector
/// returned by the solver is reported.
Eigenfidelity eigenfidelity(const DensityMatrix& rho);

inline double eigenerror(const DensityMatrix& rho) {
  return 1.0 - eigenfidelity(rho).value;
}

/// <phi|rho|phi>.
double fidelity_to_pure(const DensityMatrix& rho, const PureState& phi);

/// (sum_i f_i^p)^(1/p) over the eigenvalues f_i; p must be > 0.
double schatten_norm(const DensityMatrix& rho, double p);

/// tr(rho^2), computed without diagonalization.
double purity(const DensityMatrix& rho);
double linear_entropy(const DensityMatrix& rho);

/// [gamma, (1 + gamma)/2], which brackets the eigenfidelity.
Interval eigenfidelity_bounds(const DensityMatrix& rho);

/// Same spectrum, populations sorted descending onto ascending energies.
DensityMatrix passive_state(const DensityMatrix& rho, const EnergyBasis& basis);

/// Qubit only. Temperature (k_B = 1) of the thermal state sharing rho's
/// passive state: 0 for pure states, +infinity for the maximally mixed one.
double effective_temperature(const DensityMatrix& rho, const EnergyBasis& basis);

}  // namespace eigenfid
