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

#include "eigenfid/densmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "eigenfid/error.hpp"

namespace eigenfid {

namespace {

double max_antihermitian(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::string fmt_value(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

PureState::PureState(CVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 1) {
    throw Error(ErrorCode::InvalidDimension, "pure state needs dimension >= 1");
  }
  const double n = amps_.norm();
  if (std::abs(n - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument,
                "pure state is not normalized (norm " + fmt_value(n) + ")");
  }
}

PureState PureState::basis(int dim, int index) {
  if (dim < 1 || index < 0 || index >= dim) {
    throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  }
  CVector v = CVector::Zero(dim);
  v[index] = 1.0;
  return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(const CMatrix& entries, const StateTolerance& tol) {
  if (entries.rows() < 1 || entries.rows() != entries.cols()) {
    throw Error(ErrorCode::InvalidDimension, "density matrix must be square and non-empty");
  }
  const double asym = max_antihermitian(entries);
  if (asym > tol.hermitian) {
    throw Error(ErrorCode::NonHermitianInput,
                "matrix is not Hermitian (max |M - M^dagger| = " + fmt_value(asym) + ")");
  }
  m_ = 0.5 * (entries + entries.adjoint());
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw Error(ErrorCode::NotDensityMatrix, "trace is " + fmt_value(tr) + ", expected 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
  const double lowest = es.eigenvalues()(0);
  if (lowest < -tol.psd) {
    throw Error(ErrorCode::NotDensityMatrix,
                "matrix is not positive semidefinite (eigenvalue " + fmt_value(lowest) + ")");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const CVector& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidDimension, "dimension must be >= 1");
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> populations) {
  const auto d = static_cast<Eigen::Index>(populations.size());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = populations[static_cast<size_t>(i)];
  return DensityMatrix(m);
}

EnergyBasis::EnergyBasis(RVector levels, CMatrix basis)
    : levels_(std::move(levels)), basis_(std::move(basis)) {
  const auto d = levels_.size();
  if (d < 1 || basis_.rows() != d || basis_.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "energy basis shape does not match its levels");
  }
  for (Eigen::Index i = 1; i < d; ++i) {
    if (!(levels_(i) > levels_(i - 1))) {
      throw Error(ErrorCode::InvalidArgument, "energy levels must be strictly increasing");
    }
  }
  const double dev = (basis_.adjoint() * basis_ - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    throw Error(ErrorCode::InvalidArgument, "energy basis is not orthonormal");
  }
}

EnergyBasis EnergyBasis::canonical(const RVector& levels) {
  const auto d = levels.size();
  return EnergyBasis(levels, CMatrix::Identity(d, d));
}

Spectrum eigendecompose_hermitian(const CMatrix& m, double hermitian_tol) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw Error(ErrorCode::InvalidDimension, "matrix must be square and non-empty");
  }
  const double asym = max_antihermitian(m);
  if (asym > hermitian_tol) {
    throw Error(ErrorCode::NonHermitianInput,
                "matrix is not Hermitian (max |M - M^dagger| = " + fmt_value(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (m + m.adjoint()));
  // Solver order is ascending; reverse both values and columns.
  Spectrum s;
  s.values = es.eigenvalues().reverse();
  s.vectors = es.eigenvectors().rowwise().reverse();
  return s;
}

Spectrum eigendecompose(const DensityMatrix& rho) {
  return eigendecompose_hermitian(rho.matrix());
}

Eigenfidelity eigenfidelity(const DensityMatrix& rho) {
  Spectrum s = eigendecompose(rho);
  CVector top = s.vectors.col(0);
  top /= top.norm();
  return {s.values(0), PureState(std::move(top))};
}

double fidelity_to_pure(const DensityMatrix& rho, const PureState& phi) {
  if (rho.dim() != phi.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state dimensions differ");
  }
  const CVector& a = phi.amplitudes();
  return (a.adjoint() * rho.matrix() * a)(0).real();
}

double schatten_norm(const DensityMatrix& rho, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::InvalidOrder, "Schatten order must be a finite p > 0");
  }
  RVector f = eigendecompose(rho).values.cwiseMax(0.0);
  const double top = f(0);
  if (top <= 0.0) return 0.0;
  // Factor out the largest eigenvalue so large p does not underflow.
  double acc = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) acc += std::pow(f(i) / top, p);
  return top * std::pow(acc, 1.0 / p);
}

double purity(const DensityMatrix& rho) {
  return rho.matrix().cwiseAbs2().sum();
}

double linear_entropy(const DensityMatrix& rho) { return 1.0 - purity(rho); }

Interval eigenfidelity_bounds(const DensityMatrix& rho) {
  const double g = purity(rho);
  return {g, 0.5 * (1.0 + g)};
}

DensityMatrix passive_state(const DensityMatrix& rho, const EnergyBasis& basis) {
  if (rho.dim() != basis.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and energy basis dimensions differ");
  }
  const RVector s = eigendecompose(rho).values.cwiseMax(0.0);
  const CMatrix& e = basis.basis();
  CMatrix out = CMatrix::Zero(rho.dim(), rho.dim());
  for (int i = 0; i < rho.dim(); ++i) out += s(i) * e.col(i) * e.col(i).adjoint();
  // Clamping can shift the trace by <= d * 1e-10.
  out /= out.trace().real();
  return DensityMatrix(out);
}

double effective_temperature(const DensityMatrix& rho, const EnergyBasis& basis) {
  if (rho.dim() != 2) {
    throw Error(ErrorCode::InvalidDimension, "effective temperature is defined for qubits only");
  }
  if (basis.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "energy basis must be two-dimensional");
  }
  const double gap = basis.levels()(1) - basis.levels()(0);
  const double r = eigenfidelity(rho).value;
  constexpr double eps = 1e-14;
  if (r >= 1.0 - eps) return 0.0;
  if (r <= 0.5 + eps) return std::numeric_limits<double>::infinity();
  return gap / std::log(r / (1.0 - r));
}

}  // namespace eigenfid
