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

// Jaynes-Cummings drive/qubit dynamics in the resonant rotating frame,
//
//   H = hbar g i (b l^dagger - b^dagger l),
//
// where b lowers the drive mode and l = |0><1| lowers the qubit (|0> is the
// ground state). H couples |n,0> and |n-1,1> only, rotating them at
// omega_n = g sqrt(n):
//
//   |n,0>   -> c_n |n,0> + s_n |n-1,1>,    c_n = cos(omega_n t)
//   |n-1,1> -> c_n |n-1,1> - s_n |n,0>,    s_n = sin(omega_n t)
//
// Tracing out the drive gives a qubit channel whose images are sums of
// amplitude products over the drive's Fock distribution.

#pragma once

#include <optional>
#include <string_view>

#include "eigenfid/channel.hpp"
#include "eigenfid/densmat.hpp"

namespace eigenfid {

enum class DriveKind { Poisson, Binomial, Fock, Custom };

std::string_view to_string(DriveKind kind) noexcept;

/// How the binomial drive maps (mean, variance) onto binomial(N, 1/2).
enum class BinomialMode {
  /// N = 4 var, support centred on the mean: realized moments are exact.
  MomentMatched,
  /// N = 2 var and k_n = n - (mean - N). The realized mean is mean - N/2
  /// and the realized variance N/4.
  Literal,
};

/// Fock-basis amplitudes b_n of the drive's initial state on a finite window
/// [n_min, n_max], normalized to sum |b_n|^2 = 1.
class DriveDistribution {
 public:
  /// Arbitrary amplitudes (phases allowed) starting at photon number n_min.
  /// The squared norm must be 1 within 1e-9; the stored copy is renormalized.
  static DriveDistribution custom(int n_min, const CVector& coefficients);

  DriveKind kind() const noexcept { return kind_; }
  /// Requested mean photon number (normalizes the reduced time).
  double mean() const noexcept { return mean_; }
  /// Requested photon-number variance.
  double variance() const noexcept { return variance_; }
  double fano() const noexcept { return mean_ > 0.0 ? variance_ / mean_ : 0.0; }

  int n_min() const noexcept { return n_min_; }
  int n_max() const noexcept { return n_min_ + static_cast<int>(coeffs_.size()) - 1; }
  const CVector& coefficients() const noexcept { return coeffs_; }
  /// b_n, zero outside the window.
  cplx amplitude(long n) const noexcept;

  double realized_mean() const;
  double realized_variance() const;

  /// False when the realized moments differ from the requested ones by more
  /// than 1e-9 (relative), as for BinomialMode::Literal.
  bool moments_consistent() const noexcept { return moments_consistent_; }
  /// Binomial width N, for binomial drives.
  std::optional<int> binomial_width() const noexcept { return width_; }

 private:
  friend DriveDistribution poisson_drive(double, double);
  friend DriveDistribution binomial_drive(double, double, BinomialMode);
  friend DriveDistribution fock_drive(int);

  DriveDistribution(DriveKind kind, double mean, double variance, int n_min, CVector coeffs,
                    std::optional<int> width);

  DriveKind kind_;
  double mean_;
  double variance_;
  int n_min_;
  CVector coeffs_;
  std::optional<int> width_;
  bool moments_consistent_ = true;
};

/// Coherent drive: Poisson photon statistics, truncated by an outward scan
/// from the mean until the discarded mass is below tail_tol, renormalized.
DriveDistribution poisson_drive(double mean, double tail_tol = 1e-12);

/// Binomial drive with the given mean and variance (0 < variance <= mean).
/// Throws UnsupportedParameters when N is not an integer or the support
/// would reach below n = 0.
DriveDistribution binomial_drive(double mean, double variance,
                                 BinomialMode mode = BinomialMode::MomentMatched);

/// Number state |N>.
DriveDistribution fock_drive(int n);

struct JCConfig {
  double coupling = 1.0;  // g, rad/s
  double carrier = 1.0;   // omega, rad/s; energy bookkeeping only
  double tau = 0.0;       // reduced time g sqrt(nbar) t, radians
};

/// Physical interaction time t = tau / (g sqrt(nbar)).
double interaction_time(const JCConfig& cfg, double mean);

/// Per-level matrices with E_ij = sum_n |b_n|^2 F_ij(n). The off-diagonal
/// entries carry the amplitude ratios b_{n+1}/b_n and b_{n+2}/b_n (taken as
/// 0 where b_n = 0, where the weight vanishes anyway).
struct FMatrixSet {
  Mat2 f00, f01, f10, f11;
};

FMatrixSet f_matrices(int n, double tau, double mean, const DriveDistribution& drive);

/// Exact channel after interaction time t (g t enters only as a product).
/// Throws TruncationError when the trace-preservation residual exceeds 1e-8.
QubitChannel jc_channel_at_time(const DriveDistribution& drive, double coupling, double time);

/// Exact channel at reduced time cfg.tau, normalized by drive.mean().
QubitChannel build_channel_exact(const DriveDistribution& drive, const JCConfig& cfg);

/// Second-order expansion E_ij ~ F_ij(nbar) + F_ij''(nbar) var / 2 with F
/// extended to continuous n: trigonometric factors are differentiated
/// analytically, amplitude ratios by central differences with unit step.
/// `kind` selects the ratio model (Poisson or moment-matched binomial).
/// The truncated expansion need not be completely positive; the channel is
/// built without a CP check and cp_min_eigenvalue() reports any deficit.
/// Throws ApproximationDomain when sqrt(var) > nbar.
QubitChannel build_channel_taylor2(double mean, double variance, DriveKind kind,
                                   const JCConfig& cfg);

/// Large-nbar channel eigenerror lower bound at fixed Fano factor:
///   Poisson:  (tau^2 + sin^2 tau) / (6 nbar)
///   Binomial: tau^2 var / (6 nbar^2) + sin^2 tau / (6 var)
/// The binomial form diverges as var -> 0 and returns +infinity at var = 0
/// (Fock drives are treated as that limit).
double asymptotic_eigenerror_lower_bound(DriveKind kind, double mean, double variance,
                                         double tau);

/// Joint drive (x) qubit pure state, amplitude(n, q) for n in
/// [n_lo, n_lo + rows).
struct BipartiteState {
  int n_lo = 0;
  CMatrix amplitudes;  // rows: photon number, cols: qubit level

  double norm() const { return amplitudes.norm(); }
  cplx amplitude(int n, int q) const;
  /// Partial trace over the drive.
  DensityMatrix reduced_qubit() const;
};

/// Evolves |drive> (x) |qubit> by rotating each invariant pair
/// (|n,0>, |n-1,1>) independently.
BipartiteState evolve_bipartite(const DriveDistribution& drive, const PureState& qubit,
                                const JCConfig& cfg);

}  // namespace eigenfid
