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

#include "eigenfid/jcdrive.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>

#include "eigenfid/error.hpp"

namespace eigenfid {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

bool near_integer(double x, double tol = 1e-9) { return std::abs(x - std::round(x)) <= tol; }

/// Binomial(N, 1/2) amplitudes sqrt(C(N,k) / 2^N), k = 0..N.
CVector binomial_amplitudes(int width) {
  CVector b(width + 1);
  for (int k = 0; k <= width; ++k) {
    const double log_p = std::lgamma(width + 1.0) - std::lgamma(k + 1.0) -
                         std::lgamma(width - k + 1.0) - width * std::log(2.0);
    b[k] = std::exp(0.5 * log_p);
  }
  return b / b.norm();
}

/// f, f' and f'' of a scalar function of continuous photon number n.
struct Jet {
  double v = 0.0, d1 = 0.0, d2 = 0.0;

  friend Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
  }
  friend Jet operator-(const Jet& a) { return {-a.v, -a.d1, -a.d2}; }
  double second_order(double variance) const { return v + 0.5 * d2 * variance; }
};

/// cos / sin of tau sqrt((n + shift)/nbar) as jets in n at n = nbar.
struct TrigJets {
  Jet c, s;
};

TrigJets trig_jets(double nbar, double shift, double tau) {
  const double x = nbar + shift;
  const double k = tau / std::sqrt(nbar);  // phase = k sqrt(x)
  const double phase = k * std::sqrt(x);
  const double p1 = k / (2.0 * std::sqrt(x));
  const double p2 = -k / (4.0 * x * std::sqrt(x));
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  return {{c, -s * p1, -c * p1 * p1 - s * p2}, {s, c * p1, -s * p1 * p1 + c * p2}};
}

Jet central_difference(const std::function<double(double)>& f, double n) {
  const double lo = f(n - 1.0);
  const double mid = f(n);
  const double hi = f(n + 1.0);
  return {mid, 0.5 * (hi - lo), hi - 2.0 * mid + lo};
}

void check_tau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorCode::InvalidArgument, "reduced time must be finite and >= 0");
  }
}

}  // namespace

std::string_view to_string(DriveKind kind) noexcept {
  switch (kind) {
    case DriveKind::Poisson: return "poisson";
    case DriveKind::Binomial: return "binomial";
    case DriveKind::Fock: return "fock";
    case DriveKind::Custom: return "custom";
  }
  return "unknown";
}

DriveDistribution::DriveDistribution(DriveKind kind, double mean, double variance, int n_min,
                                     CVector coeffs, std::optional<int> width)
    : kind_(kind), mean_(mean), variance_(variance), n_min_(n_min),
      coeffs_(std::move(coeffs)), width_(width) {
  const double scale_m = std::max(1.0, std::abs(mean_));
  const double scale_v = std::max(1.0, std::abs(variance_));
  moments_consistent_ = std::abs(realized_mean() - mean_) <= 1e-9 * scale_m &&
                        std::abs(realized_variance() - variance_) <= 1e-9 * scale_v;
}

DriveDistribution DriveDistribution::custom(int n_min, const CVector& coefficients) {
  if (n_min < 0) throw Error(ErrorCode::InvalidArgument, "drive support must start at n >= 0");
  if (coefficients.size() == 0) throw Error(ErrorCode::InvalidArgument, "drive has no amplitudes");
  const double norm2 = coefficients.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidArgument,
                "drive amplitudes are not normalized (sum |b_n|^2 = " + num(norm2) + ")");
  }
  CVector b = coefficients / std::sqrt(norm2);
  // Moments of the normalized amplitudes define the custom drive's metadata.
  double m = 0.0, m2 = 0.0;
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    const double p = std::norm(b[i]);
    const double n = static_cast<double>(n_min + i);
    m += p * n;
    m2 += p * n * n;
  }
  return DriveDistribution(DriveKind::Custom, m, std::max(0.0, m2 - m * m), n_min, std::move(b),
                           std::nullopt);
}

cplx DriveDistribution::amplitude(long n) const noexcept {
  const long i = n - n_min_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0.0;
  return coeffs_[i];
}

double DriveDistribution::realized_mean() const {
  double m = 0.0;
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) m += std::norm(coeffs_[i]) * (n_min_ + i);
  return m;
}

double DriveDistribution::realized_variance() const {
  const double m = realized_mean();
  double v = 0.0;
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    const double d = static_cast<double>(n_min_ + i) - m;
    v += std::norm(coeffs_[i]) * d * d;
  }
  return v;
}

DriveDistribution poisson_drive(double mean, double tail_tol) {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw Error(ErrorCode::InvalidMean, "Poisson drive needs a mean > 0, got " + num(mean));
  }
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "tail tolerance must lie in (0, 1)");
  }
  auto pmf = [mean](long n) {
    return std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
  };
  // Grow the window from the mode towards whichever side has more mass.
  long lo = static_cast<long>(std::floor(mean));
  long hi = lo;
  std::deque<double> p{pmf(lo)};
  double mass = p.front();
  while (1.0 - mass >= tail_tol) {
    const double left = lo > 0 ? pmf(lo - 1) : -1.0;
    const double right = pmf(hi + 1);
    if (left >= right) {
      p.push_front(left);
      mass += left;
      --lo;
    } else {
      p.push_back(right);
      mass += right;
      ++hi;
    }
    if (left <= 0.0 && right <= std::numeric_limits<double>::min()) break;
  }
  CVector b(static_cast<Eigen::Index>(p.size()));
  for (size_t i = 0; i < p.size(); ++i) b[static_cast<Eigen::Index>(i)] = std::sqrt(p[i] / mass);
  return DriveDistribution(DriveKind::Poisson, mean, mean, static_cast<int>(lo), std::move(b),
                           std::nullopt);
}

DriveDistribution binomial_drive(double mean, double variance, BinomialMode mode) {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw Error(ErrorCode::InvalidMean, "binomial drive needs a mean > 0, got " + num(mean));
  }
  if (!(variance > 0.0) || variance > mean) {
    throw Error(ErrorCode::UnsupportedParameters,
                "binomial drive needs 0 < variance <= mean, got variance " + num(variance));
  }
  const double width_d = mode == BinomialMode::MomentMatched ? 4.0 * variance : 2.0 * variance;
  if (!near_integer(width_d)) {
    throw Error(ErrorCode::UnsupportedParameters,
                "binomial width N = " + num(width_d) + " is not an integer");
  }
  const int width = static_cast<int>(std::lround(width_d));
  const double shift_d = mode == BinomialMode::MomentMatched ? mean - 0.5 * width : mean - width;
  if (!near_integer(shift_d)) {
    throw Error(ErrorCode::UnsupportedParameters,
                "binomial support offset " + num(shift_d) + " is not an integer");
  }
  const long shift = std::lround(shift_d);
  if (shift < 0) {
    throw Error(ErrorCode::UnsupportedParameters, "binomial support would include n < 0");
  }
  return DriveDistribution(DriveKind::Binomial, mean, variance, static_cast<int>(shift),
                           binomial_amplitudes(width), width);
}

DriveDistribution fock_drive(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Fock drive needs N >= 0");
  CVector b(1);
  b[0] = 1.0;
  return DriveDistribution(DriveKind::Fock, n, 0.0, n, std::move(b), std::nullopt);
}

double interaction_time(const JCConfig& cfg, double mean) {
  check_tau(cfg.tau);
  if (!(cfg.coupling > 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling g must be > 0");
  if (mean > 0.0) return cfg.tau / (cfg.coupling * std::sqrt(mean));
  if (cfg.tau == 0.0) return 0.0;
  throw Error(ErrorCode::InvalidMean, "reduced time is undefined for a drive with zero mean");
}

FMatrixSet f_matrices(int n, double tau, double mean, const DriveDistribution& drive) {
  check_tau(tau);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "photon number must be >= 0");
  if (!(mean > 0.0) && tau != 0.0) {
    throw Error(ErrorCode::InvalidMean, "reduced time is undefined for a drive with zero mean");
  }
  const double k = mean > 0.0 ? tau / std::sqrt(mean) : 0.0;
  auto c = [k](long m) { return std::cos(k * std::sqrt(static_cast<double>(m))); };
  auto s = [k](long m) { return std::sin(k * std::sqrt(static_cast<double>(m))); };

  const cplx bn = drive.amplitude(n);
  const cplx r1 = bn != 0.0 ? drive.amplitude(n + 1) / bn : 0.0;
  const cplx r2 = bn != 0.0 ? drive.amplitude(n + 2) / bn : 0.0;

  FMatrixSet f;
  f.f00 << c(n) * c(n), std::conj(r1) * c(n) * s(n + 1),
           r1 * c(n) * s(n + 1), s(n) * s(n);
  f.f11 << s(n + 1) * s(n + 1), -std::conj(r1) * s(n + 1) * c(n + 2),
           -r1 * s(n + 1) * c(n + 2), c(n + 1) * c(n + 1);
  f.f01 << -r1 * c(n + 1) * s(n + 1), c(n) * c(n + 1),
           -r2 * s(n + 1) * s(n + 2), r1 * s(n + 1) * c(n + 1);
  f.f10 = f.f01.adjoint();
  return f;
}

QubitChannel jc_channel_at_time(const DriveDistribution& drive, double coupling, double time) {
  if (!(coupling > 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling g must be > 0");
  if (!(time >= 0.0) || !std::isfinite(time)) {
    throw Error(ErrorCode::InvalidArgument, "interaction time must be finite and >= 0");
  }
  const double gt = coupling * time;
  auto c = [gt](long m) { return std::cos(gt * std::sqrt(static_cast<double>(m))); };
  auto s = [gt](long m) { return std::sin(gt * std::sqrt(static_cast<double>(m))); };
  auto b = [&drive](long m) { return drive.amplitude(m); };

  // Drive level m of the evolved state carries v0(m) for input |0> and
  // v1(m) for input |1>; E_ij = sum_m v_i(m) v_j(m)^dagger.
  Mat2 e[2][2] = {{Mat2::Zero(), Mat2::Zero()}, {Mat2::Zero(), Mat2::Zero()}};
  const long first = std::max(0L, static_cast<long>(drive.n_min()) - 1);
  const long last = static_cast<long>(drive.n_max()) + 1;
  for (long m = first; m <= last; ++m) {
    Eigen::Vector2cd v[2];
    v[0] << b(m) * c(m), b(m + 1) * s(m + 1);
    v[1] << (m > 0 ? -b(m - 1) * s(m) : cplx(0.0)), b(m) * c(m + 1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) e[i][j] += v[i] * v[j].adjoint();
  }
  const double tp = std::max({std::abs(e[0][0].trace() - 1.0), std::abs(e[1][1].trace() - 1.0),
                              std::abs(e[0][1].trace()), std::abs(e[1][0].trace())});
  if (tp > 1e-8) {
    throw Error(ErrorCode::TruncationError,
                "trace-preservation residual " + num(tp) + " exceeds 1e-8; widen the drive window");
  }
  return QubitChannel(e[0][0], e[0][1], e[1][0], e[1][1], ChannelTolerance{1e-8, 1e-10, 1e-8});
}

QubitChannel build_channel_exact(const DriveDistribution& drive, const JCConfig& cfg) {
  return jc_channel_at_time(drive, cfg.coupling, interaction_time(cfg, drive.mean()));
}

QubitChannel build_channel_taylor2(double mean, double variance, DriveKind kind,
                                   const JCConfig& cfg) {
  check_tau(cfg.tau);
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw Error(ErrorCode::InvalidMean, "Taylor expansion needs a mean > 0");
  }
  if (!(variance >= 0.0)) throw Error(ErrorCode::InvalidArgument, "variance must be >= 0");
  if (std::sqrt(variance) > mean) {
    throw Error(ErrorCode::ApproximationDomain,
                "second-order expansion needs the standard deviation to be <= the mean");
  }

  std::function<double(double)> ratio1, ratio2;
  switch (kind) {
    case DriveKind::Poisson:
      ratio1 = [mean](double n) { return std::sqrt(mean / (n + 1.0)); };
      ratio2 = [mean](double n) { return mean / std::sqrt((n + 1.0) * (n + 2.0)); };
      break;
    case DriveKind::Binomial: {
      const double width = 4.0 * variance;
      const double offset = mean - 0.5 * width;
      if (variance > 0.0 && 0.5 * width < 2.0) {
        throw Error(ErrorCode::ApproximationDomain,
                    "binomial expansion needs variance >= 1 for the ratio stencil");
      }
      ratio1 = [=](double n) {
        const double k = n - offset;
        return std::sqrt(std::max(0.0, (width - k) / (k + 1.0)));
      };
      ratio2 = [=](double n) {
        const double k = n - offset;
        return std::sqrt(std::max(0.0, (width - k) * (width - k - 1.0) / ((k + 1.0) * (k + 2.0))));
      };
      break;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "Taylor expansion supports Poisson and binomial drives");
  }

  const TrigJets t0 = trig_jets(mean, 0.0, cfg.tau);
  const TrigJets t1 = trig_jets(mean, 1.0, cfg.tau);
  const TrigJets t2 = trig_jets(mean, 2.0, cfg.tau);
  const Jet r1 = central_difference(ratio1, mean);
  const Jet r2 = central_difference(ratio2, mean);
  const double var = variance;
  auto e = [var](const Jet& j) { return j.second_order(var); };

  Mat2 e00, e11, e01;
  e00 << e(t0.c * t0.c), e(r1 * t0.c * t1.s),
         e(r1 * t0.c * t1.s), e(t0.s * t0.s);
  e11 << e(t1.s * t1.s), e(-(r1 * t1.s * t2.c)),
         e(-(r1 * t1.s * t2.c)), e(t1.c * t1.c);
  e01 << e(-(r1 * t1.c * t1.s)), e(t0.c * t1.c),
         e(-(r2 * t1.s * t2.s)), e(r1 * t1.s * t1.c);
  return QubitChannel(e00, e01, e01.adjoint(), e11,
                      ChannelTolerance{1e-10, 1e-10, std::numeric_limits<double>::infinity()});
}

double asymptotic_eigenerror_lower_bound(DriveKind kind, double mean, double variance,
                                         double tau) {
  if (!(mean > 0.0)) throw Error(ErrorCode::InvalidMean, "asymptotic bound needs a mean > 0");
  const double sin_tau = std::sin(tau);
  switch (kind) {
    case DriveKind::Poisson:
      return (tau * tau + sin_tau * sin_tau) / (6.0 * mean);
    case DriveKind::Binomial:
    case DriveKind::Fock:
      if (!(variance > 0.0)) return std::numeric_limits<double>::infinity();
      return tau * tau / 6.0 * variance / (mean * mean) + sin_tau * sin_tau / (6.0 * variance);
    case DriveKind::Custom:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "no asymptotic bound for custom drives");
}

cplx BipartiteState::amplitude(int n, int q) const {
  const int r = n - n_lo;
  if (r < 0 || r >= amplitudes.rows() || q < 0 || q > 1) return 0.0;
  return amplitudes(r, q);
}

DensityMatrix BipartiteState::reduced_qubit() const {
  // rho_ab = sum_n psi(n, a) conj(psi(n, b)).
  const Mat2 rho = amplitudes.transpose() * amplitudes.conjugate();
  return DensityMatrix(rho, StateTolerance{1e-10, 1e-10, 1e-10});
}

BipartiteState evolve_bipartite(const DriveDistribution& drive, const PureState& qubit,
                                const JCConfig& cfg) {
  if (qubit.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "qubit state must be 2-dimensional");
  const double gt = cfg.coupling * interaction_time(cfg, drive.mean());

  BipartiteState out;
  out.n_lo = std::max(0, drive.n_min() - 1);
  const int n_hi = drive.n_max() + 1;
  out.amplitudes = CMatrix::Zero(n_hi - out.n_lo + 1, 2);
  for (int n = drive.n_min(); n <= drive.n_max(); ++n) {
    out.amplitudes(n - out.n_lo, 0) = drive.amplitude(n) * qubit[0];
    out.amplitudes(n - out.n_lo, 1) = drive.amplitude(n) * qubit[1];
  }
  // Block n couples rows (n, qubit 0) and (n - 1, qubit 1).
  for (int n = std::max(1, out.n_lo); n <= n_hi; ++n) {
    const int r0 = n - out.n_lo;
    const int r1 = r0 - 1;
    if (r1 < 0) continue;
    const double w = gt * std::sqrt(static_cast<double>(n));
    const double c = std::cos(w);
    const double s = std::sin(w);
    const cplx x = out.amplitudes(r0, 0);
    const cplx y = out.amplitudes(r1, 1);
    out.amplitudes(r0, 0) = c * x - s * y;
    out.amplitudes(r1, 1) = s * x + c * y;
  }
  return out;
}

}  // namespace eigenfid
