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

#include "eigenfid/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "eigenfid/error.hpp"

namespace eigenfid {

namespace {

constexpr int kAzimuthNodes = 128;

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

Mat2 outer(int i, int j) {
  Mat2 m = Mat2::Zero();
  m(i, j) = 1.0;
  return m;
}

}  // namespace

TargetGate::TargetGate(const Mat2& u) : u_(u) {
  const double dev = (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff();
  if (dev > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "target gate is not unitary (deviation " + sci(dev) + ")");
  }
}

TargetGate TargetGate::identity() { return TargetGate(Mat2::Identity()); }

TargetGate TargetGate::pauli_x() {
  Mat2 u;
  u << 0, 1, 1, 0;
  return TargetGate(u);
}

TargetGate TargetGate::pauli_y() {
  Mat2 u;
  u << 0, cplx(0, -1), cplx(0, 1), 0;
  return TargetGate(u);
}

TargetGate TargetGate::pauli_z() {
  Mat2 u;
  u << 1, 0, 0, -1;
  return TargetGate(u);
}

TargetGate TargetGate::hadamard() {
  Mat2 u;
  u << 1, 1, 1, -1;
  return TargetGate(u / std::sqrt(2.0));
}

QubitChannel::QubitChannel(const Mat2& e00, const Mat2& e01, const Mat2& e10, const Mat2& e11,
                           const ChannelTolerance& tol)
    : e_{e00, e01, e10, e11} {
  const double tp = tp_residual();
  if (tp > tol.trace) {
    throw Error(ErrorCode::InvalidChannel, "channel is not trace preserving (residual " + sci(tp) + ")");
  }
  const double herm = std::max({(e10 - e01.adjoint()).cwiseAbs().maxCoeff(),
                                (e00 - e00.adjoint()).cwiseAbs().maxCoeff(),
                                (e11 - e11.adjoint()).cwiseAbs().maxCoeff()});
  if (herm > tol.hermitian) {
    throw Error(ErrorCode::InvalidChannel,
                "channel is not Hermiticity preserving (residual " + sci(herm) + ")");
  }
  const double lowest = cp_min_eigenvalue();
  if (lowest < -tol.cp) {
    throw Error(ErrorCode::CPViolation,
                "channel is not completely positive (Choi eigenvalue " + sci(lowest) + ")");
  }
}

QubitChannel QubitChannel::identity() {
  return QubitChannel(outer(0, 0), outer(0, 1), outer(1, 0), outer(1, 1));
}

QubitChannel QubitChannel::depolarizing() {
  const Mat2 half = 0.5 * Mat2::Identity();
  return QubitChannel(half, Mat2::Zero(), Mat2::Zero(), half);
}

QubitChannel QubitChannel::unitary(const TargetGate& gate) {
  const Mat2& u = gate.matrix();
  auto img = [&](int i, int j) -> Mat2 { return u * outer(i, j) * u.adjoint(); };
  return QubitChannel(img(0, 0), img(0, 1), img(1, 0), img(1, 1));
}

Mat2 QubitChannel::apply_raw(const Mat2& rho) const {
  return rho(0, 0) * e_[0] + rho(0, 1) * e_[1] + rho(1, 0) * e_[2] + rho(1, 1) * e_[3];
}

Mat4 QubitChannel::transfer() const {
  Mat4 t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) t(2 * a + b, 2 * i + j) = image(i, j)(a, b);
  return t;
}

Mat4 QubitChannel::choi() const {
  Mat4 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c.block<2, 2>(2 * i, 2 * j) = image(i, j);
  return c;
}

double QubitChannel::tp_residual() const {
  return std::max({std::abs(e_[0].trace() - 1.0), std::abs(e_[3].trace() - 1.0),
                   std::abs(e_[1].trace()), std::abs(e_[2].trace())});
}

double QubitChannel::cp_min_eigenvalue() const {
  const Mat4 c = choi();
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (c + c.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

DensityMatrix apply(const QubitChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "qubit channel applied to a non-qubit state");
  }
  const Mat2 out = channel.apply_raw(rho.matrix());
  Eigen::SelfAdjointEigenSolver<Mat2> es(0.5 * (out + out.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -1e-8) {
    throw Error(ErrorCode::CPViolation,
                "channel output has eigenvalue " + sci(es.eigenvalues()(0)));
  }
  return DensityMatrix(out, StateTolerance{1e-10, 1e-10, 1e-8});
}

QubitChannel compose(const QubitChannel& outer_ch, const QubitChannel& inner) {
  return QubitChannel(outer_ch.apply_raw(inner.image(0, 0)), outer_ch.apply_raw(inner.image(0, 1)),
                      outer_ch.apply_raw(inner.image(1, 0)), outer_ch.apply_raw(inner.image(1, 1)));
}

QubitChannel power(const QubitChannel& channel, int times) {
  if (times < 1) throw Error(ErrorCode::InvalidArgument, "channel power must be >= 1");
  QubitChannel acc = channel;
  for (int k = 1; k < times; ++k) acc = compose(channel, acc);
  return acc;
}

double average_purity(const QubitChannel& ch) {
  const Mat2& e00 = ch.image(0, 0);
  const Mat2& e01 = ch.image(0, 1);
  const Mat2& e10 = ch.image(1, 0);
  const Mat2& e11 = ch.image(1, 1);
  return (e00 * e00 + e00 * e11 + e11 * e11 + e01 * e10).trace().real() / 3.0;
}

Interval channel_eigenfidelity_bounds(const QubitChannel& channel) {
  const double g = average_purity(channel);
  return {g, 0.5 * (1.0 + g)};
}

Interval channel_eigenerror_bounds(const QubitChannel& channel) {
  const double sl = 1.0 - average_purity(channel);
  return {0.5 * sl, sl};
}

double qubit_eigenfidelity(const Mat2& rho) noexcept {
  const double half_diff = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
  const double tr = rho(0, 0).real() + rho(1, 1).real();
  return 0.5 * tr + std::sqrt(half_diff * half_diff + std::norm(rho(0, 1)));
}

double channel_eigenfidelity(const QubitChannel& channel) {
  // Per-azimuth phases are shared by every polar node.
  std::vector<cplx> phases(kAzimuthNodes);
  for (int k = 0; k < kAzimuthNodes; ++k) {
    phases[static_cast<size_t>(k)] = std::polar(1.0, 2.0 * kPi * k / kAzimuthNodes);
  }
  auto ring_average = [&](double z) {
    const double c = std::sqrt(0.5 * (1.0 + z));  // cos(theta/2)
    const double s = std::sqrt(0.5 * (1.0 - z));  // sin(theta/2)
    double acc = 0.0;
    for (const cplx& ph : phases) {
      Mat2 rho;
      rho(0, 0) = c * c;
      rho(1, 1) = s * s;
      rho(0, 1) = c * s * std::conj(ph);
      rho(1, 0) = c * s * ph;
      acc += qubit_eigenfidelity(channel.apply_raw(rho));
    }
    return acc / kAzimuthNodes;
  };
  return 0.5 * boost::math::quadrature::gauss<double, 64>::integrate(ring_average);
}

McEstimate channel_eigenfidelity_mc(const QubitChannel& channel, SeededSampler& sampler,
                                    std::size_t n_samples) {
  if (sampler.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "channel eigenfidelity needs a qubit sampler");
  }
  return mc_average(
      [&](const PureState& a) {
        const Mat2 rho = a.amplitudes() * a.amplitudes().adjoint();
        return qubit_eigenfidelity(channel.apply_raw(rho));
      },
      sampler, n_samples);
}

Eigen::Matrix4d a_matrix() {
  Eigen::Matrix4d a;
  a << 2, 0, 0, 1,
       0, 1, 0, 0,
       0, 0, 1, 0,
       1, 0, 0, 2;
  return a / 6.0;
}

ChoiMatrix choi_matrix(const QubitChannel& channel, const TargetGate& gate) {
  const Mat2& u = gate.matrix();
  ChoiMatrix s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      s.entries.block<2, 2>(2 * i, 2 * j) = u.adjoint() * channel.image(i, j) * u;
  return s;
}

double average_gate_fidelity(const QubitChannel& channel, const TargetGate& gate) {
  const Mat4 s = choi_matrix(channel, gate).entries;
  return (a_matrix().cast<cplx>() * s).trace().real();
}

}  // namespace eigenfid
