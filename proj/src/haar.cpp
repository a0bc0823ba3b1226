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

#include "eigenfid/haar.hpp"

#include <algorithm>
#include <cmath>

#include "eigenfid/error.hpp"

namespace eigenfid {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SeededSampler::SeededSampler(std::uint64_t seed, int dim)
    : seed_(seed), dim_(dim), engine_(seed) {
  if (dim < 1) throw Error(ErrorCode::InvalidDimension, "sampler dimension must be >= 1");
}

SeededSampler SeededSampler::child(std::uint64_t k) const {
  return SeededSampler(mix_seed(seed_, k), dim_);
}

CVector SeededSampler::gaussian_vector(int n) {
  CVector v(n);
  for (int i = 0; i < n; ++i) {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    v[i] = cplx(re, im);
  }
  return v;
}

PureState SeededSampler::sample_pure() {
  CVector v = gaussian_vector(dim_);
  double n = v.norm();
  while (n == 0.0) {
    v = gaussian_vector(dim_);
    n = v.norm();
  }
  return PureState(v / n);
}

DensityMatrix SeededSampler::sample_density_matrix() {
  CMatrix g(dim_, dim_);
  for (int c = 0; c < dim_; ++c) g.col(c) = gaussian_vector(dim_);
  CMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(0.5 * (m + m.adjoint()));
}

McEstimate mc_average(const std::function<double(const PureState&)>& f, SeededSampler& sampler,
                      std::size_t n_samples) {
  if (n_samples < 2) {
    throw Error(ErrorCode::InvalidArgument, "Monte Carlo average needs at least 2 samples");
  }
  // Welford accumulation.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t k = 0; k < n_samples; ++k) {
    const double x = f(sampler.sample_pure());
    const double delta = x - mean;
    mean += delta / static_cast<double>(k + 1);
    m2 += delta * (x - mean);
  }
  const double n = static_cast<double>(n_samples);
  const double var = std::max(m2 / (n - 1.0), 0.0);
  return {mean, std::sqrt(var / n)};
}

}  // namespace eigenfid
