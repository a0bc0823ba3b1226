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

// Haar-random pure states and Monte Carlo averages over them.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "eigenfid/densmat.hpp"

namespace eigenfid {

/// splitmix64 finalizer; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Deterministic stream of Haar-distributed pure states of fixed dimension.
/// Equal (seed, dim) pairs give bit-identical streams on a given build.
class SeededSampler {
 public:
  SeededSampler(std::uint64_t seed, int dim);

  std::uint64_t seed() const noexcept { return seed_; }
  int dim() const noexcept { return dim_; }

  /// Independent sampler for parallel worker `k`.
  SeededSampler child(std::uint64_t k) const;

  /// 2d standard normals -> d complex amplitudes -> normalize.
  PureState sample_pure();

  /// Hilbert-Schmidt random density matrix (G G^dagger / tr, G Ginibre).
  DensityMatrix sample_density_matrix();

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  CVector gaussian_vector(int n);

  std::uint64_t seed_;
  int dim_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline PureState sample_pure(SeededSampler& sampler) { return sampler.sample_pure(); }

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // unbiased sample stdev / sqrt(n)
};

/// Sample mean of f over `n_samples` Haar states; n_samples >= 2.
McEstimate mc_average(const std::function<double(const PureState&)>& f, SeededSampler& sampler,
                      std::size_t n_samples);

}  // namespace eigenfid
