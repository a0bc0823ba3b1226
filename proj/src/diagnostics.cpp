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

#include "eigenfid/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "eigenfid/error.hpp"
#include "eigenfid/haar.hpp"

namespace eigenfid {

namespace {

constexpr double kOrders[] = {1.0, 2.0, 4.0, 8.0, 16.0};

// Records a violation of lhs <= rhs beyond tol.
void expect_le(double lhs, double rhs, double tol, long& failures, double& worst) {
  const double excess = lhs - rhs;
  if (excess > tol) {
    ++failures;
    worst = std::max(worst, excess);
  }
}

// Mixes a Ginibre state with a pure one so that nearly pure and low-rank
// inputs are covered as well as generic full-rank ones.
DensityMatrix trial_state(SeededSampler& sampler, int trial) {
  DensityMatrix g = sampler.sample_density_matrix();
  if (trial % 4 != 3) return g;
  const PureState psi = sampler.sample_pure();
  const double w = std::uniform_real_distribution<double>(0.0, 1.0)(sampler.engine());
  const CMatrix p = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityMatrix(w * p + (1.0 - w) * g.matrix());
}

}  // namespace

std::string BoundsCheckReport::summary() const {
  auto tag = [](long f) { return f == 0 ? "OK" : "FAIL"; };
  return std::string("prop1 ") + tag(prop1_failures) + " prop2 " + tag(prop2_failures) + " thm1 " +
         tag(thm1_failures);
}

BoundsCheckReport run_bounds_check(const BoundsCheckOptions& opt) {
  if (opt.dim < 0 || opt.dim == 1) {
    throw Error(ErrorCode::InvalidDimension, "bounds check needs dim >= 2 (or 0 for 2..8)");
  }
  if (opt.trials < 1) throw Error(ErrorCode::InvalidArgument, "bounds check needs trials >= 1");
  if (opt.states_per_trial < 1) {
    throw Error(ErrorCode::InvalidArgument, "bounds check needs states_per_trial >= 1");
  }
  BoundsCheckReport rep;
  rep.trials = opt.trials;
  const double tol = opt.tolerance;

  for (int t = 0; t < opt.trials; ++t) {
    const int d = opt.dim > 0 ? opt.dim : 2 + t % 7;
    SeededSampler sampler = SeededSampler(opt.seed, d).child(static_cast<std::uint64_t>(t));
    const DensityMatrix rho = trial_state(sampler, t);
    const Eigenfidelity top = eigenfidelity(rho);
    const double r = top.value;

    for (int k = 0; k < opt.states_per_trial; ++k) {
      expect_le(fidelity_to_pure(rho, sampler.sample_pure()), r, tol, rep.prop1_failures,
                rep.worst_prop1);
    }
    const double at_top = fidelity_to_pure(rho, top.closest);
    if (std::abs(at_top - r) > tol) {
      ++rep.prop1_failures;
      rep.worst_prop1 = std::max(rep.worst_prop1, std::abs(at_top - r));
    }

    for (double p : kOrders) {
      const double norm = schatten_norm(rho, p);
      expect_le(norm / std::pow(static_cast<double>(d), 1.0 / p), r, tol, rep.prop2_failures,
                rep.worst_prop2);
      expect_le(r, norm, tol, rep.prop2_failures, rep.worst_prop2);
      if (p > 1.0) {
        expect_le(std::pow(norm, p / (p - 1.0)), r, tol, rep.prop2_failures, rep.worst_prop2);
      }
    }

    const Interval b = eigenfidelity_bounds(rho);
    expect_le(b.lower, r, tol, rep.thm1_failures, rep.worst_thm1);
    expect_le(r, b.upper, tol, rep.thm1_failures, rep.worst_thm1);
    const double sl = linear_entropy(rho);
    const double eps = 1.0 - r;
    expect_le(0.5 * sl, eps, tol, rep.thm1_failures, rep.worst_thm1);
    expect_le(eps, sl, tol, rep.thm1_failures, rep.worst_thm1);
  }
  return rep;
}

}  // namespace eigenfid
