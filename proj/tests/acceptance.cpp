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

// End-to-end acceptance checks. One PASS/FAIL line per criterion, nonzero
// exit if any fails. Sub-check details follow each line, indented.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "eigenfid/channel.hpp"
#include "eigenfid/diagnostics.hpp"
#include "eigenfid/experiments.hpp"
#include "eigenfid/jcdrive.hpp"
#include "eigenfid/qsl.hpp"
#include "support/oracles.hpp"
#include "support/random_objects.hpp"

using namespace eigenfid;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, std::string note) {
    pass = pass && ok;
    notes.push_back((ok ? "ok   " : "FAIL ") + std::move(note));
  }
  void info(std::string note) { notes.push_back("info " + std::move(note)); }
};

std::string fmt(const char* f, double a) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

template <typename... Args>
std::string fmtn(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// ---------------------------------------------------------------------------

Outcome property_suite() {
  Outcome o;
  BoundsCheckOptions opt;
  opt.dim = 0;
  opt.trials = 1000;
  opt.seed = 1;
  opt.tolerance = 1e-10;
  const BoundsCheckReport r = run_bounds_check(opt);
  o.check(r.ok(), r.summary() + fmtn(" over %d states, d in 2..8", r.trials));
  return o;
}

Outcome purity_oracle() {
  Outcome o;
  std::mt19937_64 rng(2);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const QubitChannel ch = testsupport::random_channel(rng, 1 + i % 4);
    SeededSampler s(1000 + i, 2);
    const McEstimate mc = mc_average(
        [&](const PureState& a) {
          const Mat2 out = ch.apply_raw(a.amplitudes() * a.amplitudes().adjoint());
          return (out * out).trace().real();
        },
        s, 100000);
    // Unitary channels have zero variance; 1e-12 absorbs rounding there.
    const double diff = std::abs(mc.mean - average_purity(ch));
    if (diff > 3.0 * mc.std_error + 1e-12) ++bad;
    if (mc.std_error > 1e-12) worst = std::max(worst, diff / mc.std_error);
  }
  o.check(bad == 0, fmtn("closed-form average purity vs 1e5-sample MC: %d/50 outside 3 stderr, worst %.2f stderr", bad,
                         worst));
  return o;
}

Outcome fock_worst_case() {
  Outcome o;
  JCConfig cfg;
  cfg.tau = kPi / 4;
  for (int n : {1, 10, 100}) {
    const QubitChannel ch = build_channel_exact(fock_drive(n), cfg);
    const DensityMatrix out = apply(ch, DensityMatrix::from_pure(PureState::basis(2, 0)));
    const double p = purity(out);
    const double e = eigenerror(out);
    o.check(std::abs(p - 0.5) <= 1e-12 && std::abs(e - 0.5) <= 1e-12,
            fmtn("Fock N=%d, input |0>: purity %.15f, eigenerror %.15f", n, p, e));
  }
  return o;
}

Outcome poisson_asymptote() {
  Outcome o;
  JCConfig cfg;
  cfg.tau = kPi / 2;
  const double lower = channel_eigenerror_bounds(build_channel_exact(poisson_drive(1000.0), cfg)).lower;
  const double asym = asymptotic_eigenerror_lower_bound(DriveKind::Poisson, 1000.0, 1000.0, cfg.tau);
  const double ratio = lower / asym;
  o.check(ratio >= 0.95 && ratio <= 1.05,
          fmtn("nbar=1000: Sbar_L/2 = %.6e, closed form %.6e, ratio %.4f (want [0.95, 1.05])", lower, asym, ratio));
  return o;
}

std::vector<double> scaling_column(const SweepConfig& cfg) {
  std::vector<double> out;
  for (const SweepRow& r : run_scaling(cfg).rows) out.push_back(r.eigenerror_bound_lower);
  return out;
}

Outcome nbar_scaling() {
  Outcome o;
  const std::vector<double> nbar{100, 200, 400, 800};
  SweepConfig cfg = default_config(SweepMode::Scaling);
  cfg.nbar = nbar;
  cfg.tau = {kPi / 2};
  cfg.jobs = jobs();
  const double poisson = testsupport::loglog_slope(nbar, scaling_column(cfg));
  o.check(std::abs(poisson + 1.0) <= 0.05, fmt("Poisson slope %.4f (want -1 +- 0.05)", poisson));

  cfg.drive.kind = DriveKind::Binomial;
  cfg.fano = {0.25};
  const double binomial = testsupport::loglog_slope(nbar, scaling_column(cfg));
  o.check(std::abs(binomial + 1.0) <= 0.05, fmt("binomial s=0.25 slope %.4f (want -1 +- 0.05)", binomial));

  cfg.fano = {0.02};
  cfg.nbar = {100, 200, 400, 800};
  o.info(fmt("binomial s=0.02 slope %.4f (pre-asymptotic at these nbar)",
             testsupport::loglog_slope(nbar, scaling_column(cfg))));
  return o;
}

Outcome fano_scaling() {
  Outcome o;
  const std::vector<double> fano{0.02, 0.05, 0.1, 0.25};
  SweepConfig cfg = default_config(SweepMode::Scaling);
  cfg.drive.kind = DriveKind::Binomial;
  cfg.nbar = {1000.0};
  cfg.fano = fano;
  cfg.tau = {kPi / 2};
  cfg.jobs = jobs();
  const double slope = testsupport::loglog_slope(fano, scaling_column(cfg));
  o.check(std::abs(slope + 1.0) <= 0.1, fmt("nbar=1000 slope in s %.4f (want -1 +- 0.1)", slope));
  return o;
}

Outcome concatenation() {
  Outcome o;
  SweepConfig cfg = default_config(SweepMode::Concat);
  cfg.jobs = jobs();
  const SweepResult res = run_concat(cfg);

  // grid[tau index][C], fixed[ctau][C]
  std::map<double, std::map<int, double>> grid, fixed;
  for (const SweepRow& r : res.rows) {
    (r.ctau ? fixed[*r.ctau] : grid[r.tau])[r.concat] = r.eigenerror_exact;
  }

  // (a)
  int violations = 0;
  for (const auto& [tau, by_c] : grid) {
    double prev = -1.0;
    for (const auto& [c, e] : by_c) {
      if (e < prev - 1e-12) ++violations;
      prev = e;
    }
  }
  o.check(violations == 0, fmtn("(a) non-decreasing in C on the %zu-point tau grid: %d violations", grid.size(),
                                violations));

  // (b)
  std::vector<double> taus;
  for (const auto& [tau, _] : grid) taus.push_back(tau);
  std::size_t k = 0;
  while (k < taus.size() && std::abs(taus[k] - kPi / 2) > 1e-9) ++k;
  if (k == 0 || k + 1 >= taus.size()) {
    o.check(false, "(b) tau = pi/2 is not an interior grid point");
  } else {
    for (int c = 2; c <= 8; ++c) {
      const double left = grid[taus[k - 1]][c], mid = grid[taus[k]][c], right = grid[taus[k + 1]][c];
      o.check(mid < left && mid < right,
              fmtn("(b) C=%d: eigenerror at tau=pi/2 %.5f, neighbours %.5f / %.5f", c, mid, left, right));
    }
  }

  // (c)
  for (const auto& [ctau, by_c] : fixed) {
    std::string values;
    bool decreasing = true;
    double prev = 2.0;
    for (const auto& [c, e] : by_c) {
      values += fmtn(" %d:%.4f", c, e);
      if (e >= prev) decreasing = false;
      prev = e;
    }
    o.check(decreasing, fmt("(c) C tau = %.4f, eigenerror by C:", ctau) + values);
  }

  // The tau=pi/2 eigenerror should approach 1/4 as the drive approaches a
  // number state (s -> 0) at large nbar. Integer binomial widths stop at
  // var = 1/2; the number state itself closes the sequence.
  SweepConfig trend = default_config(SweepMode::Scaling);
  trend.drive.kind = DriveKind::Binomial;
  trend.nbar = {1000.0};
  trend.fano = {0.02, 0.005, 0.002, 0.001, 0.0005};
  trend.tau = {kPi / 2};
  trend.jobs = jobs();
  std::vector<SweepRow> rows = run_scaling(trend).rows;
  trend.drive.kind = DriveKind::Fock;
  trend.fano = {1.0};
  rows.push_back(run_scaling(trend).rows.at(0));
  std::string values;
  double prev = 0.0;
  bool rising = true;
  for (const SweepRow& r : rows) {
    values += fmtn(" %.4f", r.eigenerror_exact);
    if (r.eigenerror_exact <= prev) rising = false;
    prev = r.eigenerror_exact;
  }
  o.check(rising && std::abs(prev - 0.25) <= 0.02,
          "(d) nbar=1000, var 20, 5, 2, 1, 0.5, 0 (number state), eigenerror at tau=pi/2:" + values +
              " (want rising to 0.25 +- 0.02)");
  return o;
}

Outcome split_budget() {
  Outcome o;
  SweepConfig cfg = default_config(SweepMode::Split);
  cfg.jobs = jobs();
  std::map<SplitConvention, std::map<int, double>> by;
  for (const SweepRow& r : run_split(cfg).rows) by[*r.convention][r.concat] = r.eigenerror_exact;
  for (const auto& [conv, values] : by) {
    std::string list;
    bool monotone = true;
    double prev = -1.0;
    for (const auto& [c, e] : values) {
      list += fmtn(" %d:%.5f", c, e);
      if (e < prev - 1e-12) monotone = false;
      prev = e;
    }
    o.check(monotone, std::string(to_string(conv)) + " eigenerror by C:" + list);
  }
  return o;
}

Outcome qsl_consistency() {
  Outcome o;
  int mismatches = 0;
  for (double theta = 0.0; theta <= kPi / 2 + 1e-12; theta += kPi / 40)
    for (double n : {1.0, 10.0, 100.0, 1000.0, 1e5})
      if (qsl_eigenerror_bound(theta, n) != asymptotic_eigenerror_lower_bound(DriveKind::Poisson, n, n, theta))
        ++mismatches;
  o.check(mismatches == 0, fmtn("speed-limit bound vs Poisson closed form: %d mismatches over 105 points", mismatches));

  std::vector<double> eps, photons;
  for (int i = 0; i <= 20; ++i) {
    const double e = std::pow(10.0, -4.0 + 2.0 * i / 20);
    eps.push_back(e);
    photons.push_back(photons_for_eigenerror(kPi / 2, e));
  }
  const double slope = testsupport::loglog_slope(eps, photons);
  o.check(std::abs(slope + 1.0) <= 0.01, fmt("photons vs eigenerror slope %.6f (want -1 +- 0.01)", slope));
  return o;
}

Outcome channel_chain() {
  Outcome o;
  std::mt19937_64 rng(10);
  int bad_low = 0, bad_high = 0;
  for (int i = 0; i < 50; ++i) {
    const QubitChannel ch = testsupport::random_channel(rng, 1 + i % 4);
    const TargetGate gate(testsupport::random_unitary2(rng));
    SeededSampler s(5000 + i, 2);
    const McEstimate r = channel_eigenfidelity_mc(ch, s, 100000);
    const double f = average_gate_fidelity(ch, gate);
    const double upper = 0.5 * (1.0 + average_purity(ch));
    if (f > r.mean + 3 * r.std_error) ++bad_low;
    if (r.mean > upper) ++bad_high;
  }
  o.check(bad_low == 0 && bad_high == 0,
          fmtn("tr(A S) <= MC rbar + 3 se: %d/50 violations; MC rbar <= (1 + gamma)/2: %d/50 violations",
               bad_low, bad_high));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"state inequality chains on 1000 random states", property_suite},
      {"channel purity closed form vs Monte Carlo", purity_oracle},
      {"Fock drive quarter rotation is maximally mixing", fock_worst_case},
      {"coherent-drive eigenerror asymptote", poisson_asymptote},
      {"1/nbar scaling", nbar_scaling},
      {"1/s scaling", fano_scaling},
      {"gate concatenation", concatenation},
      {"photon budget split over several gates", split_budget},
      {"speed-limit bound consistency", qsl_consistency},
      {"channel fidelity chain", channel_chain},
  };
  const double limits_s[] = {10, 60, 1, 30, 120, 120, 300, 120, 10, 60};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.check(secs < limits_s[i], fmtn("runtime %.2f s (limit %.0f s)", secs, limits_s[i]));
    if (!out.pass) ++failed;
    std::printf("criterion %2zu: %s  %s\n", i + 1, out.pass ? "PASS" : "FAIL", criteria[i].first);
    for (const std::string& n : out.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
