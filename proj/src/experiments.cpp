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

#include "eigenfid/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "eigenfid/error.hpp"
#include "eigenfid/io.hpp"

namespace eigenfid {

namespace {

using Task = std::function<std::vector<SweepRow>(std::size_t task_index)>;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Tasks run on `jobs` threads; results are concatenated in task order, so
// the output never depends on scheduling.
std::vector<SweepRow> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<std::vector<SweepRow>> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i](i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<SweepRow> rows;
  for (auto& chunk : out) rows.insert(rows.end(), chunk.begin(), chunk.end());
  return rows;
}

void fill_metrics(SweepRow& row, const QubitChannel& channel, const SweepConfig& cfg,
                  std::size_t task_index, std::size_t local_index) {
  row.eigenerror_exact = std::max(0.0, 1.0 - channel_eigenfidelity(channel));
  const Interval b = channel_eigenerror_bounds(channel);
  row.eigenerror_bound_lower = b.lower;
  row.eigenerror_bound_upper = b.upper;
  if (cfg.mc_samples > 0) {
    SeededSampler sampler = SeededSampler(cfg.seed, 2).child(mix_seed(task_index, local_index));
    const McEstimate r = channel_eigenfidelity_mc(channel, sampler, cfg.mc_samples);
    row.mc_eigenerror = McEstimate{1.0 - r.mean, r.std_error};
  }
}

std::vector<double> fano_grid(const SweepConfig& cfg) {
  switch (cfg.drive.kind) {
    case DriveKind::Binomial: return cfg.fano;
    case DriveKind::Poisson: return {1.0};
    default: return {0.0};
  }
}

std::optional<double> single_gate_asymptote(const DriveDistribution& drive, double tau) {
  if (drive.kind() == DriveKind::Custom || !(drive.mean() > 0.0)) return std::nullopt;
  return asymptotic_eigenerror_lower_bound(drive.kind(), drive.mean(), drive.variance(), tau);
}

JCConfig jc_config(const SweepConfig& cfg, double tau) {
  JCConfig jc;
  jc.coupling = cfg.coupling;
  jc.carrier = cfg.carrier;
  jc.tau = tau;
  return jc;
}

void config_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ConfigError, field + ": " + what);
}

}  // namespace

std::string_view to_string(SweepMode mode) noexcept {
  switch (mode) {
    case SweepMode::Scaling: return "scaling";
    case SweepMode::Concat: return "concat";
    case SweepMode::Split: return "split";
  }
  return "unknown";
}

std::string_view to_string(SplitConvention conv) noexcept {
  switch (conv) {
    case SplitConvention::SharedTime: return "shared_time";
    case SplitConvention::PerPulse: return "per_pulse";
  }
  return "unknown";
}

SweepConfig default_config(SweepMode mode) {
  SweepConfig cfg;
  cfg.mode = mode;
  switch (mode) {
    case SweepMode::Scaling:
      cfg.drive.kind = DriveKind::Poisson;
      cfg.nbar = {100, 200, 400, 800};
      cfg.tau = {kPi / 2};
      break;
    case SweepMode::Concat:
      cfg.drive.kind = DriveKind::Binomial;
      cfg.nbar = {25};
      cfg.fano = {0.2};
      cfg.tau.clear();
      for (int k = 0; k < 32; ++k) cfg.tau.push_back((k + 1) * kPi / 32);
      cfg.concat = {1, 2, 3, 4, 5, 6, 7, 8};
      cfg.ctau = {kPi / 2, kPi, 2 * kPi};
      break;
    case SweepMode::Split:
      cfg.drive.kind = DriveKind::Poisson;
      cfg.nbar = {64};
      cfg.tau = {kPi / 2};
      cfg.concat = {1, 2, 4, 8};
      break;
  }
  return cfg;
}

void validate(const SweepConfig& cfg) {
  if (cfg.nbar.empty() && cfg.drive.kind != DriveKind::Custom && !cfg.drive.fock_n) {
    config_error("nbar", "grid is empty");
  }
  for (double n : cfg.nbar) {
    if (!(n > 0.0) || !std::isfinite(n)) config_error("nbar", "values must be finite and > 0");
  }
  if (cfg.drive.kind == DriveKind::Binomial) {
    if (cfg.fano.empty()) config_error("fano", "grid is empty");
    for (double s : cfg.fano) {
      if (!(s > 0.0 && s <= 1.0)) config_error("fano", "binomial Fano factors must lie in (0, 1]");
    }
  }
  if (cfg.tau.empty()) config_error("tau", "grid is empty");
  for (double t : cfg.tau) {
    if (!(t >= 0.0) || !std::isfinite(t)) config_error("tau", "values must be finite and >= 0");
  }
  if (cfg.mode != SweepMode::Scaling && cfg.concat.empty()) config_error("concat", "grid is empty");
  for (int c : cfg.concat) {
    if (c < 1) config_error("concat", "values must be >= 1");
  }
  for (double k : cfg.ctau) {
    if (!(k > 0.0) || !std::isfinite(k)) config_error("ctau", "values must be finite and > 0");
  }
  if (cfg.mode == SweepMode::Split && cfg.split_conventions.empty()) {
    config_error("split_convention", "no convention selected");
  }
  if (!(cfg.coupling > 0.0)) config_error("coupling", "must be > 0");
  if (!(cfg.carrier > 0.0)) config_error("carrier", "must be > 0");
  if (cfg.jobs < 1) config_error("jobs", "must be >= 1");
  if (cfg.mc_samples == 1) config_error("mc_samples", "must be 0 (off) or >= 2");
}

DriveDistribution make_drive(const DriveSpec& spec, double nbar, double fano) {
  switch (spec.kind) {
    case DriveKind::Poisson:
      return poisson_drive(nbar);
    case DriveKind::Binomial:
      return binomial_drive(nbar, fano * nbar, spec.binomial_mode);
    case DriveKind::Fock: {
      if (spec.fock_n) return fock_drive(*spec.fock_n);
      if (std::abs(nbar - std::round(nbar)) > 1e-9) {
        throw Error(ErrorCode::UnsupportedParameters, "Fock drive needs an integer photon number");
      }
      return fock_drive(static_cast<int>(std::lround(nbar)));
    }
    case DriveKind::Custom:
      return DriveDistribution::custom(spec.custom_n_min, spec.custom_coefficients);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown drive kind");
}

SweepResult run_scaling(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<Task> tasks;
  for (double nbar : cfg.nbar) {
    for (double fano : fano_grid(cfg)) {
      for (double tau : cfg.tau) {
        tasks.push_back([&cfg, nbar, fano, tau](std::size_t index) {
          const auto start = std::chrono::steady_clock::now();
          const DriveDistribution drive = make_drive(cfg.drive, nbar, fano);
          SweepRow row;
          row.mode = SweepMode::Scaling;
          row.kind = drive.kind();
          row.nbar = drive.mean();
          row.fano = drive.fano();
          row.tau = tau;
          row.tau_sub = tau;
          fill_metrics(row, build_channel_exact(drive, jc_config(cfg, tau)), cfg, index, 0);
          row.asymptote = single_gate_asymptote(drive, tau);
          row.energy = drive.mean() * cfg.carrier;
          row.runtime_ms = elapsed_ms(start);
          return std::vector<SweepRow>{row};
        });
      }
    }
  }
  return {cfg, run_tasks(tasks, cfg.jobs)};
}

SweepResult run_concat(const SweepConfig& cfg) {
  validate(cfg);
  const std::set<int> wanted(cfg.concat.begin(), cfg.concat.end());
  const int c_max = *wanted.rbegin();
  std::vector<Task> tasks;

  for (double nbar : cfg.nbar) {
    for (double fano : fano_grid(cfg)) {
      // Grid rows: one task per tau, composing the fresh-drive gate up to c_max times.
      for (double tau : cfg.tau) {
        tasks.push_back([&cfg, &wanted, c_max, nbar, fano, tau](std::size_t index) {
          auto start = std::chrono::steady_clock::now();
          const DriveDistribution drive = make_drive(cfg.drive, nbar, fano);
          const QubitChannel gate = build_channel_exact(drive, jc_config(cfg, tau));
          std::vector<SweepRow> rows;
          QubitChannel acc = gate;
          for (int c = 1; c <= c_max; ++c) {
            if (c > 1) acc = compose(gate, acc);
            if (!wanted.count(c)) continue;
            SweepRow row;
            row.mode = SweepMode::Concat;
            row.kind = drive.kind();
            row.nbar = drive.mean();
            row.fano = drive.fano();
            row.tau = tau;
            row.tau_sub = tau;
            row.concat = c;
            fill_metrics(row, acc, cfg, index, rows.size());
            if (c == 1) row.asymptote = single_gate_asymptote(drive, tau);
            row.energy = c * drive.mean() * cfg.carrier;
            row.runtime_ms = elapsed_ms(start);
            start = std::chrono::steady_clock::now();
            rows.push_back(row);
          }
          return rows;
        });
      }
      // Fixed cumulative time C tau.
      for (double ctau : cfg.ctau) {
        tasks.push_back([&cfg, &wanted, nbar, fano, ctau](std::size_t index) {
          const DriveDistribution drive = make_drive(cfg.drive, nbar, fano);
          std::vector<SweepRow> rows;
          for (int c : wanted) {
            const auto start = std::chrono::steady_clock::now();
            const double tau = ctau / c;
            const QubitChannel total = power(build_channel_exact(drive, jc_config(cfg, tau)), c);
            SweepRow row;
            row.mode = SweepMode::Concat;
            row.kind = drive.kind();
            row.nbar = drive.mean();
            row.fano = drive.fano();
            row.tau = tau;
            row.tau_sub = tau;
            row.concat = c;
            row.ctau = ctau;
            fill_metrics(row, total, cfg, index, rows.size());
            if (c == 1) row.asymptote = single_gate_asymptote(drive, tau);
            row.energy = c * drive.mean() * cfg.carrier;
            row.runtime_ms = elapsed_ms(start);
            rows.push_back(row);
          }
          return rows;
        });
      }
    }
  }
  return {cfg, run_tasks(tasks, cfg.jobs)};
}

SweepResult run_split(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<Task> tasks;
  for (SplitConvention conv : cfg.split_conventions) {
    for (double budget : cfg.nbar) {
      for (double fano : fano_grid(cfg)) {
        for (double tau : cfg.tau) {
          for (int c : cfg.concat) {
            if (budget / c < 1.0) {
              throw Error(ErrorCode::BudgetTooSmall,
                          "photon budget " + format_number(budget) + " split over " +
                              std::to_string(c) + " gates leaves fewer than 1 photon per gate");
            }
            tasks.push_back([&cfg, conv, budget, fano, tau, c](std::size_t index) {
              const auto start = std::chrono::steady_clock::now();
              const double per_gate = budget / c;
              const DriveDistribution drive = make_drive(cfg.drive, per_gate, fano);
              const double tau_sub = conv == SplitConvention::PerPulse
                                         ? tau / c
                                         : tau / (c * std::sqrt(static_cast<double>(c)));
              const QubitChannel total = power(build_channel_exact(drive, jc_config(cfg, tau_sub)), c);
              SweepRow row;
              row.mode = SweepMode::Split;
              row.kind = drive.kind();
              row.nbar = budget;
              row.fano = drive.fano();
              row.tau = tau;
              row.tau_sub = tau_sub;
              row.concat = c;
              row.convention = conv;
              fill_metrics(row, total, cfg, index, 0);
              if (c == 1) row.asymptote = single_gate_asymptote(drive, tau);
              row.energy = c * per_gate * cfg.carrier;
              row.runtime_ms = elapsed_ms(start);
              return std::vector<SweepRow>{row};
            });
          }
        }
      }
    }
  }
  return {cfg, run_tasks(tasks, cfg.jobs)};
}

SweepResult run_sweep(const SweepConfig& cfg) {
  switch (cfg.mode) {
    case SweepMode::Scaling: return run_scaling(cfg);
    case SweepMode::Concat: return run_concat(cfg);
    case SweepMode::Split: return run_split(cfg);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown sweep mode");
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 11);
  return std::string(buf, res.ptr);
}

std::string to_csv(const SweepResult& result) {
  const bool mc = result.config.mc_samples > 0;
  const bool timing = result.config.timing;
  std::ostringstream os;
  os << "mode,kind,nbar,fano,tau,concat,ctau,convention,tau_sub,eigenerror_exact,"
        "eigenerror_bound_lower,eigenerror_bound_upper,asymptote,energy";
  if (mc) os << ",mc_eigenerror,mc_stderr";
  if (timing) os << ",runtime_ms";
  os << '\n';
  for (const SweepRow& r : result.rows) {
    os << to_string(r.mode) << ',' << to_string(r.kind) << ',' << format_number(r.nbar) << ','
       << format_number(r.fano) << ',' << format_number(r.tau) << ',' << r.concat << ','
       << (r.ctau ? format_number(*r.ctau) : "") << ','
       << (r.convention ? std::string(to_string(*r.convention)) : "") << ','
       << format_number(r.tau_sub) << ',' << format_number(r.eigenerror_exact) << ','
       << format_number(r.eigenerror_bound_lower) << ',' << format_number(r.eigenerror_bound_upper)
       << ',' << (r.asymptote ? format_number(*r.asymptote) : "") << ','
       << format_number(r.energy);
    if (mc) {
      os << ',' << (r.mc_eigenerror ? format_number(r.mc_eigenerror->mean) : "") << ','
         << (r.mc_eigenerror ? format_number(r.mc_eigenerror->std_error) : "");
    }
    if (timing) os << ',' << format_number(r.runtime_ms);
    os << '\n';
  }
  return os.str();
}

void write_csv(const SweepResult& result, const std::string& path) {
  write_text_file_atomic(path, to_csv(result));
}

}  // namespace eigenfid
