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

// eigenfid command-line front end. Talks to the library only through the C
// API. Exit codes: 0 success, 1 numerical failure, 2 usage/config error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "eigenfid/eigenfid.h"

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitConfig = 2;

struct Failure {
  ef_status status;
};

bool is_config_status(ef_status s) {
  return s == EF_ERR_CONFIG || s == EF_ERR_SCHEMA || s == EF_ERR_NULL_ARGUMENT;
}

void check(ef_status s) {
  if (s != EF_OK) throw Failure{s};
}

std::string num(double v) { return fmt::format("{:.11e}", v); }

struct StringDeleter {
  void operator()(char* p) const { ef_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("eigenfid");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("%^%l%$: %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("EIGENFID_LOG")) {
    const std::string v = env;
    if (v == "error") spdlog::set_level(spdlog::level::err);
    else if (v == "warn") spdlog::set_level(spdlog::level::warn);
    else if (v == "info") spdlog::set_level(spdlog::level::info);
    else if (v == "debug") spdlog::set_level(spdlog::level::debug);
    else spdlog::warn("ignoring EIGENFID_LOG={} (expected error, warn, info or debug)", v);
  }
}

struct SweepOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  std::optional<std::size_t> mc_samples;
  std::string output;
  std::string sidecar;
  bool timing = false;
};

int run_sweep_command(ef_sweep_mode mode, const SweepOptions& opt) {
  ef_config* raw = nullptr;
  if (opt.config.empty()) {
    check(ef_config_default(mode, &raw));
  } else {
    spdlog::info("loading config {}", opt.config);
    check(ef_config_load(opt.config.c_str(), mode, &raw));
  }
  std::unique_ptr<ef_config, decltype(&ef_config_free)> cfg(raw, ef_config_free);

  // Flags override the config file.
  if (opt.seed) check(ef_config_set_seed(cfg.get(), *opt.seed));
  if (opt.jobs) check(ef_config_set_jobs(cfg.get(), *opt.jobs));
  if (opt.mc_samples) check(ef_config_set_mc_samples(cfg.get(), *opt.mc_samples));
  if (opt.timing) check(ef_config_set_timing(cfg.get(), 1));
  if (!opt.output.empty()) check(ef_config_set_output(cfg.get(), opt.output.c_str()));

  if (spdlog::should_log(spdlog::level::debug)) {
    char* text = nullptr;
    check(ef_config_to_json(cfg.get(), &text));
    OwnedString owned(text);
    spdlog::debug("effective config:\n{}", owned.get());
  }

  ef_sweep* sweep_raw = nullptr;
  check(ef_sweep_run(cfg.get(), &sweep_raw));
  std::unique_ptr<ef_sweep, decltype(&ef_sweep_free)> sweep(sweep_raw, ef_sweep_free);
  std::size_t rows = 0;
  check(ef_sweep_row_count(sweep.get(), &rows));
  spdlog::info("{} rows", rows);

  const std::string output = ef_config_output(cfg.get());
  if (output.empty()) {
    char* csv = nullptr;
    check(ef_sweep_csv(sweep.get(), &csv));
    OwnedString owned(csv);
    std::fputs(owned.get(), stdout);
  } else {
    check(ef_sweep_write_csv(sweep.get(), output.c_str()));
    spdlog::info("wrote {}", output);
  }
  if (!opt.sidecar.empty()) check(ef_sweep_write_sidecar(sweep.get(), opt.sidecar.c_str()));
  return 0;
}

int run_bounds_check(int dim, int trials, std::uint64_t seed) {
  int ok = 0;
  char* summary = nullptr;
  check(ef_bounds_check(dim, trials, seed, &ok, &summary));
  OwnedString owned(summary);
  std::cout << owned.get() << '\n';
  return ok ? 0 : kExitNumeric;
}

int run_qsl(double theta, double nbar, double coupling) {
  double bound = 0.0;
  double small = 0.0;
  check(ef_qsl_eigenerror_bound(theta, nbar, &bound));
  check(ef_qsl_eigenerror_small_angle(theta, nbar, &small));
  std::cout << "qsl_eigenerror_bound " << num(bound) << '\n';
  std::cout << "small_angle_bound " << num(small) << '\n';

  // Speed limits for a coherent drive: MT with the qubit in |0>, ML with the
  // phase-aligned superposition and energies measured from the ground state.
  ef_drive* raw = nullptr;
  check(ef_drive_poisson(nbar, 1e-12, &raw));
  std::unique_ptr<ef_drive, decltype(&ef_drive_free)> drive(raw, ef_drive_free);
  const double ground_qubit[4] = {1.0, 0.0, 0.0, 0.0};
  ef_jc_moments m0{};
  ef_jc_moments aligned{};
  check(ef_jc_moments_compute(drive.get(), ground_qubit, coupling, 1.0, 0, &m0));
  check(ef_jc_moments_compute(drive.get(), nullptr, coupling, 1.0, 0, &aligned));
  double t_mt = 0.0;
  double t_ml = 0.0;
  check(ef_qsl_mt_time(theta, m0.stdev, &t_mt));
  check(ef_qsl_ml_time(theta, aligned.mean - aligned.ground_energy, &t_ml));
  std::cout << "delta_h " << num(m0.stdev) << '\n';
  std::cout << "asymptote " << num(m0.asymptote) << '\n';
  std::cout << "mt_time " << num(t_mt) << '\n';
  std::cout << "ml_time " << num(t_ml) << '\n';
  return 0;
}

int run_inspect(const std::string& path, const std::string& dump) {
  char* report = nullptr;
  check(ef_inspect_file(path.c_str(), dump.empty() ? nullptr : dump.c_str(), &report));
  OwnedString owned(report);
  std::cout << owned.get();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Eigenfidelity bounds and Jaynes-Cummings gate sweeps", "eigenfid"};
  app.set_version_flag("--version", std::string(ef_version()));
  app.require_subcommand(1);

  SweepOptions sweep_opt;
  auto add_sweep = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", sweep_opt.config, "JSON config (schema 1)")->check(CLI::ExistingFile);
    sub->add_option("--seed", sweep_opt.seed, "Monte Carlo seed");
    sub->add_option("--jobs", sweep_opt.jobs, "worker threads (default 1)")->check(CLI::PositiveNumber);
    sub->add_option("--mc-samples", sweep_opt.mc_samples, "Haar samples per row for the MC columns");
    sub->add_option("-o,--output", sweep_opt.output, "CSV path (stdout if omitted)");
    sub->add_option("--sidecar", sweep_opt.sidecar, "JSON sidecar path");
    sub->add_flag("--timing", sweep_opt.timing, "add a runtime_ms column");
    return sub;
  };
  CLI::App* scaling = add_sweep("scaling", "eigenerror versus drive photon number and Fano factor");
  CLI::App* concat = add_sweep("concat", "repeated gates, each with a fresh drive");
  CLI::App* split = add_sweep("split", "fixed photon budget split over C shorter gates");

  int dim = 0;
  int trials = 1000;
  std::uint64_t bc_seed = 1;
  CLI::App* bounds = app.add_subcommand("bounds-check", "randomized check of the state inequality chains");
  bounds->add_option("--dim", dim, "matrix dimension (0 cycles through 2..8)");
  bounds->add_option("--trials", trials, "random density matrices");
  bounds->add_option("--seed", bc_seed, "seed");

  double theta = 0.0;
  double nbar = 0.0;
  double coupling = 1.0;
  CLI::App* qsl = app.add_subcommand("qsl", "speed-limit eigenerror bound for a coherent drive");
  qsl->add_option("--theta", theta, "rotation angle in [0, pi/2]")->required();
  qsl->add_option("--nbar", nbar, "mean photon number")->required();
  qsl->add_option("--coupling", coupling, "g in rad/s");

  std::string inspect_path;
  std::string dump_path;
  CLI::App* inspect = app.add_subcommand("inspect", "diagnostics for a state or channel JSON file");
  inspect->add_option("file", inspect_path, "state or channel file")->required();
  inspect->add_option("--dump", dump_path, "write the parsed object back as canonical JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (scaling->parsed()) return run_sweep_command(EF_SWEEP_SCALING, sweep_opt);
    if (concat->parsed()) return run_sweep_command(EF_SWEEP_CONCAT, sweep_opt);
    if (split->parsed()) return run_sweep_command(EF_SWEEP_SPLIT, sweep_opt);
    if (bounds->parsed()) return run_bounds_check(dim, trials, bc_seed);
    if (qsl->parsed()) return run_qsl(theta, nbar, coupling);
    if (inspect->parsed()) return run_inspect(inspect_path, dump_path);
  } catch (const Failure& f) {
    spdlog::error("{}: {}", ef_status_name(f.status), ef_last_error());
    return is_config_status(f.status) ? kExitConfig : kExitNumeric;
  }
  return kExitConfig;
}
