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

#include "eigenfid/eigenfid.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "eigenfid/channel.hpp"
#include "eigenfid/diagnostics.hpp"
#include "eigenfid/error.hpp"
#include "eigenfid/experiments.hpp"
#include "eigenfid/io.hpp"
#include "eigenfid/jcdrive.hpp"
#include "eigenfid/qsl.hpp"

using namespace eigenfid;

struct ef_state {
  DensityMatrix rho;
};
struct ef_channel {
  QubitChannel ch;
};
struct ef_drive {
  DriveDistribution d;
};
struct ef_config {
  SweepConfig cfg;
};
struct ef_sweep {
  SweepResult result;
};

namespace {

thread_local std::string g_last_error;

struct NullArgument {
  const char* name;
};

template <class T>
void require(const T* p, const char* name) {
  if (p == nullptr) throw NullArgument{name};
}

ef_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonHermitianInput: return EF_ERR_NON_HERMITIAN;
    case ErrorCode::NotDensityMatrix: return EF_ERR_NOT_DENSITY_MATRIX;
    case ErrorCode::DimensionMismatch: return EF_ERR_DIMENSION_MISMATCH;
    case ErrorCode::InvalidOrder: return EF_ERR_INVALID_ORDER;
    case ErrorCode::InvalidDimension: return EF_ERR_INVALID_DIMENSION;
    case ErrorCode::InvalidArgument: return EF_ERR_INVALID_ARGUMENT;
    case ErrorCode::CPViolation: return EF_ERR_CP_VIOLATION;
    case ErrorCode::InvalidChannel: return EF_ERR_INVALID_CHANNEL;
    case ErrorCode::InvalidMean: return EF_ERR_INVALID_MEAN;
    case ErrorCode::UnsupportedParameters: return EF_ERR_UNSUPPORTED_PARAMETERS;
    case ErrorCode::TruncationError: return EF_ERR_TRUNCATION;
    case ErrorCode::ApproximationDomain: return EF_ERR_APPROXIMATION_DOMAIN;
    case ErrorCode::NonpositiveMeanEnergy: return EF_ERR_NONPOSITIVE_MEAN_ENERGY;
    case ErrorCode::BudgetTooSmall: return EF_ERR_BUDGET_TOO_SMALL;
    case ErrorCode::ConfigError: return EF_ERR_CONFIG;
    case ErrorCode::SchemaError: return EF_ERR_SCHEMA;
    case ErrorCode::IOError: return EF_ERR_IO;
  }
  return EF_ERR_INTERNAL;
}

template <class F>
ef_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return EF_OK;
  } catch (const NullArgument& e) {
    g_last_error = std::string("null argument: ") + e.name;
    return EF_ERR_NULL_ARGUMENT;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return EF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EF_ERR_INTERNAL;
  }
}

CMatrix read_matrix(int rows, int cols, const double* p) {
  CMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int k = 2 * (r * cols + c);
      m(r, c) = cplx(p[k], p[k + 1]);
    }
  return m;
}

void write_matrix(const CMatrix& m, double* p) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Eigen::Index k = 2 * (r * m.cols() + c);
      p[k] = m(r, c).real();
      p[k + 1] = m(r, c).imag();
    }
}

CVector read_vector(int n, const double* p) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx(p[2 * i], p[2 * i + 1]);
  return v;
}

void check_dim(int dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidDimension, "dimension must be >= 1");
}

EnergyBasis energy_basis(int dim, const double* energies) {
  RVector e(dim);
  for (int i = 0; i < dim; ++i) e[i] = energies[i];
  return EnergyBasis::canonical(e);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

DriveKind to_kind(ef_drive_kind k) {
  switch (k) {
    case EF_DRIVE_POISSON: return DriveKind::Poisson;
    case EF_DRIVE_BINOMIAL: return DriveKind::Binomial;
    case EF_DRIVE_FOCK: return DriveKind::Fock;
    case EF_DRIVE_CUSTOM: return DriveKind::Custom;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown drive kind");
}

SweepMode to_mode(ef_sweep_mode m) {
  switch (m) {
    case EF_SWEEP_SCALING: return SweepMode::Scaling;
    case EF_SWEEP_CONCAT: return SweepMode::Concat;
    case EF_SWEEP_SPLIT: return SweepMode::Split;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown sweep mode");
}

JCConfig jc(double coupling, double tau) {
  JCConfig c;
  c.coupling = coupling;
  c.tau = tau;
  return c;
}

}  // namespace

extern "C" {

const char* ef_version(void) { return version_string(); }

const char* ef_status_name(ef_status status) {
  switch (status) {
    case EF_OK: return "ok";
    case EF_ERR_NON_HERMITIAN: return "NonHermitianInput";
    case EF_ERR_NOT_DENSITY_MATRIX: return "NotDensityMatrix";
    case EF_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case EF_ERR_INVALID_ORDER: return "InvalidOrder";
    case EF_ERR_INVALID_DIMENSION: return "InvalidDimension";
    case EF_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case EF_ERR_CP_VIOLATION: return "CPViolation";
    case EF_ERR_INVALID_CHANNEL: return "InvalidChannel";
    case EF_ERR_INVALID_MEAN: return "InvalidMean";
    case EF_ERR_UNSUPPORTED_PARAMETERS: return "UnsupportedParameters";
    case EF_ERR_TRUNCATION: return "TruncationError";
    case EF_ERR_APPROXIMATION_DOMAIN: return "ApproximationDomain";
    case EF_ERR_NONPOSITIVE_MEAN_ENERGY: return "NonpositiveMeanEnergy";
    case EF_ERR_BUDGET_TOO_SMALL: return "BudgetTooSmall";
    case EF_ERR_CONFIG: return "ConfigError";
    case EF_ERR_SCHEMA: return "SchemaError";
    case EF_ERR_IO: return "IOError";
    case EF_ERR_NULL_ARGUMENT: return "NullArgument";
    case EF_ERR_INTERNAL: return "InternalError";
  }
  return "unknown";
}

const char* ef_last_error(void) { return g_last_error.c_str(); }

void ef_string_free(char* s) { std::free(s); }

// ---- states

ef_status ef_state_from_matrix(int dim, const double* entries, ef_state** out) {
  return guarded([&] {
    require(entries, "entries");
    require(out, "out");
    check_dim(dim);
    *out = new ef_state{DensityMatrix(read_matrix(dim, dim, entries))};
  });
}

ef_status ef_state_from_pure(int dim, const double* amplitudes, ef_state** out) {
  return guarded([&] {
    require(amplitudes, "amplitudes");
    require(out, "out");
    check_dim(dim);
    *out = new ef_state{DensityMatrix::from_pure(PureState(read_vector(dim, amplitudes)))};
  });
}

void ef_state_free(ef_state* s) { delete s; }

ef_status ef_state_dim(const ef_state* s, int* dim) {
  return guarded([&] {
    require(s, "state");
    require(dim, "dim");
    *dim = s->rho.dim();
  });
}

ef_status ef_state_matrix(const ef_state* s, double* entries) {
  return guarded([&] {
    require(s, "state");
    require(entries, "entries");
    write_matrix(s->rho.matrix(), entries);
  });
}

ef_status ef_state_eigenfidelity(const ef_state* s, double* value, double* closest) {
  return guarded([&] {
    require(s, "state");
    require(value, "value");
    const Eigenfidelity r = eigenfidelity(s->rho);
    *value = r.value;
    if (closest != nullptr) write_matrix(r.closest.amplitudes(), closest);
  });
}

ef_status ef_state_fidelity_to_pure(const ef_state* s, const double* amplitudes, double* value) {
  return guarded([&] {
    require(s, "state");
    require(amplitudes, "amplitudes");
    require(value, "value");
    *value = fidelity_to_pure(s->rho, PureState(read_vector(s->rho.dim(), amplitudes)));
  });
}

ef_status ef_state_schatten_norm(const ef_state* s, double p, double* value) {
  return guarded([&] {
    require(s, "state");
    require(value, "value");
    *value = schatten_norm(s->rho, p);
  });
}

ef_status ef_state_purity(const ef_state* s, double* purity_out, double* linear_entropy_out) {
  return guarded([&] {
    require(s, "state");
    const double g = purity(s->rho);
    if (purity_out != nullptr) *purity_out = g;
    if (linear_entropy_out != nullptr) *linear_entropy_out = 1.0 - g;
  });
}

ef_status ef_state_eigenfidelity_bounds(const ef_state* s, double* lower, double* upper) {
  return guarded([&] {
    require(s, "state");
    require(lower, "lower");
    require(upper, "upper");
    const Interval b = eigenfidelity_bounds(s->rho);
    *lower = b.lower;
    *upper = b.upper;
  });
}

ef_status ef_state_passive(const ef_state* s, const double* energies, ef_state** out) {
  return guarded([&] {
    require(s, "state");
    require(energies, "energies");
    require(out, "out");
    *out = new ef_state{passive_state(s->rho, energy_basis(s->rho.dim(), energies))};
  });
}

ef_status ef_state_effective_temperature(const ef_state* s, const double* energies,
                                         double* temperature) {
  return guarded([&] {
    require(s, "state");
    require(energies, "energies");
    require(temperature, "temperature");
    *temperature = effective_temperature(s->rho, energy_basis(s->rho.dim(), energies));
  });
}

// ---- channels

ef_status ef_channel_from_images(const double* images, ef_channel** out) {
  return guarded([&] {
    require(images, "images");
    require(out, "out");
    *out = new ef_channel{QubitChannel(read_matrix(2, 2, images), read_matrix(2, 2, images + 8),
                                       read_matrix(2, 2, images + 16), read_matrix(2, 2, images + 24))};
  });
}

ef_status ef_channel_identity(ef_channel** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ef_channel{QubitChannel::identity()};
  });
}

ef_status ef_channel_depolarizing(ef_channel** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ef_channel{QubitChannel::depolarizing()};
  });
}

ef_status ef_channel_unitary(const double* gate, ef_channel** out) {
  return guarded([&] {
    require(gate, "gate");
    require(out, "out");
    *out = new ef_channel{QubitChannel::unitary(TargetGate(read_matrix(2, 2, gate)))};
  });
}

void ef_channel_free(ef_channel* c) { delete c; }

ef_status ef_channel_images(const ef_channel* c, double* images) {
  return guarded([&] {
    require(c, "channel");
    require(images, "images");
    for (int k = 0; k < 4; ++k) write_matrix(c->ch.image(k / 2, k % 2), images + 8 * k);
  });
}

ef_status ef_channel_apply(const ef_channel* c, const ef_state* rho, ef_state** out) {
  return guarded([&] {
    require(c, "channel");
    require(rho, "state");
    require(out, "out");
    *out = new ef_state{apply(c->ch, rho->rho)};
  });
}

ef_status ef_channel_compose(const ef_channel* outer, const ef_channel* inner, ef_channel** out) {
  return guarded([&] {
    require(outer, "outer");
    require(inner, "inner");
    require(out, "out");
    *out = new ef_channel{compose(outer->ch, inner->ch)};
  });
}

ef_status ef_channel_power(const ef_channel* c, int times, ef_channel** out) {
  return guarded([&] {
    require(c, "channel");
    require(out, "out");
    *out = new ef_channel{power(c->ch, times)};
  });
}

ef_status ef_channel_average_purity(const ef_channel* c, double* value) {
  return guarded([&] {
    require(c, "channel");
    require(value, "value");
    *value = average_purity(c->ch);
  });
}

ef_status ef_channel_eigenfidelity_bounds(const ef_channel* c, double* lower, double* upper) {
  return guarded([&] {
    require(c, "channel");
    require(lower, "lower");
    require(upper, "upper");
    const Interval b = channel_eigenfidelity_bounds(c->ch);
    *lower = b.lower;
    *upper = b.upper;
  });
}

ef_status ef_channel_eigenerror_bounds(const ef_channel* c, double* lower, double* upper) {
  return guarded([&] {
    require(c, "channel");
    require(lower, "lower");
    require(upper, "upper");
    const Interval b = channel_eigenerror_bounds(c->ch);
    *lower = b.lower;
    *upper = b.upper;
  });
}

ef_status ef_channel_eigenfidelity(const ef_channel* c, double* value) {
  return guarded([&] {
    require(c, "channel");
    require(value, "value");
    *value = channel_eigenfidelity(c->ch);
  });
}

ef_status ef_channel_eigenfidelity_mc(const ef_channel* c, uint64_t seed, size_t samples,
                                      double* mean, double* std_error) {
  return guarded([&] {
    require(c, "channel");
    require(mean, "mean");
    SeededSampler sampler(seed, 2);
    const McEstimate est = channel_eigenfidelity_mc(c->ch, sampler, samples);
    *mean = est.mean;
    if (std_error != nullptr) *std_error = est.std_error;
  });
}

ef_status ef_channel_average_gate_fidelity(const ef_channel* c, const double* gate, double* value) {
  return guarded([&] {
    require(c, "channel");
    require(gate, "gate");
    require(value, "value");
    *value = average_gate_fidelity(c->ch, TargetGate(read_matrix(2, 2, gate)));
  });
}

ef_status ef_channel_choi(const ef_channel* c, const double* gate, double* choi) {
  return guarded([&] {
    require(c, "channel");
    require(gate, "gate");
    require(choi, "choi");
    write_matrix(choi_matrix(c->ch, TargetGate(read_matrix(2, 2, gate))).entries, choi);
  });
}

ef_status ef_channel_residuals(const ef_channel* c, double* tp_residual, double* cp_min_eigenvalue) {
  return guarded([&] {
    require(c, "channel");
    if (tp_residual != nullptr) *tp_residual = c->ch.tp_residual();
    if (cp_min_eigenvalue != nullptr) *cp_min_eigenvalue = c->ch.cp_min_eigenvalue();
  });
}

ef_status ef_a_matrix(double* out) {
  return guarded([&] {
    require(out, "out");
    const Eigen::Matrix4d a = a_matrix();
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) out[4 * r + c] = a(r, c);
  });
}

// ---- drives

ef_status ef_drive_poisson(double mean, double tail_tol, ef_drive** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ef_drive{poisson_drive(mean, tail_tol)};
  });
}

ef_status ef_drive_binomial(double mean, double variance, int literal, ef_drive** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ef_drive{binomial_drive(
        mean, variance, literal != 0 ? BinomialMode::Literal : BinomialMode::MomentMatched)};
  });
}

ef_status ef_drive_fock(int n, ef_drive** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ef_drive{fock_drive(n)};
  });
}

ef_status ef_drive_custom(int n_min, int count, const double* coefficients, ef_drive** out) {
  return guarded([&] {
    require(coefficients, "coefficients");
    require(out, "out");
    if (count < 1) throw Error(ErrorCode::InvalidArgument, "custom drive needs count >= 1");
    *out = new ef_drive{DriveDistribution::custom(n_min, read_vector(count, coefficients))};
  });
}

void ef_drive_free(ef_drive* d) { delete d; }

ef_status ef_drive_get_info(const ef_drive* d, ef_drive_info* info) {
  return guarded([&] {
    require(d, "drive");
    require(info, "info");
    info->kind = static_cast<ef_drive_kind>(static_cast<int>(d->d.kind()));
    info->mean = d->d.mean();
    info->variance = d->d.variance();
    info->n_min = d->d.n_min();
    info->n_max = d->d.n_max();
    info->realized_mean = d->d.realized_mean();
    info->realized_variance = d->d.realized_variance();
    info->moments_consistent = d->d.moments_consistent() ? 1 : 0;
  });
}

ef_status ef_jc_channel_exact(const ef_drive* d, double coupling, double tau, ef_channel** out) {
  return guarded([&] {
    require(d, "drive");
    require(out, "out");
    *out = new ef_channel{build_channel_exact(d->d, jc(coupling, tau))};
  });
}

ef_status ef_jc_channel_taylor2(double mean, double variance, ef_drive_kind kind, double tau,
                                ef_channel** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ef_channel{build_channel_taylor2(mean, variance, to_kind(kind), jc(1.0, tau))};
  });
}

ef_status ef_jc_asymptotic_eigenerror(ef_drive_kind kind, double mean, double variance, double tau,
                                      double* value) {
  return guarded([&] {
    require(value, "value");
    *value = asymptotic_eigenerror_lower_bound(to_kind(kind), mean, variance, tau);
  });
}

ef_status ef_jc_evolve_reduced(const ef_drive* d, const double* qubit, double coupling, double tau,
                               ef_state** out) {
  return guarded([&] {
    require(d, "drive");
    require(qubit, "qubit");
    require(out, "out");
    const BipartiteState psi = evolve_bipartite(d->d, PureState(read_vector(2, qubit)), jc(coupling, tau));
    *out = new ef_state{psi.reduced_qubit()};
  });
}

// ---- speed limits

ef_status ef_qsl_mt_time(double theta, double stdev, double* time) {
  return guarded([&] {
    require(time, "time");
    *time = mt_time(RotationTarget(theta), HamiltonianMoments{0.0, stdev});
  });
}

ef_status ef_qsl_ml_time(double theta, double mean_above_ground, double* time) {
  return guarded([&] {
    require(time, "time");
    *time = ml_time(RotationTarget(theta), HamiltonianMoments{mean_above_ground, 0.0});
  });
}

ef_status ef_jc_moments_compute(const ef_drive* d, const double* qubit, double coupling,
                                double carrier, int lab, ef_jc_moments* out) {
  return guarded([&] {
    require(d, "drive");
    require(out, "out");
    JCConfig cfg = jc(coupling, 0.0);
    cfg.carrier = carrier;
    const PureState q = qubit != nullptr ? PureState(read_vector(2, qubit)) : phase_aligned_qubit(d->d);
    const JCMoments m = jc_moments(d->d, q, cfg, lab != 0 ? Frame::Lab : Frame::Rotating);
    out->mean = m.moments.mean;
    out->stdev = m.moments.stdev;
    out->ground_energy = m.ground_energy;
    out->asymptote = m.asymptote;
  });
}

ef_status ef_qsl_bipartite_angle(double theta, double drive_overlap, double* angle) {
  return guarded([&] {
    require(angle, "angle");
    *angle = bipartite_angle(theta, drive_overlap);
  });
}

ef_status ef_qsl_eigenerror_bound(double theta, double mean, double* value) {
  return guarded([&] {
    require(value, "value");
    *value = qsl_eigenerror_bound(theta, mean);
  });
}

ef_status ef_qsl_eigenerror_small_angle(double theta, double mean, double* value) {
  return guarded([&] {
    require(value, "value");
    *value = qsl_eigenerror_small_angle(theta, mean);
  });
}

ef_status ef_qsl_photons_for_eigenerror(double theta, double eigenerror, double* mean) {
  return guarded([&] {
    require(mean, "mean");
    *mean = photons_for_eigenerror(theta, eigenerror);
  });
}

// ---- sweeps

ef_status ef_config_default(ef_sweep_mode mode, ef_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ef_config{default_config(to_mode(mode))};
  });
}

ef_status ef_config_parse(const char* json_text, ef_sweep_mode mode, ef_config** out) {
  return guarded([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = new ef_config{parse_sweep_config(json_text, to_mode(mode))};
  });
}

ef_status ef_config_load(const char* path, ef_sweep_mode mode, ef_config** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new ef_config{load_sweep_config(path, to_mode(mode))};
  });
}

void ef_config_free(ef_config* c) { delete c; }

ef_status ef_config_set_seed(ef_config* c, uint64_t seed) {
  return guarded([&] {
    require(c, "config");
    c->cfg.seed = seed;
  });
}

ef_status ef_config_set_jobs(ef_config* c, int jobs) {
  return guarded([&] {
    require(c, "config");
    if (jobs < 1) throw Error(ErrorCode::ConfigError, "--jobs: must be >= 1");
    c->cfg.jobs = jobs;
  });
}

ef_status ef_config_set_mc_samples(ef_config* c, size_t samples) {
  return guarded([&] {
    require(c, "config");
    if (samples == 1) throw Error(ErrorCode::ConfigError, "--mc-samples: must be 0 (off) or >= 2");
    c->cfg.mc_samples = samples;
  });
}

ef_status ef_config_set_timing(ef_config* c, int enabled) {
  return guarded([&] {
    require(c, "config");
    c->cfg.timing = enabled != 0;
  });
}

ef_status ef_config_set_output(ef_config* c, const char* path) {
  return guarded([&] {
    require(c, "config");
    require(path, "path");
    c->cfg.output = path;
  });
}

const char* ef_config_output(const ef_config* c) { return c != nullptr ? c->cfg.output.c_str() : ""; }

ef_status ef_config_to_json(const ef_config* c, char** json_text) {
  return guarded([&] {
    require(c, "config");
    require(json_text, "json_text");
    *json_text = copy_string(sweep_config_to_json(c->cfg));
  });
}

ef_status ef_sweep_run(const ef_config* c, ef_sweep** out) {
  return guarded([&] {
    require(c, "config");
    require(out, "out");
    *out = new ef_sweep{run_sweep(c->cfg)};
  });
}

void ef_sweep_free(ef_sweep* s) { delete s; }

ef_status ef_sweep_row_count(const ef_sweep* s, size_t* rows) {
  return guarded([&] {
    require(s, "sweep");
    require(rows, "rows");
    *rows = s->result.rows.size();
  });
}

ef_status ef_sweep_csv(const ef_sweep* s, char** csv_text) {
  return guarded([&] {
    require(s, "sweep");
    require(csv_text, "csv_text");
    *csv_text = copy_string(to_csv(s->result));
  });
}

ef_status ef_sweep_write_csv(const ef_sweep* s, const char* path) {
  return guarded([&] {
    require(s, "sweep");
    require(path, "path");
    write_csv(s->result, path);
  });
}

ef_status ef_sweep_write_sidecar(const ef_sweep* s, const char* path) {
  return guarded([&] {
    require(s, "sweep");
    require(path, "path");
    write_sidecar(s->result, path);
  });
}

// ---- diagnostics

ef_status ef_bounds_check(int dim, int trials, uint64_t seed, int* all_ok, char** summary) {
  return guarded([&] {
    require(all_ok, "all_ok");
    BoundsCheckOptions opt;
    opt.dim = dim;
    opt.trials = trials;
    opt.seed = seed;
    const BoundsCheckReport rep = run_bounds_check(opt);
    *all_ok = rep.ok() ? 1 : 0;
    if (summary != nullptr) *summary = copy_string(rep.summary());
  });
}

ef_status ef_inspect_file(const char* path, const char* dump_path, char** report) {
  return guarded([&] {
    require(path, "path");
    require(report, "report");
    const LoadedObject obj = load_object(path);
    std::string text = inspect_report(obj);
    if (dump_path != nullptr) write_text_file_atomic(dump_path, dump_object(obj));
    *report = copy_string(text);
  });
}

}  // extern "C"
