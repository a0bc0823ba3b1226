/* Copyright 2026 The eigenfid Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libeigenfid.
 *
 * Every call returns an ef_status; EF_OK is 0. On failure ef_last_error()
 * returns the message of the most recent error on the calling thread.
 * Objects are opaque handles released with the matching *_free function;
 * passing NULL to a *_free function is a no-op.
 *
 * Complex numbers cross the boundary as interleaved (re, im) doubles;
 * matrices are row-major. A d x d matrix therefore occupies 2*d*d doubles
 * and a qubit channel (E00, E01, E10, E11) 32 doubles.
 */

#ifndef EIGENFID_EIGENFID_H_
#define EIGENFID_EIGENFID_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EF_API __declspec(dllexport)
#else
#define EF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ef_status {
  EF_OK = 0,
  EF_ERR_NON_HERMITIAN = 1,
  EF_ERR_NOT_DENSITY_MATRIX = 2,
  EF_ERR_DIMENSION_MISMATCH = 3,
  EF_ERR_INVALID_ORDER = 4,
  EF_ERR_INVALID_DIMENSION = 5,
  EF_ERR_INVALID_ARGUMENT = 6,
  EF_ERR_CP_VIOLATION = 7,
  EF_ERR_INVALID_CHANNEL = 8,
  EF_ERR_INVALID_MEAN = 9,
  EF_ERR_UNSUPPORTED_PARAMETERS = 10,
  EF_ERR_TRUNCATION = 11,
  EF_ERR_APPROXIMATION_DOMAIN = 12,
  EF_ERR_NONPOSITIVE_MEAN_ENERGY = 13,
  EF_ERR_BUDGET_TOO_SMALL = 14,
  EF_ERR_CONFIG = 15,
  EF_ERR_SCHEMA = 16,
  EF_ERR_IO = 17,
  EF_ERR_NULL_ARGUMENT = 18,
  EF_ERR_INTERNAL = 99
} ef_status;

typedef enum ef_drive_kind {
  EF_DRIVE_POISSON = 0,
  EF_DRIVE_BINOMIAL = 1,
  EF_DRIVE_FOCK = 2,
  EF_DRIVE_CUSTOM = 3
} ef_drive_kind;

typedef enum ef_sweep_mode { EF_SWEEP_SCALING = 0, EF_SWEEP_CONCAT = 1, EF_SWEEP_SPLIT = 2 } ef_sweep_mode;

typedef struct ef_state ef_state;
typedef struct ef_channel ef_channel;
typedef struct ef_drive ef_drive;
typedef struct ef_config ef_config;
typedef struct ef_sweep ef_sweep;

EF_API const char* ef_version(void);
EF_API const char* ef_status_name(ef_status status);
/* Message of the last failed call on this thread ("" if none). */
EF_API const char* ef_last_error(void);
/* Releases strings returned through char** out-parameters. */
EF_API void ef_string_free(char* s);

/* ---- states ---------------------------------------------------------- */

EF_API ef_status ef_state_from_matrix(int dim, const double* entries, ef_state** out);
EF_API ef_status ef_state_from_pure(int dim, const double* amplitudes, ef_state** out);
EF_API void ef_state_free(ef_state* s);
EF_API ef_status ef_state_dim(const ef_state* s, int* dim);
/* 2*dim*dim doubles. */
EF_API ef_status ef_state_matrix(const ef_state* s, double* entries);
/* closest: 2*dim doubles, may be NULL. */
EF_API ef_status ef_state_eigenfidelity(const ef_state* s, double* value, double* closest);
EF_API ef_status ef_state_fidelity_to_pure(const ef_state* s, const double* amplitudes, double* value);
EF_API ef_status ef_state_schatten_norm(const ef_state* s, double p, double* value);
EF_API ef_status ef_state_purity(const ef_state* s, double* purity, double* linear_entropy);
EF_API ef_status ef_state_eigenfidelity_bounds(const ef_state* s, double* lower, double* upper);
/* energies: dim strictly increasing values, computational eigenbasis. */
EF_API ef_status ef_state_passive(const ef_state* s, const double* energies, ef_state** out);
EF_API ef_status ef_state_effective_temperature(const ef_state* s, const double* energies,
                                                double* temperature);

/* ---- qubit channels -------------------------------------------------- */

/* images: 32 doubles, E00 E01 E10 E11. */
EF_API ef_status ef_channel_from_images(const double* images, ef_channel** out);
EF_API ef_status ef_channel_identity(ef_channel** out);
EF_API ef_status ef_channel_depolarizing(ef_channel** out);
/* gate: 2x2 unitary, 8 doubles. */
EF_API ef_status ef_channel_unitary(const double* gate, ef_channel** out);
EF_API void ef_channel_free(ef_channel* c);
EF_API ef_status ef_channel_images(const ef_channel* c, double* images);
EF_API ef_status ef_channel_apply(const ef_channel* c, const ef_state* rho, ef_state** out);
EF_API ef_status ef_channel_compose(const ef_channel* outer, const ef_channel* inner, ef_channel** out);
EF_API ef_status ef_channel_power(const ef_channel* c, int times, ef_channel** out);
EF_API ef_status ef_channel_average_purity(const ef_channel* c, double* value);
EF_API ef_status ef_channel_eigenfidelity_bounds(const ef_channel* c, double* lower, double* upper);
EF_API ef_status ef_channel_eigenerror_bounds(const ef_channel* c, double* lower, double* upper);
/* Deterministic Bloch-sphere quadrature of the Haar-averaged eigenfidelity. */
EF_API ef_status ef_channel_eigenfidelity(const ef_channel* c, double* value);
EF_API ef_status ef_channel_eigenfidelity_mc(const ef_channel* c, uint64_t seed, size_t samples,
                                             double* mean, double* std_error);
EF_API ef_status ef_channel_average_gate_fidelity(const ef_channel* c, const double* gate,
                                                  double* value);
/* choi: 32 doubles (4x4). */
EF_API ef_status ef_channel_choi(const ef_channel* c, const double* gate, double* choi);
EF_API ef_status ef_channel_residuals(const ef_channel* c, double* tp_residual, double* cp_min_eigenvalue);
/* 16 doubles. */
EF_API ef_status ef_a_matrix(double* out);

/* ---- JC drives ------------------------------------------------------- */

typedef struct ef_drive_info {
  ef_drive_kind kind;
  double mean;
  double variance;
  int n_min;
  int n_max;
  double realized_mean;
  double realized_variance;
  int moments_consistent;
} ef_drive_info;

EF_API ef_status ef_drive_poisson(double mean, double tail_tol, ef_drive** out);
/* literal != 0 selects N = 2 var with offset k_n = n - (mean - N). */
EF_API ef_status ef_drive_binomial(double mean, double variance, int literal, ef_drive** out);
EF_API ef_status ef_drive_fock(int n, ef_drive** out);
EF_API ef_status ef_drive_custom(int n_min, int count, const double* coefficients, ef_drive** out);
EF_API void ef_drive_free(ef_drive* d);
EF_API ef_status ef_drive_get_info(const ef_drive* d, ef_drive_info* info);

EF_API ef_status ef_jc_channel_exact(const ef_drive* d, double coupling, double tau, ef_channel** out);
EF_API ef_status ef_jc_channel_taylor2(double mean, double variance, ef_drive_kind kind, double tau,
                                       ef_channel** out);
EF_API ef_status ef_jc_asymptotic_eigenerror(ef_drive_kind kind, double mean, double variance,
                                             double tau, double* value);
/* Joint evolution of drive (x) qubit, traced over the drive. qubit: 4 doubles. */
EF_API ef_status ef_jc_evolve_reduced(const ef_drive* d, const double* qubit, double coupling,
                                      double tau, ef_state** out);

/* ---- speed limits ---------------------------------------------------- */

typedef struct ef_jc_moments {
  double mean;
  double stdev;
  double ground_energy;
  double asymptote;
} ef_jc_moments;

EF_API ef_status ef_qsl_mt_time(double theta, double stdev, double* time);
EF_API ef_status ef_qsl_ml_time(double theta, double mean_above_ground, double* time);
/* qubit: 4 doubles, or NULL for the phase-aligned superposition. lab != 0
 * adds the free energy with carrier frequency `carrier`. */
EF_API ef_status ef_jc_moments_compute(const ef_drive* d, const double* qubit, double coupling,
                                       double carrier, int lab, ef_jc_moments* out);
EF_API ef_status ef_qsl_bipartite_angle(double theta, double drive_overlap, double* angle);
EF_API ef_status ef_qsl_eigenerror_bound(double theta, double mean, double* value);
EF_API ef_status ef_qsl_eigenerror_small_angle(double theta, double mean, double* value);
EF_API ef_status ef_qsl_photons_for_eigenerror(double theta, double eigenerror, double* mean);

/* ---- sweeps ---------------------------------------------------------- */

/* Reference sweep for each mode. */
EF_API ef_status ef_config_default(ef_sweep_mode mode, ef_config** out);
EF_API ef_status ef_config_parse(const char* json_text, ef_sweep_mode mode, ef_config** out);
EF_API ef_status ef_config_load(const char* path, ef_sweep_mode mode, ef_config** out);
EF_API void ef_config_free(ef_config* c);
EF_API ef_status ef_config_set_seed(ef_config* c, uint64_t seed);
EF_API ef_status ef_config_set_jobs(ef_config* c, int jobs);
EF_API ef_status ef_config_set_mc_samples(ef_config* c, size_t samples);
EF_API ef_status ef_config_set_timing(ef_config* c, int enabled);
EF_API ef_status ef_config_set_output(ef_config* c, const char* path);
/* Output path from the config, "" if unset. Valid until the next call on c. */
EF_API const char* ef_config_output(const ef_config* c);
EF_API ef_status ef_config_to_json(const ef_config* c, char** json_text);

EF_API ef_status ef_sweep_run(const ef_config* c, ef_sweep** out);
EF_API void ef_sweep_free(ef_sweep* s);
EF_API ef_status ef_sweep_row_count(const ef_sweep* s, size_t* rows);
EF_API ef_status ef_sweep_csv(const ef_sweep* s, char** csv_text);
EF_API ef_status ef_sweep_write_csv(const ef_sweep* s, const char* path);
EF_API ef_status ef_sweep_write_sidecar(const ef_sweep* s, const char* path);

/* ---- diagnostics ----------------------------------------------------- */

/* dim 0 cycles through 2..8. summary: "prop1 OK prop2 OK thm1 OK". */
EF_API ef_status ef_bounds_check(int dim, int trials, uint64_t seed, int* all_ok, char** summary);
/* Report for a state or channel JSON file; dump_path may be NULL. */
EF_API ef_status ef_inspect_file(const char* path, const char* dump_path, char** report);

#ifdef __cplusplus
}
#endif

#endif  /* EIGENFID_EIGENFID_H_ */
