// Copyright 2026 The cvbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to cvbell. All functions return a cvb_status; on failure
 * cvb_last_error() describes the problem (thread-local, valid until the
 * next call on the same thread). Handles are opaque and owned by the
 * caller. */

#ifndef CVBELL_CVBELL_H_
#define CVBELL_CVBELL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CVBELL_BUILDING_LIBRARY)
#define CVB_API __attribute__((visibility("default")))
#else
#define CVB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cvb_status {
    CVB_OK = 0,
    CVB_ERR_INVALID_ARGUMENT = 1,
    CVB_ERR_CONFIG = 2,
    CVB_ERR_DOMAIN = 3,
    CVB_ERR_NOT_CONVERGED = 4,
    CVB_ERR_IO = 5,
    CVB_ERR_INTERNAL = 6
} cvb_status;

typedef enum cvb_ordering { CVB_WIGNER = 0, CVB_Q = -1 } cvb_ordering;
typedef enum cvb_functional { CVB_CHSH = 0, CVB_CH = 1 } cvb_functional;
typedef enum cvb_ch_sense { CVB_CH_MAGNITUDE = 0, CVB_CH_UPPER = 1 } cvb_ch_sense;

typedef struct cvb_point {
    double re;
    double im;
} cvb_point;

typedef struct cvb_state cvb_state;
typedef struct cvb_two_mode cvb_two_mode;

typedef struct cvb_optimizer_options {
    int starts;
    uint64_t seed;
    double box;
    double tol;
    int jobs;
    cvb_ch_sense ch_sense;
} cvb_optimizer_options;

typedef struct cvb_bell_result {
    double value;      /* signed functional value at argmax */
    double argmax[8];  /* z1r z1i z2r z2i z1pr z1pi z2pr z2pi */
    int starts_used;
    int converged_starts;
    int converged;
    int violation;
} cvb_bell_result;

typedef struct cvb_run_options {
    int has_seed;
    uint64_t seed;
    int starts;       /* 0 keeps the scenario's value */
    int jobs;         /* worker threads over axis values */
    const char *out;  /* NULL keeps the scenario's output; "-" is stdout */
    int resume;
} cvb_run_options;

typedef struct cvb_sweep_summary {
    int scenarios;
    int rows;
    int converged_rows;
    int violating_rows;
} cvb_sweep_summary;

CVB_API const char *cvb_version(void);
CVB_API const char *cvb_last_error(void);
CVB_API void cvb_string_free(char *s);

CVB_API void cvb_optimizer_defaults(cvb_optimizer_options *opts);
CVB_API void cvb_run_defaults(cvb_run_options *opts);

/* Single-mode states */
CVB_API cvb_status cvb_state_vacuum(cvb_state **out);
CVB_API cvb_status cvb_state_scs(double alpha, int odd, cvb_state **out);
CVB_API cvb_status cvb_state_pure_psgs(double r, cvb_state **out);
CVB_API cvb_status cvb_state_gaussian(double A, double B, cvb_state **out);
CVB_API cvb_status cvb_state_kim(double A, double B, double T, cvb_state **out);
CVB_API cvb_status cvb_state_lossy(double r, double T, double epsilon, double pm, cvb_state **out);
CVB_API void cvb_state_free(cvb_state *s);
CVB_API cvb_status cvb_state_quasiprob(const cvb_state *s, cvb_ordering j, cvb_point z, double *out);
/* *defined is 0 for states without a heralding detector. */
CVB_API cvb_status cvb_state_success_probability(const cvb_state *s, double *out, int *defined);
CVB_API cvb_status cvb_state_describe(const cvb_state *s, char **out);

/* Two-mode functions */
CVB_API cvb_status cvb_split_5050(const cvb_state *s, cvb_ordering j, cvb_two_mode **out);
CVB_API cvb_status cvb_ecs_q(double alpha, cvb_two_mode **out);
CVB_API void cvb_two_mode_free(cvb_two_mode *t);
CVB_API cvb_status cvb_two_mode_eval(const cvb_two_mode *t, cvb_point z1, cvb_point z2, double *out);
CVB_API cvb_status cvb_two_mode_marginal(const cvb_two_mode *t, int mode, cvb_point z, double *out);

/* Bell functionals */
CVB_API cvb_status cvb_bell_evaluate(const cvb_two_mode *t, cvb_functional f, const double settings[8], double *out);
CVB_API cvb_status cvb_bell_optimize(const cvb_two_mode *t, cvb_functional f, const cvb_optimizer_options *opts,
                                     cvb_bell_result *out);

/* Cat-state approximation */
CVB_API cvb_status cvb_fidelity(double r, double alpha, double *out);
CVB_API cvb_status cvb_optimal_r(double alpha, double *out);
CVB_API cvb_status cvb_psgs_fock_coeff(double r, int n, double *out);
CVB_API cvb_status cvb_db_to_variance(double db, double *out);
/* Writes "alpha,F" rows for alpha = from, from + step, ..., to. */
CVB_API cvb_status cvb_fidelity_curve(double from, double to, double step, const char *out_path);

/* Sweeps */
CVB_API cvb_status cvb_sweep_run(const char *config_path, const cvb_run_options *opts, cvb_sweep_summary *summary);
CVB_API cvb_status cvb_figure_run(int n, const char *variant, const cvb_run_options *opts,
                                  cvb_sweep_summary *summary);
/* Comma separated variant names of figure n. */
CVB_API cvb_status cvb_figure_variants(int n, char **out);

/* Fock-space cross-check suite; *report is a printable table. */
CVB_API cvb_status cvb_oracle_check(int cutoff, char **report, int *all_passed);

#ifdef __cplusplus
}
#endif

#endif /* CVBELL_CVBELL_H_ */
