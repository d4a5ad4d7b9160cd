/* Copyright 2026 The ssrbell developers
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

/* C interface to the ssrbell shared library.
 *
 * Every function returns an error code (SSRB_OK on success) and writes its
 * results through out-parameters. After a failure, ssrb_last_error() holds a
 * thread-local description. States are opaque handles created by the
 * constructors or the file loader and released with ssrb_state_free.
 */

#ifndef SSRBELL_H
#define SSRBELL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  SSRB_OK = 0,
  SSRB_ERR_ARG = 1,      /* invalid argument or precondition */
  SSRB_ERR_SIZE = 2,     /* dimension limit exceeded */
  SSRB_ERR_CONTRACT = 3, /* dual-route numerical contract violated */
  SSRB_ERR_IO = 4,       /* file missing, unreadable, or malformed */
  SSRB_ERR_INTERNAL = 5
};

enum {
  SSRB_KIND_PURE = 0,
  SSRB_KIND_DENSITY = 1,
  SSRB_KIND_MINIMAL = 2
};

typedef struct ssrb_state ssrb_state;

const char *ssrb_version(void);
const char *ssrb_last_error(void);

/* ------------------------------------------------ construction and files */

/* Amplitudes/entries are dense row-major over (n_a, n_b); im may be NULL. */
int ssrb_state_pure(int dim_a, int dim_b, const double *re, const double *im,
                    ssrb_state **out);
int ssrb_state_density(int dim_a, int dim_b, const double *re,
                       const double *im, ssrb_state **out);
int ssrb_state_minimal(double p00, double p11, double p_phi, double r0,
                       double r1, ssrb_state **out);
/* Real product reference: a_coeffs has n+1 entries, b_coeffs m+1. */
int ssrb_state_product(int n, int m, const double *a_coeffs,
                       const double *b_coeffs, ssrb_state **out);
int ssrb_state_load(const char *path, ssrb_state **out);
int ssrb_state_save(const ssrb_state *st, const char *path);
void ssrb_state_free(ssrb_state *st);

int ssrb_state_kind(const ssrb_state *st, int *kind);
int ssrb_state_dims(const ssrb_state *st, int *dim_a, int *dim_b);

/* Dephases across total-number sectors; out is a density state. */
int ssrb_state_twirl_global(const ssrb_state *st, ssrb_state **out);
/* Dephases with respect to one party's number operator; side 0 = A, 1 = B. */
int ssrb_state_twirl_local(const ssrb_state *st, int side, ssrb_state **out);

/* ------------------------------------------------------- superselection */

int ssrb_is_ssr_compliant(const ssrb_state *st, int *flag);
int ssrb_is_ssr_locc(const ssrb_state *st, int *flag);
int ssrb_coherence(const ssrb_state *st, int delta, double *v);
/* Scans delta and reports the largest |coherence|. */
int ssrb_witness(const ssrb_state *st, double *v_abs, double *v_signed,
                 int *delta);

/* ------------------------------------------------------------- CHSH test */

/* s_max = 2 sqrt(1 + v^2); angles (alpha1, alpha2, beta1, beta2) realize it
 * (angles may be NULL). */
int ssrb_chsh_optimal(double v, double *s_max, double *angles);
/* Correlation of the delta-pair principal state with the given reference at
 * measurement angles alpha, beta (brute force, closed-form checked). */
int ssrb_correlation(const ssrb_state *ref, int delta, double alpha,
                     double beta, double *e);
/* CHSH combination at angles (alpha1, alpha2, beta1, beta2). */
int ssrb_chsh(const ssrb_state *ref, int delta, const double *angles,
              double *s);

/* ------------------------------------------------------ reference design */

/* Analytic separability of a minimal-family state plus the smallest
 * partial-transpose eigenvalue (either out may be NULL). */
int ssrb_minimal_separable(const ssrb_state *minimal, int *flag,
                           double *ppt_min_eig);
/* Largest coherence over separable minimal references; params_out (optional,
 * 5 doubles) receives p00, p11, p_phi, r0, r1 of the maximizer. */
int ssrb_minimal_max_v(double *v_max, double *params_out);
/* Optimal product reference: f_n, g_m, v = f_n g_m; a_coeffs (n+1) and
 * b_coeffs (m+1) are filled when non-NULL. */
int ssrb_optimal_product(int n, int m, double *f_n, double *g_m, double *v,
                         double *a_coeffs, double *b_coeffs);

/* ------------------------------------------------------------- variance */

int ssrb_pure_siv(const ssrb_state *pure, double *siv);
/* Minimal-family report: variance of the coherent component, certified
 * lower bound on the variance of formation, |coherence|, and whether the
 * witness relation holds (outs may be NULL). */
int ssrb_siv_minimal(const ssrb_state *minimal, double *pure_siv,
                     double *vf_lower, double *v_abs, int *witness_ok);
/* Seeded randomized upper bound on the variance of formation. */
int ssrb_vf_upper(const ssrb_state *st, int restarts, uint64_t seed,
                  double *upper);

/* ------------------------------------------------------------- photonic */

int ssrb_photonic_correlation(double r_a, double r_b, double n_bar,
                              double phase, double *e);
/* Largest |S| over phase settings; phases (optional, 4 doubles) receives the
 * realizing settings. */
int ssrb_photonic_chsh_max(double r_a, double r_b, double n_bar,
                           double *s_max, double *phases);
int ssrb_photonic_threshold(double *n_bar_star, double *p_vac);

/* ----------------------------------------------------------- scenarios */

/* Runs the full reproduction suite (including the determinism check),
 * writes the text report to out_path, and reports the number of failed
 * criteria. Returns SSRB_OK even when criteria fail; n_failed tells. */
int ssrb_reproduce_all(uint64_t seed, const char *out_path, int *n_failed);

#ifdef __cplusplus
}
#endif

#endif /* SSRBELL_H */
