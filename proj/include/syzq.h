/* SPDX-FileCopyrightText: 2026 The syzq authors
 * SPDX-License-Identifier: MIT
 *
 * C API of the syzq shared library.
 *
 * All entry points are exception-free and return a status code; detailed
 * error text is available via syzq_last_error() (thread-local).  Objects are
 * opaque handles created from JSON configuration text and destroyed
 * explicitly.  Any pointer returned by a *_json()/string accessor is owned by
 * the handle and valid until the next call on that handle or its destruction.
 */

#ifndef SYZQ_H
#define SYZQ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum syzq_status {
  SYZQ_OK = 0,            /* success */
  SYZQ_CHECK_FAILED = 1,  /* ran to completion; verification failed */
  SYZQ_INVALID_INPUT = 2, /* bad configuration or arguments */
  SYZQ_ERROR = 3          /* internal or numerical failure */
} syzq_status;

/* Library version, e.g. "0.1.0". Static storage, never freed. */
const char* syzq_version(void);

/* Thread-local message for the most recent failing call; "" if none. */
const char* syzq_last_error(void);

/* ---- whole-pipeline runs ------------------------------------------------ */

typedef struct syzq_run syzq_run;

/* Creates a run from configuration JSON (schema documented in README).
 * On failure returns NULL and sets the thread-local error. */
syzq_run* syzq_run_create(const char* config_json);

/* Executes the run; writes report.json and side files into out_dir when
 * out_dir is non-NULL and non-empty. */
syzq_status syzq_run_execute(syzq_run* run, const char* out_dir);

/* Report of the last execute, as JSON. NULL before the first execute. */
const char* syzq_run_report_json(const syzq_run* run);

/* 1 when every check in the last report passed, else 0. */
int syzq_run_passed(const syzq_run* run);

void syzq_run_destroy(syzq_run* run);

/* ---- fine-grained handles ----------------------------------------------- */

typedef struct syzq_abelian syzq_abelian;

/* datum_json: {"Omega": [[...]], "Q": [[...]]} */
syzq_abelian* syzq_abelian_create(const char* datum_json);
void syzq_abelian_destroy(syzq_abelian* a);

/* Number of distinguished base points (= |det Q| = dimension witness). */
syzq_status syzq_abelian_num_points(const syzq_abelian* a, int64_t* out);

/* Value of the theta-type section of point `index` (lex order) at base x and
 * fiber y (each of length n), in the unitary frame. */
syzq_status syzq_abelian_theta(syzq_abelian* a, int index, double hbar,
                               const double* x, const double* y, size_t n,
                               double* out_re, double* out_im);

typedef struct syzq_toric syzq_toric;

/* datum_json: {"n":..., "generators":[[...]], "max_cones":[[...]],
 *              "lambda":[...], "c":{"(u1,...,un)": weight, ...}} */
syzq_toric* syzq_toric_create(const char* datum_json);
void syzq_toric_destroy(syzq_toric* t);

/* Number of lattice points of the moment polytope (= dimension witness). */
syzq_status syzq_toric_num_points(const syzq_toric* t, int64_t* out);

/* Dual potential value and gradient at xi (length n). grad may be NULL. */
syzq_status syzq_toric_potential(const syzq_toric* t, const double* xi,
                                 size_t n, double* out_phi, double* out_grad);

/* Mirror superpotential at z in (C*)^n, passed as interleaved re/im pairs.
 * Returns SYZQ_INVALID_INPUT outside the mirror domain. */
syzq_status syzq_toric_superpotential(const syzq_toric* t, const double* z_re,
                                      const double* z_im, size_t n,
                                      double* out_re, double* out_im);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SYZQ_H */
