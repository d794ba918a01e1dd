/*
 * irsfso - focused-beam reflector link simulator
 *
 * C interface to the simulation core. Scenarios are loaded from flat
 * key-value config text, run through a named pipeline, and returned as
 * column-oriented numeric tables. All handles are opaque; every fallible
 * call returns an irsfso_status and leaves a human-readable message in
 * irsfso_last_error() (thread-local) on failure.
 */

#ifndef IRSFSO_H
#define IRSFSO_H

#include <stddef.h>

#ifndef IRSFSO_API
#define IRSFSO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum irsfso_status {
  IRSFSO_OK = 0,
  IRSFSO_ERROR_INVALID_ARGUMENT = 1,
  IRSFSO_ERROR_CONFIG = 2,
  IRSFSO_ERROR_NUMERIC = 3,
  IRSFSO_ERROR_DOMAIN = 4,
  IRSFSO_ERROR_INFEASIBLE = 5,
  IRSFSO_ERROR_IO = 6,
} irsfso_status;

typedef struct irsfso_scenario irsfso_scenario;
typedef struct irsfso_table irsfso_table;

IRSFSO_API const char* irsfso_version(void);

/* Message for the most recent failure on this thread ("" if none). */
IRSFSO_API const char* irsfso_last_error(void);

/* --- scenario configuration ------------------------------------------- */

IRSFSO_API irsfso_status irsfso_scenario_load(const char* path, irsfso_scenario** out);
IRSFSO_API irsfso_status irsfso_scenario_parse(const char* text, irsfso_scenario** out);
/* Override one key, e.g. irsfso_scenario_set(s, "mc.seed", "42"). */
IRSFSO_API irsfso_status irsfso_scenario_set(irsfso_scenario* s, const char* key,
                                             const char* value);
IRSFSO_API void irsfso_scenario_free(irsfso_scenario* s);

/* Pipelines: "phase-profile", "field-profile", "pointing-curve",
 * "outage", "montecarlo", "sweep". */
IRSFSO_API irsfso_status irsfso_run(const irsfso_scenario* s, const char* pipeline,
                                    irsfso_table** out);

/* --- result tables ------------------------------------------------------ */

IRSFSO_API size_t irsfso_table_columns(const irsfso_table* t);
IRSFSO_API size_t irsfso_table_rows(const irsfso_table* t);
IRSFSO_API const char* irsfso_table_column_name(const irsfso_table* t, size_t col);
IRSFSO_API double irsfso_table_value(const irsfso_table* t, size_t row, size_t col);
/* NULL when the key is absent. */
IRSFSO_API const char* irsfso_table_metadata(const irsfso_table* t, const char* key);
/* format: "csv" or "json"; path NULL or "-" writes to stdout. */
IRSFSO_API irsfso_status irsfso_table_write(const irsfso_table* t, const char* path,
                                            const char* format);
IRSFSO_API irsfso_status irsfso_table_to_string(const irsfso_table* t, const char* format,
                                                char** out);
IRSFSO_API void irsfso_string_free(char* s);
IRSFSO_API void irsfso_table_free(irsfso_table* t);

/* --- direct numeric entry points ---------------------------------------- */

IRSFSO_API double irsfso_erf(double x);
IRSFSO_API irsfso_status irsfso_erfinv(double p, double* out);
IRSFSO_API irsfso_status irsfso_hyp1f2(double a, double b1, double b2, double x, double* out);

/* Gaussian beam width w(z) for waist w0 and the given wavelength. */
IRSFSO_API irsfso_status irsfso_beam_width(double z, double w0, double wavelength, double* out);

/* Waist of the reflected beam focused at the receiver. */
IRSFSO_API irsfso_status irsfso_virtual_waist(double theta_i, double theta_r, double d_t2r,
                                              double d_r2l, double w0, double wavelength,
                                              double* out);

/* Pointing loss; model is "exact", "erf", "indicator", "gaussian" or "auto". */
IRSFSO_API irsfso_status irsfso_hp(const char* model, double u, double w_l, double a_l,
                                   double* out);

IRSFSO_API irsfso_status irsfso_rytov_variance(double cn2, double wavenumber, double distance,
                                               double* out);
IRSFSO_API irsfso_status irsfso_gg_alpha_beta(double sigma_r2, double* alpha, double* beta);
IRSFSO_API irsfso_status irsfso_gg_cdf(double h_a, double alpha, double beta, double* out);
IRSFSO_API irsfso_status irsfso_lognormal_cdf(double h_a, double sigma2, double* out);
IRSFSO_API irsfso_status irsfso_outage_threshold(double p_t, double r0, double n0, double eta,
                                                 double* out);

#ifdef __cplusplus
}
#endif

#endif /* IRSFSO_H */
