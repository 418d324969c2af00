/* trapmix C API: trap-function benchmarks, GOMEA/(1+1) EA/GA runners,
 * runtime-bound calculators, and seeded experiment execution with CSV output.
 *
 * All functions returning trapmix_status set a thread-local error message
 * retrievable with trapmix_last_error() on failure. Handles are opaque and
 * owned by the caller; destroy functions accept NULL.
 */
#ifndef TRAPMIX_H
#define TRAPMIX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TRAPMIX_BUILD)
#define TRAPMIX_API __declspec(dllexport)
#else
#define TRAPMIX_API __declspec(dllimport)
#endif
#else
#define TRAPMIX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trapmix_status {
    TRAPMIX_OK = 0,
    TRAPMIX_ERR_INVALID_ARGUMENT = 1,
    TRAPMIX_ERR_RUNTIME = 2
} trapmix_status;

TRAPMIX_API const char* trapmix_version(void);
/* Identity and version of the pseudo-random generator, as echoed in CSV. */
TRAPMIX_API const char* trapmix_rng_id(void);
/* Message for the last failing call on this thread; empty string if none. */
TRAPMIX_API const char* trapmix_last_error(void);

/* ---- problems ---------------------------------------------------------- */

typedef struct trapmix_problem trapmix_problem;

/* shape is "standard" (a, b, z ignored; pass zeros), "generalized" or
 * "tailed" (a, b, z required). */
TRAPMIX_API trapmix_status trapmix_problem_create(const char* shape, int m, int k, double a,
                                                  double b, int z, trapmix_problem** out);
TRAPMIX_API void trapmix_problem_destroy(trapmix_problem* problem);
TRAPMIX_API int trapmix_problem_genome_length(const trapmix_problem* problem);
/* Key=value echo ("shape=... m=... ..."); returns the full length needed,
 * truncating to buflen-1 characters like snprintf. */
TRAPMIX_API int trapmix_problem_describe(const trapmix_problem* problem, char* buf, size_t buflen);
/* Fitness of a '0'/'1' genome string (no evaluation counting). */
TRAPMIX_API trapmix_status trapmix_problem_fitness(const trapmix_problem* problem,
                                                   const char* genome_bits, double* out);
TRAPMIX_API trapmix_status trapmix_problem_pstar(const trapmix_problem* problem, double* out);
TRAPMIX_API trapmix_status trapmix_problem_region_start(const trapmix_problem* problem, int* out);

/* ---- FOS --------------------------------------------------------------- */

typedef struct trapmix_fos trapmix_fos;

TRAPMIX_API trapmix_status trapmix_fos_truthful(int m, int k, trapmix_fos** out);
/* Text format: one subset per line, comma-separated 0-based indices. */
TRAPMIX_API trapmix_status trapmix_fos_parse(const char* text, int genome_length,
                                             trapmix_fos** out);
TRAPMIX_API void trapmix_fos_destroy(trapmix_fos* fos);
TRAPMIX_API int trapmix_fos_size(const trapmix_fos* fos);
TRAPMIX_API int trapmix_fos_is_marginal_product(const trapmix_fos* fos);
TRAPMIX_API trapmix_status trapmix_fos_is_truthful(const trapmix_fos* fos,
                                                   const trapmix_problem* problem, int* out);

/* ---- bound calculators -------------------------------------------------- */

TRAPMIX_API trapmix_status trapmix_bound_ea_upper(int m, int k, double* out);
TRAPMIX_API trapmix_status trapmix_bound_ea_drift(int s, int m, int k, double* exact,
                                                  double* simplified_floor);
TRAPMIX_API trapmix_status trapmix_bound_gomea(int m, int k, double c, double* out);
TRAPMIX_API trapmix_status trapmix_bound_lemma1_mu(int m, int k, double c, long long* out);
TRAPMIX_API trapmix_status trapmix_bound_lemma1_failure(int m, double c, double* out);
TRAPMIX_API trapmix_status trapmix_bound_lemma2_mu(int m, double p_star, double c, long long* out);
TRAPMIX_API trapmix_status trapmix_bound_logistic(double t, double mu, int with_mutation,
                                                  double* out);
TRAPMIX_API trapmix_status trapmix_bound_thm3(int m, int k, double a, double b, int z, double c,
                                              double* full, double* dominant);
TRAPMIX_API trapmix_status trapmix_bound_pstar(const char* shape, int k, double a, double b, int z,
                                               double* out);
TRAPMIX_API trapmix_status trapmix_bound_level(int best_u, int k, double a, double b, int z,
                                               int* out);

/* ---- experiments -------------------------------------------------------- */

typedef struct trapmix_experiment trapmix_experiment;
typedef struct trapmix_result trapmix_result;

TRAPMIX_API trapmix_status trapmix_experiment_create(trapmix_experiment** out);
TRAPMIX_API void trapmix_experiment_destroy(trapmix_experiment* experiment);

TRAPMIX_API trapmix_status trapmix_experiment_set_problem(trapmix_experiment* experiment,
                                                          const char* shape, int m, int k,
                                                          double a, double b, int z);
/* "gomea", "gomea-mut", "ea", or "ga". */
TRAPMIX_API trapmix_status trapmix_experiment_set_algorithm(trapmix_experiment* experiment,
                                                            const char* algorithm);
TRAPMIX_API trapmix_status trapmix_experiment_set_mu(trapmix_experiment* experiment,
                                                     unsigned long long mu);
TRAPMIX_API trapmix_status trapmix_experiment_set_c(trapmix_experiment* experiment, double c);
/* "uniform", "worst-standard", or "worst-generalized". */
TRAPMIX_API trapmix_status trapmix_experiment_set_init(trapmix_experiment* experiment,
                                                       const char* init);
TRAPMIX_API trapmix_status trapmix_experiment_set_budget(trapmix_experiment* experiment,
                                                         unsigned long long evaluations);
/* "thm2" (10x the Theorem 2 bound, standard shape only), "s42" (2cm^3k^2),
 * or "s632" (2(c/p*)m^3); the GA multiplies any preset by 10. Resolved when
 * the experiment runs. */
TRAPMIX_API trapmix_status trapmix_experiment_set_budget_preset(trapmix_experiment* experiment,
                                                                const char* preset);
TRAPMIX_API trapmix_status trapmix_experiment_set_replications(trapmix_experiment* experiment,
                                                               int replications);
TRAPMIX_API trapmix_status trapmix_experiment_set_seed(trapmix_experiment* experiment,
                                                       unsigned long long seed);
TRAPMIX_API trapmix_status trapmix_experiment_set_threads(trapmix_experiment* experiment,
                                                          int threads);
/* Custom FOS in the textual format; replaces the default truthful MP FOS. */
TRAPMIX_API trapmix_status trapmix_experiment_set_fos_text(trapmix_experiment* experiment,
                                                           const char* text);

TRAPMIX_API trapmix_status trapmix_experiment_run(const trapmix_experiment* experiment,
                                                  trapmix_result** out);
TRAPMIX_API void trapmix_result_destroy(trapmix_result* result);

/* Full experiment CSV (header, per-run rows, summary row); owned by the
 * result handle. */
TRAPMIX_API const char* trapmix_result_csv(const trapmix_result* result);
TRAPMIX_API double trapmix_result_success_rate(const trapmix_result* result);
TRAPMIX_API int trapmix_result_successes(const trapmix_result* result);
TRAPMIX_API int trapmix_result_replications(const trapmix_result* result);
TRAPMIX_API double trapmix_result_mean_hitting_time(const trapmix_result* result);
TRAPMIX_API double trapmix_result_std_hitting_time(const trapmix_result* result);
TRAPMIX_API double trapmix_result_bound(const trapmix_result* result);
TRAPMIX_API unsigned long long trapmix_result_mu(const trapmix_result* result);
TRAPMIX_API double trapmix_result_c(const trapmix_result* result);
TRAPMIX_API unsigned long long trapmix_result_budget(const trapmix_result* result);

#ifdef __cplusplus
}
#endif

#endif /* TRAPMIX_H */
