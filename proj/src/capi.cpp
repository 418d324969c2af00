#include "trapmix/trapmix.h"

#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>

#include "trapmix/bounds.hpp"
#include "trapmix/harness.hpp"
#include "trapmix/numeric.hpp"

using namespace trapmix;

namespace {

thread_local std::string g_last_error;

template <typename Fn>
trapmix_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return TRAPMIX_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return TRAPMIX_ERR_INVALID_ARGUMENT;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return TRAPMIX_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TRAPMIX_ERR_RUNTIME;
    } catch (...) {
        g_last_error = "unknown error";
        return TRAPMIX_ERR_RUNTIME;
    }
}

void require(bool condition, const char* message) {
    if (!condition) {
        throw std::invalid_argument(message);
    }
}

ProblemInstance make_instance(const char* shape, int m, int k, double a, double b, int z) {
    require(shape != nullptr, "shape must not be null");
    TrapShape parsed = trap_shape_from_string(shape);
    switch (parsed) {
        case TrapShape::standard: return ProblemInstance::standard(m, k);
        case TrapShape::generalized: return ProblemInstance::generalized(m, k, a, b, z);
        case TrapShape::tailed: return ProblemInstance::tailed(m, k, a, b, z);
    }
    throw std::invalid_argument("unknown trap shape");
}

}  // namespace

struct trapmix_problem {
    ProblemInstance instance;
};

struct trapmix_fos {
    Fos fos;
};

struct trapmix_experiment {
    ExperimentSpec spec;
    std::optional<std::string> budget_preset;
    bool has_problem = false;
    bool has_budget = false;
};

struct trapmix_result {
    ExperimentResult result;
    std::string csv;
};

extern "C" {

const char* trapmix_version(void) { return "0.1.0"; }

const char* trapmix_rng_id(void) { return RandomStream::kGeneratorId; }

const char* trapmix_last_error(void) { return g_last_error.c_str(); }

/* ---- problems ---------------------------------------------------------- */

trapmix_status trapmix_problem_create(const char* shape, int m, int k, double a, double b, int z,
                                      trapmix_problem** out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        *out = new trapmix_problem{make_instance(shape, m, k, a, b, z)};
    });
}

void trapmix_problem_destroy(trapmix_problem* problem) { delete problem; }

int trapmix_problem_genome_length(const trapmix_problem* problem) {
    return problem ? problem->instance.genome_length() : 0;
}

int trapmix_problem_describe(const trapmix_problem* problem, char* buf, size_t buflen) {
    if (!problem || !buf) {
        return -1;
    }
    std::string text = problem->instance.describe();
    if (buflen > 0) {
        size_t n = std::min(buflen - 1, text.size());
        std::memcpy(buf, text.data(), n);
        buf[n] = '\0';
    }
    return static_cast<int>(text.size());
}

trapmix_status trapmix_problem_fitness(const trapmix_problem* problem, const char* genome_bits,
                                       double* out) {
    return guarded([&] {
        require(problem != nullptr && genome_bits != nullptr && out != nullptr,
                "null argument");
        EvalCounter counter;
        *out = concatenated_fitness(BitString::from_string(genome_bits), problem->instance,
                                    counter);
    });
}

trapmix_status trapmix_problem_pstar(const trapmix_problem* problem, double* out) {
    return guarded([&] {
        require(problem != nullptr && out != nullptr, "null argument");
        *out = p_star(problem->instance.params, problem->instance.shape);
    });
}

trapmix_status trapmix_problem_region_start(const trapmix_problem* problem, int* out) {
    return guarded([&] {
        require(problem != nullptr && out != nullptr, "null argument");
        *out = region_start(problem->instance.params);
    });
}

/* ---- FOS --------------------------------------------------------------- */

trapmix_status trapmix_fos_truthful(int m, int k, trapmix_fos** out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        *out = new trapmix_fos{truthful_mp_fos(m, k)};
    });
}

trapmix_status trapmix_fos_parse(const char* text, int genome_length, trapmix_fos** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new trapmix_fos{parse_fos(text, genome_length)};
    });
}

void trapmix_fos_destroy(trapmix_fos* fos) { delete fos; }

int trapmix_fos_size(const trapmix_fos* fos) {
    return fos ? static_cast<int>(fos->fos.size()) : 0;
}

int trapmix_fos_is_marginal_product(const trapmix_fos* fos) {
    return fos && is_marginal_product(fos->fos) ? 1 : 0;
}

trapmix_status trapmix_fos_is_truthful(const trapmix_fos* fos, const trapmix_problem* problem,
                                       int* out) {
    return guarded([&] {
        require(fos != nullptr && problem != nullptr && out != nullptr, "null argument");
        *out = is_truthful(fos->fos, problem->instance) ? 1 : 0;
    });
}

/* ---- bound calculators -------------------------------------------------- */

trapmix_status trapmix_bound_ea_upper(int m, int k, double* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        *out = bounds::ea_upper_bound(m, k);
    });
}

trapmix_status trapmix_bound_ea_drift(int s, int m, int k, double* exact,
                                      double* simplified_floor) {
    return guarded([&] {
        require(exact != nullptr && simplified_floor != nullptr, "null argument");
        bounds::DriftBound d = bounds::ea_drift_lower_bound(s, m, k);
        *exact = d.exact;
        *simplified_floor = d.simplified_floor;
    });
}

trapmix_status trapmix_bound_gomea(int m, int k, double c, double* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        *out = bounds::gomea_bound(m, k, c);
    });
}

trapmix_status trapmix_bound_lemma1_mu(int m, int k, double c, long long* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        *out = bounds::lemma1_population(m, k, c);
    });
}

trapmix_status trapmix_bound_lemma1_failure(int m, double c, double* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        *out = bounds::lemma1_failure(m, c);
    });
}

trapmix_status trapmix_bound_lemma2_mu(int m, double p_star, double c, long long* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        *out = bounds::lemma2_population(m, p_star, c);
    });
}

trapmix_status trapmix_bound_logistic(double t, double mu, int with_mutation, double* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        *out = bounds::logistic_fraction(t, mu, with_mutation != 0);
    });
}

trapmix_status trapmix_bound_thm3(int m, int k, double a, double b, int z, double c, double* full,
                                  double* dominant) {
    return guarded([&] {
        require(full != nullptr && dominant != nullptr, "null argument");
        bounds::Thm3Bound bound = bounds::thm3_bound(m, TrapParams{k, a, b, z}, c);
        *full = bound.full;
        *dominant = bound.dominant;
    });
}

trapmix_status trapmix_bound_pstar(const char* shape, int k, double a, double b, int z,
                                   double* out) {
    return guarded([&] {
        require(shape != nullptr && out != nullptr, "null argument");
        TrapShape parsed = trap_shape_from_string(shape);
        TrapParams params =
            parsed == TrapShape::standard ? TrapParams::standard(k) : TrapParams{k, a, b, z};
        params.validate();
        *out = p_star(params, parsed);
    });
}

trapmix_status trapmix_bound_level(int best_u, int k, double a, double b, int z, int* out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        TrapParams params{k, a, b, z};
        params.validate();
        *out = bounds::level(best_u, params);
    });
}

/* ---- experiments -------------------------------------------------------- */

trapmix_status trapmix_experiment_create(trapmix_experiment** out) {
    return guarded([&] {
        require(out != nullptr, "out must not be null");
        auto* experiment = new trapmix_experiment;
        experiment->spec.replications = 100;
        experiment->spec.threads = 1;
        *out = experiment;
    });
}

void trapmix_experiment_destroy(trapmix_experiment* experiment) { delete experiment; }

trapmix_status trapmix_experiment_set_problem(trapmix_experiment* experiment, const char* shape,
                                              int m, int k, double a, double b, int z) {
    return guarded([&] {
        require(experiment != nullptr, "null experiment");
        experiment->spec.instance = make_instance(shape, m, k, a, b, z);
        experiment->has_problem = true;
    });
}

trapmix_status trapmix_experiment_set_algorithm(trapmix_experiment* experiment,
                                                const char* algorithm) {
    return guarded([&] {
        require(experiment != nullptr && algorithm != nullptr, "null argument");
        experiment->spec.algorithm = algorithm_from_string(algorithm);
    });
}

trapmix_status trapmix_experiment_set_mu(trapmix_experiment* experiment, unsigned long long mu) {
    return guarded([&] {
        require(experiment != nullptr, "null experiment");
        experiment->spec.mu = mu;
        experiment->spec.c.reset();
    });
}

trapmix_status trapmix_experiment_set_c(trapmix_experiment* experiment, double c) {
    return guarded([&] {
        require(experiment != nullptr, "null experiment");
        require(c > 0.0, "c must be positive");
        experiment->spec.c = c;
        experiment->spec.mu.reset();
    });
}

trapmix_status trapmix_experiment_set_init(trapmix_experiment* experiment, const char* init) {
    return guarded([&] {
        require(experiment != nullptr && init != nullptr, "null argument");
        experiment->spec.init = init_from_string(init);
    });
}

trapmix_status trapmix_experiment_set_budget(trapmix_experiment* experiment,
                                             unsigned long long evaluations) {
    return guarded([&] {
        require(experiment != nullptr, "null experiment");
        experiment->spec.budget = evaluations;
        experiment->budget_preset.reset();
        experiment->has_budget = true;
    });
}

trapmix_status trapmix_experiment_set_budget_preset(trapmix_experiment* experiment,
                                                    const char* preset) {
    return guarded([&] {
        require(experiment != nullptr && preset != nullptr, "null argument");
        std::string name = preset;
        require(name == "thm2" || name == "s42" || name == "s632",
                "budget preset must be thm2, s42, or s632");
        experiment->budget_preset = name;
        experiment->has_budget = true;
    });
}

trapmix_status trapmix_experiment_set_replications(trapmix_experiment* experiment,
                                                   int replications) {
    return guarded([&] {
        require(experiment != nullptr, "null experiment");
        experiment->spec.replications = replications;
    });
}

trapmix_status trapmix_experiment_set_seed(trapmix_experiment* experiment,
                                           unsigned long long seed) {
    return guarded([&] {
        require(experiment != nullptr, "null experiment");
        experiment->spec.base_seed = seed;
    });
}

trapmix_status trapmix_experiment_set_threads(trapmix_experiment* experiment, int threads) {
    return guarded([&] {
        require(experiment != nullptr, "null experiment");
        experiment->spec.threads = threads;
    });
}

trapmix_status trapmix_experiment_set_fos_text(trapmix_experiment* experiment, const char* text) {
    return guarded([&] {
        require(experiment != nullptr && text != nullptr, "null argument");
        require(experiment->has_problem, "set the problem before the FOS");
        experiment->spec.fos = parse_fos(text, experiment->spec.instance.genome_length());
    });
}

trapmix_status trapmix_experiment_run(const trapmix_experiment* experiment,
                                      trapmix_result** out) {
    return guarded([&] {
        require(experiment != nullptr && out != nullptr, "null argument");
        require(experiment->has_problem, "experiment has no problem");
        require(experiment->has_budget, "experiment needs a budget or budget preset");

        ExperimentSpec spec = experiment->spec;
        if (experiment->budget_preset) {
            const std::string& preset = *experiment->budget_preset;
            double c = spec.c ? *spec.c : spec.effective_c();
            double value;
            if (preset == "thm2") {
                require(spec.instance.shape == TrapShape::standard,
                        "budget preset thm2 applies to the standard shape only");
                value = 10.0 * bounds::gomea_bound(spec.instance.m, spec.instance.params.k, c);
                if (spec.algorithm == AlgorithmKind::mu_plus_one_dc_ga) {
                    value *= 10.0;
                }
            } else if (preset == "s42") {
                require(spec.instance.shape == TrapShape::standard,
                        "budget preset s42 applies to the standard shape only");
                value = success_budget(spec.instance, c, spec.algorithm);
            } else {
                require(spec.instance.shape != TrapShape::standard,
                        "budget preset s632 applies to generalized/tailed shapes");
                value = success_budget(spec.instance, c, spec.algorithm);
            }
            spec.budget = static_cast<std::uint64_t>(value);
        }

        auto* result = new trapmix_result;
        try {
            result->result = run_experiment(spec);
            result->csv = experiment_csv(result->result);
        } catch (...) {
            delete result;
            throw;
        }
        *out = result;
    });
}

void trapmix_result_destroy(trapmix_result* result) { delete result; }

const char* trapmix_result_csv(const trapmix_result* result) {
    return result ? result->csv.c_str() : "";
}

double trapmix_result_success_rate(const trapmix_result* result) {
    return result ? result->result.summary.success_rate : 0.0;
}

int trapmix_result_successes(const trapmix_result* result) {
    return result ? result->result.summary.successes : 0;
}

int trapmix_result_replications(const trapmix_result* result) {
    return result ? result->result.spec.replications : 0;
}

double trapmix_result_mean_hitting_time(const trapmix_result* result) {
    return result ? result->result.summary.mean_hitting_time : 0.0;
}

double trapmix_result_std_hitting_time(const trapmix_result* result) {
    return result ? result->result.summary.std_hitting_time : 0.0;
}

double trapmix_result_bound(const trapmix_result* result) {
    return result ? result->result.summary.bound_value : 0.0;
}

unsigned long long trapmix_result_mu(const trapmix_result* result) {
    return result ? result->result.mu : 0;
}

double trapmix_result_c(const trapmix_result* result) {
    return result ? result->result.c : 0.0;
}

unsigned long long trapmix_result_budget(const trapmix_result* result) {
    return result ? result->result.spec.budget : 0;
}

}  // extern "C"
