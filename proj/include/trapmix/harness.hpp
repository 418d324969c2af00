#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trapmix/algorithms.hpp"
#include "trapmix/fos.hpp"
#include "trapmix/rng.hpp"
#include "trapmix/trap.hpp"

namespace trapmix {

enum class AlgorithmKind { gomea, gomea_mut, one_plus_one_ea, mu_plus_one_dc_ga };
enum class InitKind { uniform, worst_case_standard, worst_case_generalized };

const char* to_string(AlgorithmKind algorithm);
const char* to_string(InitKind init);
AlgorithmKind algorithm_from_string(std::string_view name);
InitKind init_from_string(std::string_view name);

/// mu genomes with every bit an independent fair coin.
std::vector<BitString> uniform_population(std::size_t mu, std::size_t length, RandomStream& rng);

/// Worst case for the standard trap: all genomes all-zeros, then each block
/// is planted as all-ones into one uniformly chosen individual (collisions
/// across blocks allowed).
std::vector<BitString> worst_case_standard(std::size_t mu, const ProblemInstance& inst,
                                           RandomStream& rng);

/// Worst case for the generalized/tailed trap: all-zeros baseline; per block
/// one uniformly chosen individual receives exactly z+1 ones at uniformly
/// chosen positions inside that block.
std::vector<BitString> worst_case_generalized(std::size_t mu, const ProblemInstance& inst,
                                              RandomStream& rng);

/// Success budget: 2*c*m^3*k^2 for the standard shape, 2*(c/p*)*m^3 for the
/// generalized/tailed shapes; 10x either for the GA.
double success_budget(const ProblemInstance& inst, double c, AlgorithmKind algorithm);

struct ExperimentSpec {
    ProblemInstance instance;
    AlgorithmKind algorithm = AlgorithmKind::gomea;
    std::optional<std::uint64_t> mu;  // explicit population size...
    std::optional<double> c;          // ...or sizing constant (Lemma 1/2); exactly one
    InitKind init = InitKind::uniform;
    std::uint64_t budget = 0;
    int replications = 1;
    std::uint64_t base_seed = 0;
    std::optional<Fos> fos;      // population algorithms; default truthful MP
    double ea_mutation_rate = 0.0;   // 0 selects 1/(mk)
    double gom_mutation_rate = 0.0;  // 0 selects 1/k
    double ga_mutation_rate = 0.0;   // GA default: no mutation
    int threads = 1;

    std::uint64_t resolved_mu() const;
    /// c if given, otherwise derived from mu (mu/(m 2^k) for the standard
    /// shape, mu*p*/m otherwise); feeds the attached bound.
    double effective_c() const;
    void validate() const;
};

struct RunRecord {
    int rep = 0;
    std::uint64_t seed = 0;
    RunOutcome outcome;
};

struct SummaryRow {
    double success_rate = 0.0;
    int successes = 0;
    int censored = 0;
    double mean_hitting_time = 0.0;  // nan when no run succeeded
    double std_hitting_time = 0.0;   // sample std over successes; nan when none
    double bound_value = 0.0;
};

struct ExperimentResult {
    ExperimentSpec spec;
    std::uint64_t mu = 0;
    double c = 0.0;
    std::vector<RunRecord> records;
    SummaryRow summary;
};

/// Runs spec.replications independent runs with per-run seeds
/// base_seed ^ rep, optionally across threads; the aggregation joins records
/// in replication order, so results do not depend on the thread count.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// The matching theoretical bound: Theorem 1 for the EA, Theorem 2 for the
/// standard shape, Theorem 3 (full form) otherwise.
double attached_bound(const ProblemInstance& inst, double c, AlgorithmKind algorithm);

/// Full experiment CSV: '#' header lines echoing the spec, one row per run
/// (rep,seed,hit,hitting_time,evaluations_used), then a summary row.
std::string experiment_csv(const ExperimentResult& result);

}  // namespace trapmix
