#include "trapmix/harness.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "trapmix/bounds.hpp"
#include "trapmix/numeric.hpp"

namespace trapmix {

const char* to_string(AlgorithmKind algorithm) {
    switch (algorithm) {
        case AlgorithmKind::gomea: return "gomea";
        case AlgorithmKind::gomea_mut: return "gomea-mut";
        case AlgorithmKind::one_plus_one_ea: return "ea";
        case AlgorithmKind::mu_plus_one_dc_ga: return "ga";
    }
    return "unknown";
}

const char* to_string(InitKind init) {
    switch (init) {
        case InitKind::uniform: return "uniform";
        case InitKind::worst_case_standard: return "worst-standard";
        case InitKind::worst_case_generalized: return "worst-generalized";
    }
    return "unknown";
}

AlgorithmKind algorithm_from_string(std::string_view name) {
    if (name == "gomea") return AlgorithmKind::gomea;
    if (name == "gomea-mut") return AlgorithmKind::gomea_mut;
    if (name == "ea") return AlgorithmKind::one_plus_one_ea;
    if (name == "ga") return AlgorithmKind::mu_plus_one_dc_ga;
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

InitKind init_from_string(std::string_view name) {
    if (name == "uniform") return InitKind::uniform;
    if (name == "worst-standard") return InitKind::worst_case_standard;
    if (name == "worst-generalized") return InitKind::worst_case_generalized;
    throw std::invalid_argument("unknown init: " + std::string(name));
}

std::vector<BitString> uniform_population(std::size_t mu, std::size_t length, RandomStream& rng) {
    if (mu < 1) {
        throw std::invalid_argument("uniform_population: mu must be positive");
    }
    std::vector<BitString> genomes;
    genomes.reserve(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        BitString genome(length);
        for (std::size_t j = 0; j < length; ++j) {
            genome.set_bit(j, rng.next_bool());
        }
        genomes.push_back(std::move(genome));
    }
    return genomes;
}

std::vector<BitString> worst_case_standard(std::size_t mu, const ProblemInstance& inst,
                                           RandomStream& rng) {
    if (mu < 1) {
        throw std::invalid_argument("worst_case_standard: mu must be positive");
    }
    if (inst.shape != TrapShape::standard) {
        throw std::invalid_argument("worst_case_standard: instance shape must be standard");
    }
    const std::size_t length = static_cast<std::size_t>(inst.genome_length());
    const std::size_t k = static_cast<std::size_t>(inst.params.k);
    std::vector<BitString> genomes(mu, BitString(length));
    for (int blk = 0; blk < inst.m; ++blk) {
        std::size_t recipient = rng.draw_index(mu);
        const std::size_t offset = static_cast<std::size_t>(blk) * k;
        for (std::size_t j = 0; j < k; ++j) {
            genomes[recipient].set_bit(offset + j, 1);
        }
    }
    return genomes;
}

std::vector<BitString> worst_case_generalized(std::size_t mu, const ProblemInstance& inst,
                                              RandomStream& rng) {
    if (mu < 1) {
        throw std::invalid_argument("worst_case_generalized: mu must be positive");
    }
    if (inst.shape == TrapShape::standard) {
        throw std::invalid_argument(
            "worst_case_generalized: instance shape must be generalized or tailed");
    }
    const std::size_t length = static_cast<std::size_t>(inst.genome_length());
    const std::size_t k = static_cast<std::size_t>(inst.params.k);
    const std::size_t ones = static_cast<std::size_t>(inst.params.z) + 1;
    std::vector<BitString> genomes(mu, BitString(length));
    std::vector<std::size_t> positions(k);
    for (int blk = 0; blk < inst.m; ++blk) {
        std::size_t recipient = rng.draw_index(mu);
        const std::size_t offset = static_cast<std::size_t>(blk) * k;
        // Partial Fisher-Yates: the first z+1 entries are a uniform subset.
        for (std::size_t j = 0; j < k; ++j) {
            positions[j] = j;
        }
        for (std::size_t j = 0; j < ones; ++j) {
            std::size_t pick = j + rng.draw_index(k - j);
            std::swap(positions[j], positions[pick]);
            genomes[recipient].set_bit(offset + positions[j], 1);
        }
    }
    return genomes;
}

double success_budget(const ProblemInstance& inst, double c, AlgorithmKind algorithm) {
    if (!(c > 0.0)) {
        throw std::invalid_argument("success_budget: c must be positive");
    }
    const double m = static_cast<double>(inst.m);
    const double k = static_cast<double>(inst.params.k);
    double base;
    if (inst.shape == TrapShape::standard) {
        base = 2.0 * c * m * m * m * k * k;
    } else {
        base = 2.0 * (c / p_star(inst.params, inst.shape)) * m * m * m;
    }
    return algorithm == AlgorithmKind::mu_plus_one_dc_ga ? 10.0 * base : base;
}

std::uint64_t ExperimentSpec::resolved_mu() const {
    if (mu && c) {
        throw std::invalid_argument("experiment: give either mu or c, not both");
    }
    if (mu) {
        return *mu;
    }
    if (!c) {
        throw std::invalid_argument("experiment: population sizing needs mu or c");
    }
    long long sized =
        instance.shape == TrapShape::standard
            ? bounds::lemma1_population(instance.m, instance.params.k, *c)
            : bounds::lemma2_population(instance.m, p_star(instance.params, instance.shape), *c);
    return static_cast<std::uint64_t>(sized);
}

double ExperimentSpec::effective_c() const {
    if (c) {
        return *c;
    }
    const double m = static_cast<double>(instance.m);
    const double mu_value = static_cast<double>(resolved_mu());
    if (instance.shape == TrapShape::standard) {
        return mu_value / (m * std::ldexp(1.0, instance.params.k));
    }
    return mu_value * p_star(instance.params, instance.shape) / m;
}

void ExperimentSpec::validate() const {
    instance.validate();
    if (replications < 1) {
        throw std::invalid_argument("experiment: replications must be positive");
    }
    if (threads < 1) {
        throw std::invalid_argument("experiment: threads must be positive");
    }

    const bool population_based = algorithm != AlgorithmKind::one_plus_one_ea;
    if (population_based) {
        std::uint64_t mu_value = resolved_mu();
        if (mu_value < 2) {
            throw std::invalid_argument("experiment: population size must be at least 2");
        }
        if (budget < mu_value) {
            throw std::invalid_argument("experiment: budget smaller than initialization cost");
        }
    } else {
        if (budget < 1) {
            throw std::invalid_argument("experiment: budget must be positive");
        }
        if (init != InitKind::uniform) {
            throw std::invalid_argument("experiment: the (1+1) EA only supports uniform init");
        }
        if (fos) {
            throw std::invalid_argument("experiment: the (1+1) EA does not take a FOS");
        }
    }

    if (init == InitKind::worst_case_standard && instance.shape != TrapShape::standard) {
        throw std::invalid_argument("experiment: worst-standard init requires the standard shape");
    }
    if (init == InitKind::worst_case_generalized && instance.shape == TrapShape::standard) {
        throw std::invalid_argument(
            "experiment: worst-generalized init requires a generalized or tailed shape");
    }
    if (fos) {
        fos->validate();
        if (fos->genome_length != instance.genome_length()) {
            throw std::invalid_argument("experiment: FOS genome length mismatch");
        }
    }
}

double attached_bound(const ProblemInstance& inst, double c, AlgorithmKind algorithm) {
    if (algorithm == AlgorithmKind::one_plus_one_ea) {
        return bounds::ea_upper_bound(inst.m, inst.params.k);
    }
    if (inst.shape == TrapShape::standard) {
        return bounds::gomea_bound(inst.m, inst.params.k, c);
    }
    return bounds::thm3_bound(inst.m, inst.params, c).full;
}

namespace {

RunOutcome execute_one(const ExperimentSpec& spec, std::uint64_t mu, std::uint64_t seed) {
    RandomStream rng(seed);
    const auto& inst = spec.instance;

    if (spec.algorithm == AlgorithmKind::one_plus_one_ea) {
        double rate = spec.ea_mutation_rate > 0.0
                          ? spec.ea_mutation_rate
                          : 1.0 / static_cast<double>(inst.genome_length());
        return one_plus_one_ea_run(inst, rate, spec.budget, rng);
    }

    std::vector<BitString> genomes;
    switch (spec.init) {
        case InitKind::uniform:
            genomes = uniform_population(mu, static_cast<std::size_t>(inst.genome_length()), rng);
            break;
        case InitKind::worst_case_standard:
            genomes = worst_case_standard(mu, inst, rng);
            break;
        case InitKind::worst_case_generalized:
            genomes = worst_case_generalized(mu, inst, rng);
            break;
    }

    if (spec.algorithm == AlgorithmKind::mu_plus_one_dc_ga) {
        return mu_plus_one_dc_ga_run(inst, genomes, spec.budget, spec.ga_mutation_rate, rng);
    }

    const Fos& fos = spec.fos ? *spec.fos
                              : truthful_mp_fos(inst.m, inst.params.k);
    bool mutate = spec.algorithm == AlgorithmKind::gomea_mut;
    return gomea_run(inst, fos, genomes, spec.budget, mutate, spec.gom_mutation_rate, rng);
}

SummaryRow summarize(const ExperimentSpec& spec, const std::vector<RunRecord>& records,
                     double c_value) {
    SummaryRow summary;
    double sum = 0.0;
    for (const auto& record : records) {
        if (record.outcome.hit) {
            summary.successes += 1;
            sum += static_cast<double>(record.outcome.hitting_time);
        } else {
            summary.censored += 1;
        }
    }
    summary.success_rate = static_cast<double>(summary.successes) / records.size();
    if (summary.successes > 0) {
        summary.mean_hitting_time = sum / summary.successes;
        double sq = 0.0;
        for (const auto& record : records) {
            if (record.outcome.hit) {
                double d = static_cast<double>(record.outcome.hitting_time) -
                           summary.mean_hitting_time;
                sq += d * d;
            }
        }
        summary.std_hitting_time =
            summary.successes > 1 ? std::sqrt(sq / (summary.successes - 1)) : 0.0;
    } else {
        summary.mean_hitting_time = std::numeric_limits<double>::quiet_NaN();
        summary.std_hitting_time = std::numeric_limits<double>::quiet_NaN();
    }
    summary.bound_value = attached_bound(spec.instance, c_value, spec.algorithm);
    return summary;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();

    ExperimentResult result;
    result.spec = spec;
    if (spec.algorithm == AlgorithmKind::one_plus_one_ea) {
        result.mu = 1;
        result.c = spec.c.value_or(1.0);
    } else {
        result.mu = spec.resolved_mu();
        result.c = spec.effective_c();
    }

    const int reps = spec.replications;
    result.records.resize(static_cast<std::size_t>(reps));

    auto run_rep = [&](int rep) {
        std::uint64_t seed = spec.base_seed ^ static_cast<std::uint64_t>(rep);
        RunOutcome outcome = execute_one(spec, result.mu, seed);
        result.records[static_cast<std::size_t>(rep)] = RunRecord{rep, seed, outcome};
    };

    int workers = std::min(spec.threads, reps);
    if (workers <= 1) {
        for (int rep = 0; rep < reps; ++rep) {
            run_rep(rep);
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    int rep = next.fetch_add(1);
                    if (rep >= reps) {
                        return;
                    }
                    run_rep(rep);
                }
            });
        }
        for (auto& worker : pool) {
            worker.join();
        }
    }

    result.summary = summarize(spec, result.records, result.c);
    return result;
}

std::string experiment_csv(const ExperimentResult& result) {
    const ExperimentSpec& spec = result.spec;
    std::ostringstream out;
    out << "# trapmix experiment\n";
    out << "# " << spec.instance.describe() << '\n';
    out << "# algorithm=" << to_string(spec.algorithm) << " mu=" << result.mu
        << " c=" << format_real(result.c) << " init=" << to_string(spec.init)
        << " budget=" << spec.budget << " replications=" << spec.replications
        << " base_seed=" << spec.base_seed << " rng_id=" << RandomStream::kGeneratorId << '\n';
    if (spec.fos) {
        out << "# fos=";
        for (std::size_t i = 0; i < spec.fos->subsets.size(); ++i) {
            if (i > 0) out << '|';
            const auto& subset = spec.fos->subsets[i];
            for (std::size_t j = 0; j < subset.size(); ++j) {
                if (j > 0) out << ',';
                out << subset[j];
            }
        }
        out << '\n';
    } else if (spec.algorithm == AlgorithmKind::gomea ||
               spec.algorithm == AlgorithmKind::gomea_mut) {
        out << "# fos=truthful-mp\n";
    }
    out << "rep,seed,hit,hitting_time,evaluations_used\n";
    for (const auto& record : result.records) {
        out << record.rep << ',' << record.seed << ',' << (record.outcome.hit ? 1 : 0) << ','
            << (record.outcome.hit ? record.outcome.hitting_time : 0) << ','
            << record.outcome.evaluations_used << '\n';
    }
    out << "# summary columns: success_rate,successes,censored,mean_hitting_time,"
           "std_hitting_time,bound\n";
    const SummaryRow& s = result.summary;
    out << "summary," << format_real(s.success_rate) << ',' << s.successes << ',' << s.censored
        << ',' << format_real(s.mean_hitting_time) << ',' << format_real(s.std_hitting_time)
        << ',' << format_real(s.bound_value) << '\n';
    return out.str();
}

}  // namespace trapmix
