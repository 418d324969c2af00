#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "trapmix/bitstring.hpp"
#include "trapmix/fos.hpp"
#include "trapmix/rng.hpp"
#include "trapmix/trap.hpp"

namespace trapmix {

struct Individual {
    BitString genome;
    double fitness = 0.0;
};

struct Population {
    std::vector<Individual> members;
    std::size_t size() const { return members.size(); }
};

struct RunOutcome {
    bool hit = false;
    /// Counter value at the first evaluation of a global optimum; only
    /// meaningful when hit is true.
    std::uint64_t hitting_time = 0;
    std::uint64_t evaluations_used = 0;
};

/// receiver with the positions in mask replaced by donor's bits; receiver
/// itself is unchanged. Throws on length mismatch or out-of-range indices.
BitString cross_with_mask(const BitString& receiver, const BitString& donor,
                          std::span<const int> mask);

/// Flips each bit in mask independently with the given rate; bits outside
/// the mask are untouched.
BitString local_mutation(const BitString& s, std::span<const int> mask, double rate,
                         RandomStream& rng);

struct GomOptions {
    bool mutate = false;
    double mutation_rate = 0.0;  // typically 1/k
};

/// One GOM pass: traverses the FOS in a fresh uniformly random order; for
/// each element draws a donor uniformly from pop excluding exclude_slot,
/// crosses the masked bits in, optionally mutates them, evaluates, and keeps
/// the offspring only on a strict fitness improvement. Consumes exactly
/// f.size() evaluations.
Individual gom(const Individual& p0, const Population& pop, std::size_t exclude_slot,
               const Fos& f, const ProblemInstance& inst, EvalCounter& counter,
               RandomStream& rng, const GomOptions& options = {});

struct GomTraceStep {
    BitString offspring;
    double offspring_fitness = 0.0;
    bool accepted = false;
};

struct GomTrace {
    Individual result;
    std::vector<GomTraceStep> steps;
};

/// Scripted GOM pass for worked traces: identity traversal order, donor
/// slots given explicitly, no mutation.
GomTrace gom_scripted(const Individual& p0, const Population& pop,
                      std::span<const std::size_t> donor_slots, const Fos& f,
                      const ProblemInstance& inst, EvalCounter& counter);

/// GOMEA: evaluates the initial genomes (mu evaluations), then repeats
/// {pick a slot uniformly, apply gom, write the result back} until a global
/// optimum is evaluated or the remaining budget cannot cover a full pass.
/// mutation_rate <= 0 selects the default 1/k.
RunOutcome gomea_run(const ProblemInstance& inst, const Fos& f,
                     const std::vector<BitString>& initial_genomes, std::uint64_t budget,
                     bool mutate, double mutation_rate, RandomStream& rng);

/// (1+1) EA acceptance: the offspring replaces the parent when not worse.
inline bool ea_accepts(double parent_fitness, double offspring_fitness) {
    return offspring_fitness >= parent_fitness;
}

/// (1+1) EA with per-bit mutation; one evaluation per iteration plus one for
/// the uniform random initial genome.
RunOutcome one_plus_one_ea_run(const ProblemInstance& inst, double mutation_rate,
                               std::uint64_t budget, RandomStream& rng);

/// Uniform crossover: each position takes the first parent's bit when the
/// coin lands true, the second parent's otherwise.
BitString uniform_crossover(const BitString& first, const BitString& second,
                            const std::function<bool()>& coin);

/// Index (0 or 1) of the Hamming-closest parent; ties go to the first.
std::size_t closer_parent(const BitString& first, const BitString& second,
                          const BitString& offspring);

/// (mu+1) GA with deterministic crowding: each step crosses two distinct
/// uniformly chosen parents into one offspring, which replaces the
/// Hamming-closest of its parents iff strictly fitter. mutation_rate 0
/// disables mutation (the default protocol).
RunOutcome mu_plus_one_dc_ga_run(const ProblemInstance& inst,
                                 const std::vector<BitString>& initial_genomes,
                                 std::uint64_t budget, double mutation_rate, RandomStream& rng);

}  // namespace trapmix
