#include "trapmix/algorithms.hpp"

#include <numeric>
#include <stdexcept>

namespace trapmix {

namespace {

// Evaluation with first-hit bookkeeping shared by all runners. The hitting
// time is the counter value at the first evaluation of a global optimum,
// wherever in a run that evaluation happens.
struct RunTracker {
    const ProblemInstance& inst;
    EvalCounter counter;
    bool hit = false;
    std::uint64_t hitting_time = 0;

    double evaluate(const BitString& genome) {
        double fitness = concatenated_fitness(genome, inst, counter);
        if (!hit && is_global_optimum(genome, inst)) {
            hit = true;
            hitting_time = counter.count;
        }
        return fitness;
    }

    RunOutcome outcome() const { return {hit, hitting_time, counter.count}; }
};

void check_mask(const BitString& s, std::span<const int> mask) {
    for (int index : mask) {
        if (index < 0 || static_cast<std::size_t>(index) >= s.size()) {
            throw std::out_of_range("mask index out of range");
        }
    }
}

// Shared GOM pass. Traversal order and donor slots come from the caller via
// callables so that the runner, the standalone operator, and scripted traces
// all execute the identical element step: cross, optionally mutate the same
// mask, evaluate, accept on strict improvement.
template <typename EvalFn, typename StepFn>
Individual gom_pass(const Individual& p0, const Population& pop, const Fos& f,
                    std::span<const std::size_t> order, std::span<const std::size_t> donors,
                    EvalFn&& evaluate, RandomStream* rng, const GomOptions& options,
                    StepFn&& on_step) {
    Individual working = p0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::span<const int> mask = f.subsets[order[i]];
        BitString offspring = cross_with_mask(working.genome, pop.members[donors[i]].genome, mask);
        if (options.mutate) {
            offspring = local_mutation(offspring, mask, options.mutation_rate, *rng);
        }
        double fitness = evaluate(offspring);
        bool accepted = fitness > working.fitness;
        on_step(offspring, fitness, accepted);
        if (accepted) {
            working.genome = std::move(offspring);
            working.fitness = fitness;
        }
    }
    return working;
}

// Random traversal order and per-element donor slots excluding exclude_slot.
struct GomSchedule {
    std::vector<std::size_t> order;
    std::vector<std::size_t> donors;
};

GomSchedule draw_schedule(const Population& pop, std::size_t exclude_slot, const Fos& f,
                          RandomStream& rng) {
    GomSchedule schedule;
    schedule.order.resize(f.size());
    std::iota(schedule.order.begin(), schedule.order.end(), 0);
    rng.shuffle(schedule.order);
    schedule.donors.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        // randomSelection(P - p0): uniform over the other slots, redrawn per element.
        std::size_t donor = rng.draw_index(pop.size() - 1);
        if (donor >= exclude_slot) {
            ++donor;
        }
        schedule.donors.push_back(donor);
    }
    return schedule;
}

void check_gom_preconditions(const Population& pop, std::size_t exclude_slot, const Fos& f,
                             const ProblemInstance& inst) {
    if (pop.size() < 2) {
        throw std::invalid_argument("gom: population too small");
    }
    if (exclude_slot >= pop.size()) {
        throw std::out_of_range("gom: exclude_slot out of range");
    }
    if (f.genome_length != inst.genome_length()) {
        throw std::invalid_argument("gom: FOS genome length mismatch");
    }
}

template <typename EvalFn>
Population evaluate_population(const std::vector<BitString>& genomes, EvalFn&& evaluate) {
    Population pop;
    pop.members.reserve(genomes.size());
    for (const auto& genome : genomes) {
        double fitness = evaluate(genome);
        pop.members.push_back(Individual{genome, fitness});
    }
    return pop;
}

}  // namespace

BitString cross_with_mask(const BitString& receiver, const BitString& donor,
                          std::span<const int> mask) {
    if (receiver.size() != donor.size()) {
        throw std::invalid_argument("cross_with_mask: length mismatch");
    }
    check_mask(receiver, mask);
    BitString offspring = receiver;
    for (int index : mask) {
        offspring.set_bit(static_cast<std::size_t>(index),
                          donor.bit(static_cast<std::size_t>(index)));
    }
    return offspring;
}

BitString local_mutation(const BitString& s, std::span<const int> mask, double rate,
                         RandomStream& rng) {
    if (!(rate >= 0.0 && rate <= 1.0)) {
        throw std::invalid_argument("local_mutation: rate must lie in [0, 1]");
    }
    check_mask(s, mask);
    BitString out = s;
    for (int index : mask) {
        if (rng.bernoulli(rate)) {
            out.flip_bit(static_cast<std::size_t>(index));
        }
    }
    return out;
}

Individual gom(const Individual& p0, const Population& pop, std::size_t exclude_slot,
               const Fos& f, const ProblemInstance& inst, EvalCounter& counter,
               RandomStream& rng, const GomOptions& options) {
    check_gom_preconditions(pop, exclude_slot, f, inst);
    GomSchedule schedule = draw_schedule(pop, exclude_slot, f, rng);
    auto evaluate = [&](const BitString& genome) {
        return concatenated_fitness(genome, inst, counter);
    };
    return gom_pass(p0, pop, f, schedule.order, schedule.donors, evaluate, &rng, options,
                    [](const BitString&, double, bool) {});
}

GomTrace gom_scripted(const Individual& p0, const Population& pop,
                      std::span<const std::size_t> donor_slots, const Fos& f,
                      const ProblemInstance& inst, EvalCounter& counter) {
    if (donor_slots.size() != f.size()) {
        throw std::invalid_argument("gom_scripted: need one donor per FOS element");
    }
    for (std::size_t donor : donor_slots) {
        if (donor >= pop.size()) {
            throw std::out_of_range("gom_scripted: donor slot out of range");
        }
    }
    std::vector<std::size_t> order(f.size());
    std::iota(order.begin(), order.end(), 0);

    GomTrace trace;
    auto evaluate = [&](const BitString& genome) {
        return concatenated_fitness(genome, inst, counter);
    };
    trace.result = gom_pass(p0, pop, f, order, donor_slots, evaluate, nullptr, GomOptions{},
                            [&trace](const BitString& offspring, double fitness, bool accepted) {
                                trace.steps.push_back(GomTraceStep{offspring, fitness, accepted});
                            });
    return trace;
}

RunOutcome gomea_run(const ProblemInstance& inst, const Fos& f,
                     const std::vector<BitString>& initial_genomes, std::uint64_t budget,
                     bool mutate, double mutation_rate, RandomStream& rng) {
    const std::size_t mu = initial_genomes.size();
    if (mu < 2) {
        throw std::invalid_argument("gomea_run: population size must be at least 2");
    }
    if (budget < mu) {
        throw std::invalid_argument("gomea_run: budget smaller than initialization cost");
    }
    if (f.genome_length != inst.genome_length()) {
        throw std::invalid_argument("gomea_run: FOS genome length mismatch");
    }

    GomOptions options;
    options.mutate = mutate;
    options.mutation_rate = mutation_rate > 0.0 ? mutation_rate : 1.0 / inst.params.k;

    RunTracker tracker{inst};
    auto evaluate = [&tracker](const BitString& genome) { return tracker.evaluate(genome); };
    Population pop = evaluate_population(initial_genomes, evaluate);

    // Whole GOM passes only: a pass that cannot fit in the remaining budget
    // is not started, so a censored run consumes exactly mu + steps * |F|
    // evaluations. A pass during which the optimum shows up still completes;
    // the hitting time was recorded at the evaluation itself.
    while (!tracker.hit && tracker.counter.count + f.size() <= budget) {
        std::size_t slot = rng.draw_index(pop.size());
        GomSchedule schedule = draw_schedule(pop, slot, f, rng);
        pop.members[slot] = gom_pass(pop.members[slot], pop, f, schedule.order, schedule.donors,
                                     evaluate, &rng, options, [](const BitString&, double, bool) {});
    }
    return tracker.outcome();
}

RunOutcome one_plus_one_ea_run(const ProblemInstance& inst, double mutation_rate,
                               std::uint64_t budget, RandomStream& rng) {
    if (!(mutation_rate > 0.0 && mutation_rate < 1.0)) {
        throw std::invalid_argument("one_plus_one_ea_run: rate must lie in (0, 1)");
    }
    if (budget < 1) {
        throw std::invalid_argument("one_plus_one_ea_run: budget must cover the initial evaluation");
    }

    const std::size_t length = static_cast<std::size_t>(inst.genome_length());
    RunTracker tracker{inst};

    BitString parent(length);
    for (std::size_t i = 0; i < length; ++i) {
        parent.set_bit(i, rng.next_bool());
    }
    double parent_fitness = tracker.evaluate(parent);

    while (!tracker.hit && tracker.counter.count < budget) {
        BitString offspring = parent;
        for (std::size_t i = 0; i < length; ++i) {
            if (rng.bernoulli(mutation_rate)) {
                offspring.flip_bit(i);
            }
        }
        double offspring_fitness = tracker.evaluate(offspring);
        if (ea_accepts(parent_fitness, offspring_fitness)) {
            parent = std::move(offspring);
            parent_fitness = offspring_fitness;
        }
    }
    return tracker.outcome();
}

BitString uniform_crossover(const BitString& first, const BitString& second,
                            const std::function<bool()>& coin) {
    if (first.size() != second.size()) {
        throw std::invalid_argument("uniform_crossover: length mismatch");
    }
    BitString offspring(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        offspring.set_bit(i, coin() ? first.bit(i) : second.bit(i));
    }
    return offspring;
}

std::size_t closer_parent(const BitString& first, const BitString& second,
                          const BitString& offspring) {
    return hamming(first, offspring) <= hamming(second, offspring) ? 0 : 1;
}

RunOutcome mu_plus_one_dc_ga_run(const ProblemInstance& inst,
                                 const std::vector<BitString>& initial_genomes,
                                 std::uint64_t budget, double mutation_rate, RandomStream& rng) {
    const std::size_t mu = initial_genomes.size();
    if (mu < 2) {
        throw std::invalid_argument("mu_plus_one_dc_ga_run: population size must be at least 2");
    }
    if (budget < mu) {
        throw std::invalid_argument("mu_plus_one_dc_ga_run: budget smaller than initialization cost");
    }
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
        throw std::invalid_argument("mu_plus_one_dc_ga_run: rate must lie in [0, 1]");
    }

    RunTracker tracker{inst};
    auto evaluate = [&tracker](const BitString& genome) { return tracker.evaluate(genome); };
    Population pop = evaluate_population(initial_genomes, evaluate);

    while (!tracker.hit && tracker.counter.count < budget) {
        std::size_t first = rng.draw_index(mu);
        std::size_t second = rng.draw_index(mu - 1);
        if (second >= first) {
            ++second;
        }
        const Individual& parent_a = pop.members[first];
        const Individual& parent_b = pop.members[second];

        BitString offspring = uniform_crossover(parent_a.genome, parent_b.genome,
                                                [&rng] { return rng.next_bool(); });
        if (mutation_rate > 0.0) {
            for (std::size_t i = 0; i < offspring.size(); ++i) {
                if (rng.bernoulli(mutation_rate)) {
                    offspring.flip_bit(i);
                }
            }
        }
        double offspring_fitness = tracker.evaluate(offspring);

        // Deterministic crowding: compete with the Hamming-closest parent,
        // ties toward the first-selected one; replace on strict improvement.
        std::size_t target =
            closer_parent(parent_a.genome, parent_b.genome, offspring) == 0 ? first : second;
        if (offspring_fitness > pop.members[target].fitness) {
            pop.members[target] = Individual{std::move(offspring), offspring_fitness};
        }
    }
    return tracker.outcome();
}

}  // namespace trapmix
