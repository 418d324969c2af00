#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "trapmix/bounds.hpp"
#include "trapmix/harness.hpp"

using namespace trapmix;

TEST_CASE("uniform_population per-bit frequency and determinism") {
    RandomStream rng(808);
    auto pop = uniform_population(10000, 16, rng);
    long long ones = 0;
    for (const auto& g : pop) {
        ones += unitation(g);
    }
    double freq = static_cast<double>(ones) / (10000.0 * 16.0);
    CHECK(freq == doctest::Approx(0.5).epsilon(0.02));

    RandomStream r1(3), r2(3);
    CHECK(uniform_population(5, 8, r1) == uniform_population(5, 8, r2));
    CHECK(uniform_population(1, 4, r1).size() == 1);
}

TEST_CASE("worst_case_standard plants exactly m all-ones blocks") {
    ProblemInstance inst = ProblemInstance::standard(6, 4);
    RandomStream rng(99);
    auto pop = worst_case_standard(96, inst, rng);
    REQUIRE(pop.size() == 96);
    int planted = 0;
    for (const auto& g : pop) {
        for (int b = 0; b < inst.m; ++b) {
            int u = unitation(block(g, static_cast<std::size_t>(b), 4));
            // Every block is either untouched (all zeros) or planted (all ones).
            CHECK((u == 0 || u == 4));
            planted += u == 4;
        }
    }
    CHECK(planted == inst.m);

    // Degenerate: single individual on one block is already the optimum.
    ProblemInstance single = ProblemInstance::standard(1, 4);
    auto tiny = worst_case_standard(1, single, rng);
    CHECK(is_global_optimum(tiny[0], single));

    CHECK_THROWS_AS(worst_case_standard(4, ProblemInstance::generalized(2, 6, 1.0, 6.0, 4), rng),
                    std::invalid_argument);
}

TEST_CASE("worst_case_generalized plants one z+1 block per subfunction") {
    ProblemInstance inst = ProblemInstance::generalized(8, 6, 1.0, 6.0, 4);
    RandomStream rng(1234);
    auto pop = worst_case_generalized(74, inst, rng);
    for (int b = 0; b < inst.m; ++b) {
        int with_ones = 0;
        for (const auto& g : pop) {
            int u = unitation(block(g, static_cast<std::size_t>(b), 6));
            CHECK((u == 0 || u == inst.params.z + 1));
            with_ones += u == inst.params.z + 1;
        }
        CHECK(with_ones == 1);
    }

    // Planted blocks are in the optimal region iff region_start <= z+1
    // (true for the paper's a=1, b=k settings).
    CHECK(region_start(inst.params) <= inst.params.z + 1);
    int region_total = 0;
    for (const auto& g : pop) {
        region_total += count_region_blocks(g, inst);
    }
    CHECK(region_total == inst.m);

    CHECK_THROWS_AS(worst_case_generalized(4, ProblemInstance::standard(2, 4), rng),
                    std::invalid_argument);
}

TEST_CASE("worst_case_generalized with z+1 == k reduces to the standard placement") {
    ProblemInstance inst = ProblemInstance::generalized(4, 5, 1.0, 5.0, 4);
    RandomStream rng(7);
    auto pop = worst_case_generalized(30, inst, rng);
    int optimal = 0;
    for (const auto& g : pop) {
        optimal += count_optimal_blocks(g, inst);
    }
    CHECK(optimal == inst.m);
}

TEST_CASE("success_budget formulas") {
    ProblemInstance std46 = ProblemInstance::standard(6, 4);
    CHECK(success_budget(std46, 1.0, AlgorithmKind::gomea) == 6912.0);
    CHECK(success_budget(std46, 1.0, AlgorithmKind::mu_plus_one_dc_ga) == 69120.0);
    ProblemInstance gen = ProblemInstance::generalized(8, 6, 1.0, 6.0, 4);
    CHECK(success_budget(gen, 1.0, AlgorithmKind::gomea) ==
          doctest::Approx(9362.28571428571).epsilon(1e-12));
    CHECK(success_budget(gen, 1.0, AlgorithmKind::mu_plus_one_dc_ga) ==
          doctest::Approx(93622.8571428571).epsilon(1e-12));
}

TEST_CASE("at k=4 the s42 budget and 2x the Theorem 2 bound coincide") {
    for (int m = 2; m <= 12; ++m) {
        ProblemInstance inst = ProblemInstance::standard(m, 4);
        CHECK(success_budget(inst, 1.0, AlgorithmKind::gomea) ==
              2.0 * bounds::gomea_bound(m, 4, 1.0));
    }
}

TEST_CASE("experiment spec validation") {
    ExperimentSpec spec;
    spec.instance = ProblemInstance::standard(3, 3);
    spec.algorithm = AlgorithmKind::gomea;
    spec.c = 1.0;
    spec.budget = 10;  // below mu = 24
    spec.replications = 1;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec.budget = 100000;
    spec.replications = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec.replications = 1;
    spec.init = InitKind::worst_case_generalized;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec.init = InitKind::uniform;
    spec.mu = 10;  // both mu and c set
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

    spec.mu.reset();
    spec.validate();
    CHECK(spec.resolved_mu() == 24);
    CHECK(spec.effective_c() == doctest::Approx(1.0));
}

TEST_CASE("run_experiment aggregates and reproduces across thread counts") {
    ExperimentSpec spec;
    spec.instance = ProblemInstance::standard(3, 3);
    spec.algorithm = AlgorithmKind::gomea;
    spec.c = 1.0;
    spec.init = InitKind::worst_case_standard;
    spec.budget = 50000;
    spec.replications = 16;
    spec.base_seed = 2025;
    spec.threads = 1;

    ExperimentResult serial = run_experiment(spec);
    spec.threads = 4;
    ExperimentResult parallel = run_experiment(spec);

    REQUIRE(serial.records.size() == 16);
    CHECK(experiment_csv(serial) == experiment_csv(parallel));
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].seed == (2025ULL ^ static_cast<std::uint64_t>(i)));
        CHECK(serial.records[i].outcome.hitting_time ==
              parallel.records[i].outcome.hitting_time);
    }
    CHECK(serial.summary.success_rate == 1.0);
    CHECK(serial.summary.successes == 16);
    CHECK(serial.summary.bound_value == bounds::gomea_bound(3, 3, 1.0));
}

TEST_CASE("run_experiment with the optimum planted at init") {
    ExperimentSpec spec;
    spec.instance = ProblemInstance::standard(1, 4);
    spec.algorithm = AlgorithmKind::gomea;
    spec.mu = 2;
    spec.init = InitKind::worst_case_standard;
    spec.budget = 100;
    spec.replications = 5;
    spec.threads = 1;

    ExperimentResult result = run_experiment(spec);
    CHECK(result.summary.success_rate == 1.0);
    for (const auto& record : result.records) {
        CHECK(record.outcome.hitting_time <= 2);
    }
}

TEST_CASE("experiment CSV shape") {
    ExperimentSpec spec;
    spec.instance = ProblemInstance::standard(2, 3);
    spec.algorithm = AlgorithmKind::one_plus_one_ea;
    spec.budget = 5000;
    spec.replications = 3;
    spec.base_seed = 7;
    spec.threads = 1;

    ExperimentResult result = run_experiment(spec);
    std::string csv = experiment_csv(result);
    CHECK(csv.find("# shape=standard m=2 k=3 a=2 b=3 z=2") != std::string::npos);
    CHECK(csv.find("rng_id=xoshiro256ss-v1") != std::string::npos);
    CHECK(csv.find("rep,seed,hit,hitting_time,evaluations_used\n") != std::string::npos);
    CHECK(csv.find("\nsummary,") != std::string::npos);
    CHECK(csv.find("algorithm=ea") != std::string::npos);
}

TEST_CASE("lemma 1 Monte Carlo: missing-block fraction within the bound") {
    // m=6, k=4, c=1: fraction of size-96 uniform populations missing at least
    // one all-ones block, versus the Chernoff/union bound 6e^-6 plus slack.
    ProblemInstance inst = ProblemInstance::standard(6, 4);
    const int samples = 2000;
    RandomStream rng(31415);
    int missing = 0;
    for (int s = 0; s < samples; ++s) {
        RandomStream child = rng.child(static_cast<std::uint64_t>(s));
        auto pop = uniform_population(96, 24, child);
        bool found[6] = {false, false, false, false, false, false};
        for (const auto& g : pop) {
            for (int b = 0; b < 6; ++b) {
                if (!found[b] && unitation(block(g, static_cast<std::size_t>(b), 4)) == 4) {
                    found[b] = true;
                }
            }
        }
        for (int b = 0; b < 6; ++b) {
            if (!found[b]) {
                ++missing;
                break;
            }
        }
    }
    double p_hat = static_cast<double>(missing) / samples;
    double eps = bounds::lemma1_failure(6, 1.0);
    double slack = 3.0 * std::sqrt(p_hat * (1.0 - p_hat) / samples);
    CHECK(p_hat <= eps + slack);
}
