#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "trapmix/rng.hpp"
#include "trapmix/trap.hpp"

using namespace trapmix;

namespace {

// Brute-force per-block oracle for the concatenated fitness.
double concat_oracle(const BitString& x, const ProblemInstance& inst) {
    double total = 0.0;
    for (int i = 0; i < inst.m; ++i) {
        BitString blk = block(x, static_cast<std::size_t>(i),
                              static_cast<std::size_t>(inst.params.k));
        total += trap_value(unitation(blk), inst.params, inst.shape);
    }
    return total;
}

}  // namespace

TEST_CASE("trap_value on the standard k=3 trap") {
    TrapParams p = TrapParams::standard(3);
    CHECK(p.a == 2.0);
    CHECK(p.b == 3.0);
    CHECK(p.z == 2);
    CHECK(trap_value(3, p, TrapShape::standard) == 3.0);
    CHECK(trap_value(0, p, TrapShape::standard) == 2.0);
    CHECK(trap_value(2, p, TrapShape::standard) == 0.0);
    CHECK(trap_value(1, p, TrapShape::standard) == 1.0);
    CHECK_THROWS_AS(trap_value(4, p, TrapShape::standard), std::out_of_range);
    CHECK_THROWS_AS(trap_value(-1, p, TrapShape::standard), std::out_of_range);
}

TEST_CASE("trap_value on generalized and tailed shapes") {
    TrapParams p{6, 1.0, 6.0, 4};
    CHECK(trap_value(5, p, TrapShape::generalized) == doctest::Approx(3.0));
    TrapParams t{6, 5.0, 6.0, 4};
    CHECK(trap_value(5, t, TrapShape::tailed) == doctest::Approx(5.5));
}

TEST_CASE("trap_value endpoints for all shapes") {
    RandomStream rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 2 + static_cast<int>(rng.draw_index(10));
        int z = 1 + static_cast<int>(rng.draw_index(static_cast<std::size_t>(k - 1)));
        double b = 1.0 + static_cast<double>(rng.draw_index(8));
        double a = b * (0.1 + 0.8 * rng.uniform01());
        TrapParams p{k, a, b, z};
        p.validate();
        for (TrapShape shape : {TrapShape::generalized, TrapShape::tailed}) {
            CHECK(trap_value(0, p, shape) == doctest::Approx(a));
            CHECK(trap_value(k, p, shape) == doctest::Approx(b));
        }
    }
}

TEST_CASE("concatenated_fitness matches the worked m=3 k=3 values") {
    ProblemInstance inst = ProblemInstance::standard(3, 3);
    EvalCounter ctr;
    CHECK(concatenated_fitness(BitString::from_string("111011011"), inst, ctr) == 3.0);
    CHECK(concatenated_fitness(BitString::from_string("111111000"), inst, ctr) == 8.0);
    CHECK(concatenated_fitness(BitString::from_string("000000011"), inst, ctr) == 4.0);
    CHECK(concatenated_fitness(BitString::from_string("111111111"), inst, ctr) == 9.0);
    CHECK(ctr.count == 4);
    CHECK_THROWS_AS(concatenated_fitness(BitString::from_string("111"), inst, ctr),
                    std::invalid_argument);
}

TEST_CASE("concatenated_fitness equals the per-block oracle on random inputs") {
    RandomStream rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng.draw_index(6));
        int k = 2 + static_cast<int>(rng.draw_index(5));
        int z = 1 + static_cast<int>(rng.draw_index(static_cast<std::size_t>(k - 1)));
        ProblemInstance inst = trial % 2 == 0
                                   ? ProblemInstance::standard(m, k)
                                   : ProblemInstance::generalized(m, k, 1.0, k, z);
        BitString x(static_cast<std::size_t>(inst.genome_length()));
        for (std::size_t i = 0; i < x.size(); ++i) {
            x.set_bit(i, rng.next_bool());
        }
        EvalCounter ctr;
        CHECK(concatenated_fitness(x, inst, ctr) == doctest::Approx(concat_oracle(x, inst)));
    }
}

TEST_CASE("is_global_optimum") {
    ProblemInstance inst = ProblemInstance::standard(3, 3);
    CHECK(is_global_optimum(BitString::from_string("111111111"), inst));
    CHECK_FALSE(is_global_optimum(BitString::from_string("111111000"), inst));
    BitString nearly = BitString::from_string("111111111");
    nearly.set_bit(4, 0);
    CHECK_FALSE(is_global_optimum(nearly, inst));
}

TEST_CASE("region_start") {
    CHECK(region_start(TrapParams{6, 1.0, 6.0, 4}) == 5);
    CHECK(region_start(TrapParams::standard(3)) == 3);
    CHECK(region_start(TrapParams::standard(7)) == 7);
}

TEST_CASE("in_optimal_region") {
    TrapParams p{6, 1.0, 6.0, 4};
    CHECK(in_optimal_region(5, p, TrapShape::generalized));
    CHECK_FALSE(in_optimal_region(4, p, TrapShape::generalized));
    CHECK(in_optimal_region(6, p, TrapShape::generalized));
    CHECK(in_optimal_region(6, TrapParams::standard(6), TrapShape::standard));
}

TEST_CASE("region membership matches f(u) > a exhaustively") {
    // The region predicate must agree with the fitness comparison for every
    // unitation, all k up to 20.
    for (int k = 2; k <= 20; ++k) {
        for (int z = 1; z < k; ++z) {
            TrapParams p{k, 1.0, static_cast<double>(k), z};
            for (int u = 0; u <= k; ++u) {
                bool by_fitness = trap_value(u, p, TrapShape::generalized) > p.a;
                CHECK(in_optimal_region(u, p, TrapShape::generalized) == by_fitness);
                bool tailed_by_fitness =
                    trap_value(u, TrapParams{k, 5.0, 6.0, z}, TrapShape::tailed) > 5.0;
                CHECK(in_optimal_region(u, TrapParams{k, 5.0, 6.0, z}, TrapShape::tailed) ==
                      tailed_by_fitness);
            }
        }
    }
}

TEST_CASE("p_star exact values") {
    CHECK(p_star(TrapParams{6, 1.0, 6.0, 4}, TrapShape::generalized) == 0.109375);
    CHECK(p_star(TrapParams::standard(3), TrapShape::standard) == 0.125);
    CHECK(p_star(TrapParams::standard(4), TrapShape::standard) == 0.0625);
    // Standard trap region is only the global optimum: p* = 2^-k exactly.
    for (int k = 1; k <= 16; ++k) {
        CHECK(p_star(TrapParams::standard(k), TrapShape::standard) == std::ldexp(1.0, -k));
    }
}

TEST_CASE("p_star is nonincreasing in region_start") {
    // Larger z pushes the region entry up, so the tail only shrinks.
    const int k = 12;
    double prev = 1.0;
    for (int z = 1; z < k; ++z) {
        TrapParams p{k, 1.0, static_cast<double>(k), z};
        double ps = p_star(p, TrapShape::generalized);
        CHECK(ps <= prev);
        prev = ps;
    }
}

TEST_CASE("tailed region size equals generalized when region_start is z+1") {
    TrapParams p{6, 1.0, 6.0, 4};
    CHECK(region_start(p) == p.z + 1);
    CHECK(p_star(p, TrapShape::generalized) ==
          p_star(TrapParams{6, 5.0, 6.0, 4}, TrapShape::tailed));
}

TEST_CASE("count_region_blocks and count_optimal_blocks") {
    ProblemInstance inst = ProblemInstance::standard(3, 3);
    CHECK(count_region_blocks(BitString(9), inst) == 0);
    CHECK(count_region_blocks(BitString::from_string("111011011"), inst) == 1);
    CHECK(count_region_blocks(BitString::from_string("111111111"), inst) == 3);
    CHECK(count_optimal_blocks(BitString::from_string("111011011"), inst) == 1);
    CHECK(count_optimal_blocks(BitString::from_string("111111000"), inst) == 2);
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(ProblemInstance::standard(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance::generalized(3, 4, 5.0, 4.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance::generalized(3, 4, 1.0, 4.0, 4), std::invalid_argument);
    ProblemInstance inst = ProblemInstance::generalized(2, 6, 1.0, 6.0, 4);
    CHECK(inst.genome_length() == 12);
    CHECK(inst.describe() == "shape=generalized m=2 k=6 a=1 b=6 z=4");
}
