#include <doctest.h>

#include <stdexcept>

#include "trapmix/fos.hpp"

using namespace trapmix;

TEST_CASE("truthful_mp_fos construction") {
    Fos f = truthful_mp_fos(3, 3);
    REQUIRE(f.size() == 3);
    CHECK(f.subsets[0] == std::vector<int>{0, 1, 2});
    CHECK(f.subsets[1] == std::vector<int>{3, 4, 5});
    CHECK(f.subsets[2] == std::vector<int>{6, 7, 8});
    CHECK(f.genome_length == 9);

    Fos single = truthful_mp_fos(1, 1);
    REQUIRE(single.size() == 1);
    CHECK(single.subsets[0] == std::vector<int>{0});

    Fos two = truthful_mp_fos(2, 2);
    CHECK(two.subsets[0] == std::vector<int>{0, 1});
    CHECK(two.subsets[1] == std::vector<int>{2, 3});
}

TEST_CASE("is_marginal_product") {
    Fos disjoint{{{0, 1}, {2, 3}}, 4};
    CHECK(is_marginal_product(disjoint));
    Fos overlapping{{{0, 1}, {1, 2}}, 3};
    CHECK_FALSE(is_marginal_product(overlapping));
}

TEST_CASE("truthful_mp_fos is marginal-product, truthful, and partitions the genome") {
    for (int m = 1; m <= 16; ++m) {
        for (int k = 1; k <= 16; ++k) {
            Fos f = truthful_mp_fos(m, k);
            CHECK(is_marginal_product(f));
            CHECK(is_truthful(f, ProblemInstance::standard(m, k)));
            std::size_t covered = 0;
            for (const auto& subset : f.subsets) {
                covered += subset.size();
            }
            CHECK(covered == static_cast<std::size_t>(m * k));
        }
    }
}

TEST_CASE("is_truthful distinguishes the untruthful example") {
    ProblemInstance inst = ProblemInstance::standard(3, 3);
    CHECK(is_truthful(truthful_mp_fos(3, 3), inst));
    Fos untruthful{{{0, 1, 2, 3, 4, 5}, {6, 7, 8}}, 9};
    CHECK_FALSE(is_truthful(untruthful, inst));
    Fos univariate{{{0}, {1}, {2}}, 3};
    CHECK(is_truthful(univariate, ProblemInstance::standard(1, 3)));
    CHECK_THROWS_AS(is_truthful(univariate, inst), std::invalid_argument);
}

TEST_CASE("fos validation") {
    Fos empty_subset{{{}}, 4};
    CHECK_THROWS_AS(empty_subset.validate(), std::invalid_argument);
    Fos out_of_range{{{0, 4}}, 4};
    CHECK_THROWS_AS(out_of_range.validate(), std::invalid_argument);
    Fos negative{{{-1}}, 4};
    CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
}

TEST_CASE("textual FOS format round trip") {
    Fos f = truthful_mp_fos(3, 3);
    std::string text = to_text(f);
    CHECK(text == "0,1,2\n3,4,5\n6,7,8\n");
    Fos parsed = parse_fos(text, 9);
    CHECK(parsed.subsets == f.subsets);
    CHECK(parsed.genome_length == 9);
}

TEST_CASE("parse_fos accepts comments, blanks, and whitespace") {
    Fos f = parse_fos("# untruthful example\n0, 1, 2, 3,4,5\n\n6,7,8\n", 9);
    REQUIRE(f.size() == 2);
    CHECK(f.subsets[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(f.subsets[1] == std::vector<int>{6, 7, 8});
}

TEST_CASE("parse_fos rejects malformed input") {
    CHECK_THROWS_AS(parse_fos("0,1\n2,x\n", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_fos("0,9\n", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_fos("0,,1\n", 4), std::invalid_argument);
}
