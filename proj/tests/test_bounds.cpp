#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "trapmix/bounds.hpp"

using namespace trapmix;
using namespace trapmix::bounds;

// Expected values below were frozen from a 30-digit high-precision evaluation
// of the closed forms, independent of this implementation.

TEST_CASE("ea_drift_lower_bound") {
    DriftBound d = ea_drift_lower_bound(1, 2, 3);
    CHECK(d.exact == doctest::Approx(2.67918381344307e-3).epsilon(1e-12));
    CHECK(d.simplified_floor == doctest::Approx(1.70314556097890e-3).epsilon(1e-12));

    // s=m: the survival factor is 1, exact = m*(mk)^-k.
    DriftBound full = ea_drift_lower_bound(2, 2, 3);
    CHECK(full.exact == doctest::Approx(2.0 / 216.0).epsilon(1e-12));
    CHECK(full.simplified_floor == doctest::Approx(3.40629112195780e-3).epsilon(1e-12));

    CHECK_THROWS_AS(ea_drift_lower_bound(0, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(ea_drift_lower_bound(3, 2, 3), std::invalid_argument);
}

TEST_CASE("ea drift exact dominates the simplified floor") {
    for (int m = 1; m <= 8; ++m) {
        for (int k = 1; k <= 8; ++k) {
            for (int s = 1; s <= m; ++s) {
                DriftBound d = ea_drift_lower_bound(s, m, k);
                CHECK(d.exact >= d.simplified_floor);
            }
        }
    }
}

TEST_CASE("ea_upper_bound") {
    CHECK(ea_upper_bound(1, 1) == doctest::Approx(2.71828182845905).epsilon(1e-12));
    CHECK(ea_upper_bound(2, 3) == doctest::Approx(994.129462185717).epsilon(1e-12));
    CHECK(ea_upper_bound(6, 4) == doctest::Approx(2517778.07075376).epsilon(1e-12));
}

TEST_CASE("lemma1 population and failure probability") {
    CHECK(lemma1_population(6, 4, 1.0) == 96);
    CHECK(lemma1_population(6, 4, 2.0) == 192);
    CHECK(lemma1_population(6, 4, 0.1) == 10);  // ceil(9.6)
    CHECK(lemma1_failure(6, 1.0) == doctest::Approx(0.0148725130599982).epsilon(1e-12));
    CHECK(lemma1_failure(1, 1.0) == doctest::Approx(0.367879441171442).epsilon(1e-12));
    CHECK(lemma1_failure(6, 50.0) == doctest::Approx(0.0));
    CHECK(lemma1_failure(1, 1e-9) == 1.0);  // clamped
}

TEST_CASE("logistic_fraction") {
    CHECK(logistic_fraction(1e9, 96.0, false) == doctest::Approx(1.0));
    CHECK(logistic_fraction(0.0, 96.0, false) == doctest::Approx(1.0 / 98.0).epsilon(1e-12));

    // t = mu*m with mu = c*m*2^k approximates the take-over fraction
    // 1/(1 + c*m*2^k*e^-m) used in the take-over argument.
    double impl = logistic_fraction(96.0 * 6.0, 96.0, false);
    double paper = 1.0 / (1.0 + 96.0 * std::exp(-6.0));
    CHECK(impl == doctest::Approx(paper).epsilon(0.01));

    // t = e*mu*ln m with mu = (c/p*)*m lands near 1/(1 + c/p*).
    double mu = 64.0 / 7.0 * 8.0;
    double with_mut = logistic_fraction(std::exp(1.0) * mu * std::log(8.0), mu, true);
    CHECK(with_mut == doctest::Approx(1.0 / (1.0 + 64.0 / 7.0)).epsilon(0.05));

    CHECK_THROWS_AS(logistic_fraction(-1.0, 10.0, false), std::invalid_argument);
    CHECK_THROWS_AS(logistic_fraction(1.0, 0.5, false), std::invalid_argument);
}

TEST_CASE("logistic_fraction is strictly increasing into (0,1)") {
    for (double mu : {2.0, 16.0, 96.0, 1024.0}) {
        for (bool mut : {false, true}) {
            double prev = 0.0;
            for (double t = 0.0; t <= 20.0 * mu; t += mu / 2.0) {
                double p = logistic_fraction(t, mu, mut);
                CHECK(p > prev);
                CHECK(p < 1.0);
                prev = p;
            }
        }
    }
}

TEST_CASE("gomea_bound") {
    CHECK(gomea_bound(6, 4, 1.0) == 3456.0);
    CHECK(gomea_bound(8, 4, 1.0) == 8192.0);
    CHECK_THROWS_AS(gomea_bound(1, 0, 1.0), std::invalid_argument);
}

TEST_CASE("lemma2_population") {
    CHECK(lemma2_population(8, 7.0 / 64.0, 1.0) == 74);
    CHECK(lemma2_population(5, 1.0, 2.0) == 10);
    CHECK_THROWS_AS(lemma2_population(8, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("lemma2 with the standard-trap p* recovers lemma1") {
    for (int m = 2; m <= 12; ++m) {
        for (int k = 2; k <= 10; ++k) {
            for (double c : {0.5, 1.0, 2.0, 3.25}) {
                double ps = p_star(TrapParams::standard(k), TrapShape::standard);
                CHECK(lemma2_population(m, ps, c) == lemma1_population(m, k, c));
            }
        }
    }
}

TEST_CASE("thm3_bound at the m=8 k=6 z=4 reference point") {
    Thm3Bound b = thm3_bound(8, TrapParams{6, 1.0, 6.0, 4}, 1.0);
    CHECK(b.dominant == doctest::Approx(4681.14285714286).epsilon(1e-12));
    CHECK(b.full == doctest::Approx(14310.9112400210).epsilon(1e-12));
    CHECK(b.dominant <= b.full);
}

TEST_CASE("thm3_bound with no levels collapses to the dominant term") {
    // a -> b pushes floor((b-a)(k-z)/b) to zero.
    Thm3Bound b = thm3_bound(8, TrapParams{6, 5.9, 6.0, 4}, 1.0);
    CHECK(b.full == b.dominant);
    CHECK_THROWS_AS(thm3_bound(1, TrapParams{6, 1.0, 6.0, 4}, 1.0), std::invalid_argument);
}

TEST_CASE("bound calculators are monotone in m") {
    double prev_ea = 0.0, prev_gomea = 0.0, prev_thm3 = 0.0, prev_mu = 0.0;
    for (int m = 2; m <= 64; ++m) {
        double ea = ea_upper_bound(m, 4);
        double go = gomea_bound(m, 4, 1.0);
        double t3 = thm3_bound(m, TrapParams{6, 1.0, 6.0, 4}, 1.0).full;
        double mu = static_cast<double>(lemma1_population(m, 4, 1.0));
        CHECK(ea > prev_ea);
        CHECK(go > prev_gomea);
        CHECK(t3 > prev_thm3);
        CHECK(mu > prev_mu);
        prev_ea = ea;
        prev_gomea = go;
        prev_thm3 = t3;
        prev_mu = mu;
    }
}

TEST_CASE("level metric") {
    TrapParams p{6, 1.0, 6.0, 4};
    CHECK(level(region_start(p), p) == 0);
    CHECK(level(6, p) == 1);
    CHECK(level(2, p) == 0);
    CHECK_THROWS_AS(level(7, p), std::out_of_range);
}

TEST_CASE("BoundReport csv row") {
    BoundReport report{"gomea", {{"m", "6"}, {"k", "4"}, {"c", "1"}}, 3456.0};
    CHECK(report.csv_row() == "gomea,m=6 k=4 c=1,3456");
}
