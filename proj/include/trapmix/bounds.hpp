#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trapmix/trap.hpp"

namespace trapmix::bounds {

/// Multiplicative drift of the (1+1) EA when s blocks are non-optimal:
/// exact = s * (1/(mk))^k * (1 - 1/(mk))^((m-s)k), and the simplified
/// floor (s/e) * (mk)^(-k) that the runtime bound uses.
struct DriftBound {
    double exact = 0.0;
    double simplified_floor = 0.0;
};
DriftBound ea_drift_lower_bound(int s, int m, int k);

/// Expected-evaluation upper bound for the (1+1) EA: e * (1 + ln m) * (mk)^k.
double ea_upper_bound(int m, int k);

/// Population size mu = ceil(c * m * 2^k) that contains every optimal block
/// with probability 1 - m*e^(-cm).
long long lemma1_population(int m, int k, double c);
double lemma1_failure(int m, double c);

/// Logistic take-over model: fraction of the population carrying an optimal
/// block after t GOM steps, 1 / (1 + (mu+1) e^(-t/mu)); local mutation slows
/// the diffusion by a factor of e.
double logistic_fraction(double t, double mu, bool with_mutation);

/// Take-over-time bound for GOMEA on the standard concatenated trap:
/// c * m^3 * 2^k evaluations.
double gomea_bound(int m, int k, double c);

/// Population size mu = ceil((c / p*) * m) for the generalized trap.
long long lemma2_population(int m, double p_star, double c);

/// Runtime bound for GOMEA with local mutation on the generalized trap:
/// full closed form and its dominant term (c/p*) * m^3.
struct Thm3Bound {
    double full = 0.0;
    double dominant = 0.0;
};
Thm3Bound thm3_bound(int m, const TrapParams& p, double c);

/// Diagnostic progress metric: how far the best block unitation has climbed
/// past the optimal-region entry point.
int level(int best_u, const TrapParams& p);

struct BoundReport {
    std::string formula;
    std::vector<std::pair<std::string, std::string>> inputs;
    double value = 0.0;

    /// "formula,key=value key=value,value" with 12 significant digits.
    std::string csv_row() const;
};

}  // namespace trapmix::bounds
