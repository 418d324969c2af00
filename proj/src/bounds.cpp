#include "trapmix/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "trapmix/numeric.hpp"

namespace trapmix::bounds {

namespace {

// (mk)^k in long double; the double range covers every parameterization the
// experiments use, long double keeps 12 significant digits with headroom.
long double pow_mk_k(int m, int k) {
    long double exponent = static_cast<long double>(k) *
                           std::log(static_cast<long double>(m) * static_cast<long double>(k));
    if (exponent > 11000.0L) {
        throw std::invalid_argument("bound overflows: (mk)^k too large");
    }
    return std::exp(exponent);
}

void require_positive(int m, int k) {
    if (m < 1 || k < 1) {
        throw std::invalid_argument("bounds: m and k must be positive");
    }
}

}  // namespace

DriftBound ea_drift_lower_bound(int s, int m, int k) {
    require_positive(m, k);
    if (s < 1 || s > m) {
        throw std::invalid_argument("ea_drift_lower_bound: need 1 <= s <= m");
    }
    const long double n = static_cast<long double>(m) * static_cast<long double>(k);
    const long double log_flip = -static_cast<long double>(k) * std::log(n);
    const long double log_keep =
        static_cast<long double>(m - s) * static_cast<long double>(k) * std::log1p(-1.0L / n);
    DriftBound out;
    out.exact = static_cast<double>(static_cast<long double>(s) * std::exp(log_flip + log_keep));
    out.simplified_floor =
        static_cast<double>(static_cast<long double>(s) * std::exp(log_flip - 1.0L));
    return out;
}

double ea_upper_bound(int m, int k) {
    require_positive(m, k);
    const long double value = std::numbers::e_v<long double> *
                              (1.0L + std::log(static_cast<long double>(m))) * pow_mk_k(m, k);
    if (value > std::numeric_limits<double>::max()) {
        throw std::invalid_argument("ea_upper_bound overflows double range");
    }
    return static_cast<double>(value);
}

long long lemma1_population(int m, int k, double c) {
    require_positive(m, k);
    if (!(c > 0.0)) {
        throw std::invalid_argument("lemma1_population: c must be positive");
    }
    double mu = exact_ceil(c * static_cast<double>(m) * std::ldexp(1.0, k));
    if (mu > 9.0e18) {
        throw std::invalid_argument("lemma1_population overflows");
    }
    return static_cast<long long>(mu);
}

double lemma1_failure(int m, double c) {
    if (m < 1 || !(c > 0.0)) {
        throw std::invalid_argument("lemma1_failure: need m >= 1 and c > 0");
    }
    double eps = static_cast<double>(m) * std::exp(-c * static_cast<double>(m));
    return std::min(eps, 1.0);
}

double logistic_fraction(double t, double mu, bool with_mutation) {
    if (!(t >= 0.0) || !(mu >= 1.0)) {
        throw std::invalid_argument("logistic_fraction: need t >= 0 and mu >= 1");
    }
    const double scale = with_mutation ? std::numbers::e * mu : mu;
    return 1.0 / (1.0 + (mu + 1.0) * std::exp(-t / scale));
}

double gomea_bound(int m, int k, double c) {
    require_positive(m, k);
    if (!(c > 0.0)) {
        throw std::invalid_argument("gomea_bound: c must be positive");
    }
    return c * static_cast<double>(m) * static_cast<double>(m) * static_cast<double>(m) *
           std::ldexp(1.0, k);
}

long long lemma2_population(int m, double p_star, double c) {
    if (m < 1 || !(c > 0.0)) {
        throw std::invalid_argument("lemma2_population: need m >= 1 and c > 0");
    }
    if (!(p_star > 0.0 && p_star <= 1.0)) {
        throw std::invalid_argument("lemma2_population: p_star must lie in (0, 1]");
    }
    double mu = exact_ceil(c / p_star * static_cast<double>(m));
    if (mu > 9.0e18) {
        throw std::invalid_argument("lemma2_population overflows");
    }
    return static_cast<long long>(mu);
}

Thm3Bound thm3_bound(int m, const TrapParams& p, double c) {
    p.validate();
    if (m < 2) {
        throw std::invalid_argument("thm3_bound: m must be at least 2");
    }
    if (!(c > 0.0)) {
        throw std::invalid_argument("thm3_bound: c must be positive");
    }
    const double ps = p_star(p, TrapShape::generalized);
    const double ratio = c / ps;
    const double levels = exact_floor((p.b - p.a) * static_cast<double>(p.k - p.z) / p.b);
    const double m_ln_m = static_cast<double>(m) * std::log(static_cast<double>(m));
    const double e = std::numbers::e;

    Thm3Bound out;
    out.dominant = ratio * static_cast<double>(m) * static_cast<double>(m) * static_cast<double>(m);
    out.full = levels * m_ln_m * (e * static_cast<double>(p.k) * (1.0 + ratio) + ratio * e * m_ln_m) +
               out.dominant;
    return out;
}

int level(int best_u, const TrapParams& p) {
    if (best_u < 0 || best_u > p.k) {
        throw std::out_of_range("level: unitation out of [0, k]");
    }
    return std::max(0, best_u - region_start(p));
}

std::string BoundReport::csv_row() const {
    std::ostringstream out;
    out << formula << ',';
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (i > 0) out << ' ';
        out << inputs[i].first << '=' << inputs[i].second;
    }
    out << ',' << format_real(value);
    return out.str();
}

}  // namespace trapmix::bounds
