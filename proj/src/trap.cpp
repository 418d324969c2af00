#include "trapmix/trap.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trapmix/numeric.hpp"

namespace trapmix {

const char* to_string(TrapShape shape) {
    switch (shape) {
        case TrapShape::standard: return "standard";
        case TrapShape::generalized: return "generalized";
        case TrapShape::tailed: return "tailed";
    }
    return "unknown";
}

TrapShape trap_shape_from_string(std::string_view name) {
    if (name == "standard") return TrapShape::standard;
    if (name == "generalized") return TrapShape::generalized;
    if (name == "tailed") return TrapShape::tailed;
    throw std::invalid_argument("unknown trap shape: " + std::string(name));
}

TrapParams TrapParams::standard(int k) {
    if (k < 1) {
        throw std::invalid_argument("standard trap: k must be positive");
    }
    TrapParams p;
    p.k = k;
    p.a = static_cast<double>(k - 1);
    p.b = static_cast<double>(k);
    p.z = k - 1;
    return p;
}

void TrapParams::validate() const {
    if (k < 1 || k > 62) {
        throw std::invalid_argument("trap params: k must lie in [1, 62]");
    }
    if (!(a >= 0.0) || !(b > a)) {
        throw std::invalid_argument("trap params: need 0 <= a < b");
    }
    if (z < 0 || z > k - 1) {
        throw std::invalid_argument("trap params: need 0 <= z <= k-1");
    }
    // z=0 (and with it a=0) only arises for the degenerate k=1 standard trap.
    if (z == 0 && a != 0.0) {
        throw std::invalid_argument("trap params: z >= 1 required when a > 0");
    }
    if (a == 0.0 && z != 0) {
        throw std::invalid_argument("trap params: a > 0 required when z >= 1");
    }
}

ProblemInstance ProblemInstance::standard(int m, int k) {
    ProblemInstance inst;
    inst.m = m;
    inst.params = TrapParams::standard(k);
    inst.shape = TrapShape::standard;
    inst.validate();
    return inst;
}

ProblemInstance ProblemInstance::generalized(int m, int k, double a, double b, int z) {
    ProblemInstance inst;
    inst.m = m;
    inst.params = TrapParams{k, a, b, z};
    inst.shape = TrapShape::generalized;
    inst.validate();
    return inst;
}

ProblemInstance ProblemInstance::tailed(int m, int k, double a, double b, int z) {
    ProblemInstance inst;
    inst.m = m;
    inst.params = TrapParams{k, a, b, z};
    inst.shape = TrapShape::tailed;
    inst.validate();
    return inst;
}

void ProblemInstance::validate() const {
    if (m < 1) {
        throw std::invalid_argument("problem instance: m must be positive");
    }
    params.validate();
    if (shape == TrapShape::standard && params != TrapParams::standard(params.k)) {
        throw std::invalid_argument("problem instance: standard shape requires (a,b,z) = (k-1,k,k-1)");
    }
}

std::string ProblemInstance::describe() const {
    std::ostringstream out;
    out << "shape=" << to_string(shape) << " m=" << m << " k=" << params.k
        << " a=" << format_real(params.a) << " b=" << format_real(params.b)
        << " z=" << params.z;
    return out.str();
}

double trap_value(int u, const TrapParams& p, TrapShape shape) {
    if (u < 0 || u > p.k) {
        throw std::out_of_range("trap_value: unitation out of [0, k]");
    }
    if (u <= p.z) {
        // Slope down to 0 at u=z; a at u=0. For the degenerate z=0 case the
        // only point on this branch is u=0 with value a.
        return p.z == 0 ? p.a : p.a * static_cast<double>(p.z - u) / static_cast<double>(p.z);
    }
    if (shape == TrapShape::tailed) {
        return p.a + (p.b - p.a) * static_cast<double>(u - p.z) / static_cast<double>(p.k - p.z);
    }
    return p.b * static_cast<double>(u - p.z) / static_cast<double>(p.k - p.z);
}

double concatenated_fitness(const BitString& x, const ProblemInstance& inst, EvalCounter& counter) {
    const std::size_t k = static_cast<std::size_t>(inst.params.k);
    if (x.size() != static_cast<std::size_t>(inst.genome_length())) {
        throw std::invalid_argument("concatenated_fitness: genome length mismatch");
    }
    double total = 0.0;
    for (int i = 0; i < inst.m; ++i) {
        const std::size_t offset = static_cast<std::size_t>(i) * k;
        total += trap_value(unitation_in_range(x, offset, offset + k), inst.params, inst.shape);
    }
    counter.count += 1;
    return total;
}

bool is_global_optimum(const BitString& x, const ProblemInstance& inst) {
    if (x.size() != static_cast<std::size_t>(inst.genome_length())) {
        throw std::invalid_argument("is_global_optimum: genome length mismatch");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x.bit(i) == 0) {
            return false;
        }
    }
    return true;
}

int region_start(const TrapParams& p) {
    // ceil(a*(k-z)/b) >= 1 whenever a > 0; the max() only matters for the
    // degenerate a=0 block, whose region is [z+1, k].
    double q = p.a * static_cast<double>(p.k - p.z) / p.b;
    int ceiling = static_cast<int>(exact_ceil(q));
    return p.z + std::max(1, ceiling);
}

bool in_optimal_region(int u, const TrapParams& p, TrapShape shape) {
    if (u < 0 || u > p.k) {
        throw std::out_of_range("in_optimal_region: unitation out of [0, k]");
    }
    if (shape == TrapShape::tailed) {
        return u >= p.z + 1;
    }
    return u >= region_start(p);
}

double p_star(const TrapParams& p, TrapShape shape) {
    const int start = shape == TrapShape::tailed ? p.z + 1 : region_start(p);
    // Exact binomial tail; C(k,j) sums stay within unsigned __int128 for k <= 62.
    unsigned __int128 tail = 0;
    unsigned __int128 binom = 1;
    for (int j = 0; j <= p.k; ++j) {
        if (j >= start) {
            tail += binom;
        }
        binom = binom * static_cast<unsigned>(p.k - j) / static_cast<unsigned>(j + 1);
    }
    return static_cast<double>(std::ldexp(static_cast<long double>(tail), -p.k));
}

namespace {

int count_blocks_if(const BitString& x, const ProblemInstance& inst, bool optimal_only) {
    if (x.size() != static_cast<std::size_t>(inst.genome_length())) {
        throw std::invalid_argument("block count: genome length mismatch");
    }
    const std::size_t k = static_cast<std::size_t>(inst.params.k);
    int count = 0;
    for (int i = 0; i < inst.m; ++i) {
        const std::size_t offset = static_cast<std::size_t>(i) * k;
        const int u = unitation_in_range(x, offset, offset + k);
        if (optimal_only ? (u == inst.params.k) : in_optimal_region(u, inst.params, inst.shape)) {
            ++count;
        }
    }
    return count;
}

}  // namespace

int count_region_blocks(const BitString& x, const ProblemInstance& inst) {
    return count_blocks_if(x, inst, false);
}

int count_optimal_blocks(const BitString& x, const ProblemInstance& inst) {
    return count_blocks_if(x, inst, true);
}

}  // namespace trapmix
