#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "trapmix/bitstring.hpp"

namespace trapmix {

enum class TrapShape { standard, generalized, tailed };

const char* to_string(TrapShape shape);
TrapShape trap_shape_from_string(std::string_view name);

/// Trap subfunction over a k-bit block, as a function of the block's
/// unitation u: local optimum a at u=0, global optimum b at u=k, slopes
/// meeting at u=z (where the value is 0 for the standard/generalized shapes).
///
/// The standard trap is the special case (a, b, z) = (k-1, k, k-1). For k=1
/// this degenerates to (0, 1, 0), i.e. a one-bit OneMax block; that is the
/// only configuration where a=0 and z=0 are accepted.
struct TrapParams {
    int k = 0;
    double a = 0.0;
    double b = 0.0;
    int z = 0;

    static TrapParams standard(int k);
    void validate() const;

    friend bool operator==(const TrapParams&, const TrapParams&) = default;
};

/// Concatenation of m independent trap blocks; genome length is m*k.
struct ProblemInstance {
    int m = 0;
    TrapParams params;
    TrapShape shape = TrapShape::standard;

    static ProblemInstance standard(int m, int k);
    static ProblemInstance generalized(int m, int k, double a, double b, int z);
    static ProblemInstance tailed(int m, int k, double a, double b, int z);

    int genome_length() const { return m * params.k; }
    void validate() const;

    /// Plain-text key=value echo: "shape=... m=... k=... a=... b=... z=...".
    std::string describe() const;
};

/// Counts full-genome fitness evaluations; the unit in which all runtimes
/// and bounds are reported.
struct EvalCounter {
    std::uint64_t count = 0;
};

/// Subfunction value at unitation u. Throws if u is outside [0, k].
double trap_value(int u, const TrapParams& p, TrapShape shape);

/// Sum of trap_value over the m blocks; increments the counter by exactly 1.
double concatenated_fitness(const BitString& x, const ProblemInstance& inst, EvalCounter& counter);

bool is_global_optimum(const BitString& x, const ProblemInstance& inst);

/// Lowest unitation whose subfunction value exceeds the local optimum a;
/// ceil(a*(k-z)/b) + z, with the ceiling snapped for rational inputs.
int region_start(const TrapParams& p);

/// True iff a block with unitation u lies in the optimal region. For the
/// tailed shape the region is [z+1, k] by construction.
bool in_optimal_region(int u, const TrapParams& p, TrapShape shape);

/// Probability that a uniformly random k-bit block lies in the optimal
/// region: the exact binomial tail sum_{j>=region_start} C(k,j) / 2^k.
double p_star(const TrapParams& p, TrapShape shape);

/// Number of blocks of x whose unitation lies in the optimal region.
int count_region_blocks(const BitString& x, const ProblemInstance& inst);

/// Number of all-ones blocks of x.
int count_optimal_blocks(const BitString& x, const ProblemInstance& inst);

}  // namespace trapmix
