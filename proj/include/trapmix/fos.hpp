#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trapmix/trap.hpp"

namespace trapmix {

/// Family of Subsets linkage model: an ordered collection of index subsets
/// over genome positions. Subsets keep their construction order; the random
/// traversal GOM needs is a per-call shuffle in the algorithms code, not a
/// property of the model.
struct Fos {
    std::vector<std::vector<int>> subsets;
    int genome_length = 0;

    std::size_t size() const { return subsets.size(); }
    void validate() const;
};

/// The truthful marginal-product FOS for m blocks of k bits:
/// m subsets, the i-th being {i*k, ..., i*k + k - 1}.
Fos truthful_mp_fos(int m, int k);

/// True iff all subsets are pairwise disjoint.
bool is_marginal_product(const Fos& f);

/// True iff every subset lies wholly inside a single block's index range.
/// Throws if the FOS and instance genome lengths differ.
bool is_truthful(const Fos& f, const ProblemInstance& inst);

/// Parses the textual FOS format: one subset per line, comma-separated
/// 0-based indices. Blank lines and lines starting with '#' are skipped.
Fos parse_fos(std::string_view text, int genome_length);

/// One subset per line, comma-separated indices.
std::string to_text(const Fos& f);

}  // namespace trapmix
