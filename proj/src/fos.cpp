#include "trapmix/fos.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace trapmix {

void Fos::validate() const {
    if (genome_length < 1) {
        throw std::invalid_argument("fos: genome length must be positive");
    }
    for (const auto& subset : subsets) {
        if (subset.empty()) {
            throw std::invalid_argument("fos: empty subset");
        }
        for (int index : subset) {
            if (index < 0 || index >= genome_length) {
                throw std::invalid_argument("fos: index out of range");
            }
        }
    }
}

Fos truthful_mp_fos(int m, int k) {
    if (m < 1 || k < 1) {
        throw std::invalid_argument("truthful_mp_fos: m and k must be positive");
    }
    Fos f;
    f.genome_length = m * k;
    f.subsets.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            subset[static_cast<std::size_t>(j)] = i * k + j;
        }
        f.subsets.push_back(std::move(subset));
    }
    return f;
}

bool is_marginal_product(const Fos& f) {
    std::set<int> seen;
    for (const auto& subset : f.subsets) {
        for (int index : subset) {
            if (!seen.insert(index).second) {
                return false;
            }
        }
    }
    return true;
}

bool is_truthful(const Fos& f, const ProblemInstance& inst) {
    if (f.genome_length != inst.genome_length()) {
        throw std::invalid_argument("is_truthful: genome length mismatch");
    }
    const int k = inst.params.k;
    for (const auto& subset : f.subsets) {
        const auto [lo, hi] = std::minmax_element(subset.begin(), subset.end());
        if (*lo / k != *hi / k) {
            return false;
        }
    }
    return true;
}

Fos parse_fos(std::string_view text, int genome_length) {
    Fos f;
    f.genome_length = genome_length;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        // Trim and skip blanks/comments.
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t' || line.front() == '\r')) {
            line.remove_prefix(1);
        }
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
            line.remove_suffix(1);
        }
        if (line.empty() || line.front() == '#') {
            if (pos > text.size()) break;
            continue;
        }

        std::vector<int> subset;
        std::size_t field_start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                std::string_view field = line.substr(field_start, i - field_start);
                while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
                    field.remove_prefix(1);
                }
                while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
                    field.remove_suffix(1);
                }
                int value = 0;
                auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
                if (ec != std::errc{} || ptr != field.data() + field.size()) {
                    throw std::invalid_argument("parse_fos: bad index on line " + std::to_string(line_no));
                }
                subset.push_back(value);
                field_start = i + 1;
            }
        }
        f.subsets.push_back(std::move(subset));
        if (pos > text.size()) break;
    }
    f.validate();
    return f;
}

std::string to_text(const Fos& f) {
    std::ostringstream out;
    for (const auto& subset : f.subsets) {
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (i > 0) out << ',';
            out << subset[i];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace trapmix
