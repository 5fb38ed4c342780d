#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "spinbar/barcomb.hpp"
#include "spinbar/errors.hpp"
#include "spinbar/integers.hpp"

namespace spinbar {

/* Bar abacus with p runners, indexed 0..p-1.  A part a = q*p + j places one
 * bead at position q on runner j; runners[j] holds the occupied positions in
 * increasing order. */
struct BarAbacus {
    long long p = 0;
    std::vector<std::vector<int>> runners;

    std::vector<std::size_t> bead_counts() const {
        std::vector<std::size_t> c;
        c.reserve(runners.size());
        for (const auto& r : runners) c.push_back(r.size());
        return c;
    }

    bool operator==(const BarAbacus& o) const { return p == o.p && runners == o.runners; }
};

inline BarAbacus abacus_from_bar_partition(const BarPartition& lambda, long long p) {
    require_odd_prime(p, "abacus_from_bar_partition");
    BarAbacus ab;
    ab.p = p;
    ab.runners.resize(static_cast<std::size_t>(p));
    for (int part : lambda.parts)
        ab.runners[static_cast<std::size_t>(part % p)].push_back(static_cast<int>(part / p));
    for (auto& r : ab.runners) std::sort(r.begin(), r.end());
    return ab;
}

namespace detail {
/* Structurally well formed: odd prime p, exactly p runners, positions
 * non-negative, strictly increasing within a runner, and no bead at
 * (runner 0, position 0), which would encode a zero part. */
inline void require_well_formed(const BarAbacus& ab, const char* where) {
    if (!is_odd_prime(ab.p))
        throw invalid_abacus_error(std::string(where) + ": p is not an odd prime");
    if (ab.runners.size() != static_cast<std::size_t>(ab.p))
        throw invalid_abacus_error(std::string(where) + ": expected " + std::to_string(ab.p) +
                                   " runners, got " + std::to_string(ab.runners.size()));
    for (std::size_t j = 0; j < ab.runners.size(); ++j) {
        const auto& r = ab.runners[j];
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] < 0)
                throw invalid_abacus_error(std::string(where) + ": negative position");
            if (i > 0 && r[i] <= r[i - 1])
                throw invalid_abacus_error(std::string(where) +
                                           ": positions must be strictly increasing");
        }
        if (j == 0 && !r.empty() && r[0] == 0)
            throw invalid_abacus_error(std::string(where) +
                                       ": bead at runner 0, position 0 encodes a zero part");
    }
}
} // namespace detail

/* The three p-bar-core conditions:
 *   (1) runner 0 carries no bead;
 *   (2) on every runner the beads are pushed down (positions 0..k-1);
 *   (3) runners j and p-j are never both occupied.
 * Throws invalid_abacus_error only for structurally malformed input. */
inline bool validate_bar_core(const BarAbacus& ab) {
    detail::require_well_formed(ab, "validate_bar_core");
    if (!ab.runners[0].empty()) return false;
    for (const auto& r : ab.runners)
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] != static_cast<int>(i)) return false;
    for (long long j = 1; 2 * j < ab.p; ++j)
        if (!ab.runners[static_cast<std::size_t>(j)].empty() &&
            !ab.runners[static_cast<std::size_t>(ab.p - j)].empty())
            return false;
    return true;
}

/* Decode any well-formed abacus back to its bar partition. */
inline BarPartition bar_partition_from_abacus(const BarAbacus& ab) {
    detail::require_well_formed(ab, "bar_partition_from_abacus");
    std::vector<int> parts;
    for (std::size_t j = 0; j < ab.runners.size(); ++j)
        for (int pos : ab.runners[j])
            parts.push_back(static_cast<int>(pos * ab.p) + static_cast<int>(j));
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return BarPartition(std::move(parts));
}

/* Text rendering: one column per runner, positions increasing upward, beads
 * as a filled dot, empty slots as a middle dot, runner indices underneath. */
inline std::string render_text(const BarAbacus& ab) {
    detail::require_well_formed(ab, "render_text");
    int max_pos = 0;
    bool any = false;
    for (const auto& r : ab.runners)
        if (!r.empty()) {
            any = true;
            max_pos = std::max(max_pos, r.back());
        }
    const int height = any ? max_pos + 1 : 1;
    std::size_t width = std::to_string(ab.p - 1).size();

    auto pad = [&](const std::string& cell, std::size_t display_len) {
        std::string s = cell;
        for (std::size_t k = display_len; k < width; ++k) s += ' ';
        return s;
    };

    std::string out;
    for (int pos = height - 1; pos >= 0; --pos) {
        for (std::size_t j = 0; j < ab.runners.size(); ++j) {
            const auto& r = ab.runners[j];
            const bool bead = std::binary_search(r.begin(), r.end(), pos);
            if (j > 0) out += ' ';
            out += pad(bead ? "●" : "·", 1);
        }
        out += '\n';
    }
    for (std::size_t j = 0; j < ab.runners.size(); ++j) {
        if (j > 0) out += ' ';
        const std::string label = std::to_string(j);
        out += pad(label, label.size());
    }
    out += '\n';
    return out;
}

} // namespace spinbar
