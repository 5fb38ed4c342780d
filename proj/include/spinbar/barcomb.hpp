#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "spinbar/errors.hpp"
#include "spinbar/integers.hpp"

namespace spinbar {

/* Ordinary partition: non-increasing positive parts.  The empty vector is
 * the unique partition of 0. */
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts must be non-increasing");
        }
    }

    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    std::size_t length() const { return parts.size(); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
};

/* Bar partition: strictly decreasing positive parts (a partition into
 * distinct parts). */
struct BarPartition {
    std::vector<int> parts;

    BarPartition() = default;
    explicit BarPartition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1)
                throw std::invalid_argument("BarPartition: parts must be positive");
            if (i > 0 && parts[i] >= parts[i - 1])
                throw std::invalid_argument("BarPartition: parts must be strictly decreasing");
        }
    }

    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    std::size_t length() const { return parts.size(); }
    bool operator==(const BarPartition& o) const { return parts == o.parts; }
};

/* Sign class of a bar partition: Positive iff n - (number of parts) is
 * even.  Positive bar partitions index self-associate spin characters,
 * negative ones index associate pairs. */
enum class SignedBarClass { Positive, Negative };

inline SignedBarClass bar_sign(const BarPartition& lambda) {
    return (lambda.n() - static_cast<int>(lambda.length())) % 2 == 0
               ? SignedBarClass::Positive
               : SignedBarClass::Negative;
}

/* Row-structured bar lengths of the shifted diagram.  rows[i] lists the bar
 * lengths of row i in decreasing order; |rows[i]| equals the i-th part. */
struct BarLengthTable {
    std::vector<std::vector<int>> rows;

    std::size_t total_size() const {
        std::size_t t = 0;
        for (const auto& r : rows) t += r.size();
        return t;
    }

    /* All bar lengths as one multiset, sorted decreasing. */
    std::vector<int> multiset() const {
        std::vector<int> all;
        for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
        std::sort(all.begin(), all.end(), std::greater<int>());
        return all;
    }

    bool contains(int v) const {
        for (const auto& r : rows)
            for (int h : r)
                if (h == v) return true;
        return false;
    }

    Int product() const {
        Int p = 1;
        for (const auto& r : rows)
            for (int h : r) p *= h;
        return p;
    }
};

/* Bar lengths of row i for lambda = (a_1 > ... > a_m):
 *   {1..a_i}  union  {a_i + a_j : j > i}  minus one copy of each a_i - a_j.
 * Every difference lies in [1, a_i-1] and the differences are pairwise
 * distinct, so the removal is well defined. */
inline BarLengthTable bar_lengths(const BarPartition& lambda) {
    const auto& a = lambda.parts;
    BarLengthTable t;
    t.rows.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<char> removed(static_cast<std::size_t>(a[i]) + 1, 0);
        for (std::size_t j = i + 1; j < a.size(); ++j) removed[static_cast<std::size_t>(a[i] - a[j])] = 1;
        auto& row = t.rows[i];
        for (std::size_t j = i + 1; j < a.size(); ++j) row.push_back(a[i] + a[j]);
        for (int v = a[i]; v >= 1; --v)
            if (!removed[static_cast<std::size_t>(v)]) row.push_back(v);
    }
    return t;
}

/* All partitions of n in reverse-lexicographic (largest-part-first)
 * order: (n), (n-1,1), ..., (1,...,1). */
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            Partition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int k = std::min(max_part, remaining); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/* All bar partitions of n, reverse-lexicographic. */
inline std::vector<BarPartition> enumerate_bar_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_bar_partitions: n must be >= 0");
    std::vector<BarPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            BarPartition p;
            p.parts = cur;
            out.push_back(std::move(p));
            return;
        }
        for (int k = std::min(max_part, remaining); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k - 1);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/* Ordinary hook lengths, row by row. */
inline std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    const auto& a = lambda.parts;
    std::vector<std::vector<int>> hooks(a.size());
    const int width = a.empty() ? 0 : a[0];
    std::vector<int> col(static_cast<std::size_t>(width), 0);
    for (int part : a)
        for (int j = 0; j < part; ++j) ++col[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < a.size(); ++i) {
        hooks[i].resize(static_cast<std::size_t>(a[i]));
        for (int j = 0; j < a[i]; ++j)
            hooks[i][static_cast<std::size_t>(j)] =
                (a[i] - j - 1) + (col[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    }
    return hooks;
}

/* t-core test for ordinary partitions: no hook of length exactly t
 * (equivalently, none divisible by t). */
inline bool is_t_core(const Partition& lambda, int t) {
    if (t < 2) throw std::invalid_argument("is_t_core: t must be >= 2");
    for (const auto& row : hook_lengths(lambda))
        for (int h : row)
            if (h == t) return false;
    return true;
}

/* p-bar-core test: p does not occur among the bar lengths. */
inline bool is_p_bar_core(const BarPartition& lambda, long long p) {
    require_odd_prime(p, "is_p_bar_core");
    return !bar_lengths(lambda).contains(static_cast<int>(p));
}

/* The p-bar-cores of n, in the enumeration order of
 * enumerate_bar_partitions. */
inline std::vector<BarPartition> enumerate_p_bar_cores(int n, long long p) {
    require_odd_prime(p, "enumerate_p_bar_cores");
    std::vector<BarPartition> out;
    for (auto& lambda : enumerate_bar_partitions(n))
        if (is_p_bar_core(lambda, p)) out.push_back(std::move(lambda));
    return out;
}

} // namespace spinbar
