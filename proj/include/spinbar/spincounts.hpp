#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinbar/barcomb.hpp"
#include "spinbar/errors.hpp"
#include "spinbar/integers.hpp"
#include "spinbar/truncseries.hpp"

namespace spinbar {

/* Which double cover is being counted: of the symmetric group or of the
 * alternating group. */
enum class Cover { Symmetric, Alternating };

/* ---- spin character counts ------------------------------------------- */

/* Number of irreducible spin characters indexed by bar partitions of n:
 * |positive| + 2|negative| for the symmetric cover, 2|positive| +
 * |negative| for the alternating cover (self-associate characters restrict
 * reducibly, pairs restrict irreducibly, and vice versa). */
inline Int count_spin_chars(int n, Cover group) {
    Int plus = 0, minus = 0;
    for (const auto& lambda : enumerate_bar_partitions(n)) {
        if (bar_sign(lambda) == SignedBarClass::Positive)
            ++plus;
        else
            ++minus;
    }
    return group == Cover::Symmetric ? plus + 2 * minus : 2 * plus + minus;
}

/* Generating function of the spin character counts:
 *   (q^2;q^2) / (q;q) * (3/2 -+ 1/2 * (q^2;q^2)^2 / (q^4;q^4))
 * with '-' for the symmetric cover and '+' for the alternating one.  The
 * half-integer factors are handled by computing twice the series in Int and
 * halving exactly. */
inline TruncSeries gf_spin_chars(Cover group, std::size_t order) {
    const TruncSeries q2 = pochhammer(+1, 2, 2, order);
    const TruncSeries inv_q1 = invert(pochhammer(+1, 1, 1, order));
    const TruncSeries prefix = mul(q2, inv_q1);
    const TruncSeries theta = mul(mul(q2, q2), invert(pochhammer(+1, 4, 4, order)));
    const TruncSeries three = scale(TruncSeries::one(order), 3);
    const TruncSeries bracket =
        group == Cover::Symmetric ? sub(three, theta) : add(three, theta);
    return halve_exact(mul(prefix, bracket));
}

/* ---- bar-core counts -------------------------------------------------- */

/* Generating function of the number of p-bar-cores:
 *   (q^2;q^2) (q^p;q^p)^((p+1)/2) / ((q;q) (q^2p;q^2p)). */
inline TruncSeries gf_bar_core(long long p, std::size_t order) {
    require_odd_prime(p, "gf_bar_core");
    TruncSeries r = mul(pochhammer(+1, 2, 2, order), invert(pochhammer(+1, 1, 1, order)));
    r = mul(r, pow(pochhammer(+1, p, p, order), (p + 1) / 2));
    return mul(r, invert(pochhammer(+1, 2 * p, 2 * p, order)));
}

/* Generating functions (F+, F-) of p-bar-cores split by sign class.
 * The difference satisfies
 *   F+ - F- = (-q;-q) * (-q^p;-q^p)^((p-3)/2),
 * which follows from the runner-pair abacus parametrization of bar cores
 * and the Jacobi triple product; both halves are recovered exactly. */
inline std::pair<TruncSeries, TruncSeries> gf_bar_core_signed(long long p, std::size_t order) {
    require_odd_prime(p, "gf_bar_core_signed");
    const TruncSeries f = gf_bar_core(p, order);
    const TruncSeries alt_euler = alternate(pochhammer(+1, 1, 1, order));
    const TruncSeries alt_euler_p = substitute_power(alt_euler, p);
    const TruncSeries diff = mul(alt_euler, pow(alt_euler_p, (p - 3) / 2));
    return {halve_exact(add(f, diff)), halve_exact(sub(f, diff))};
}

/* Generating function of the number of spin characters of p-defect zero:
 * F+ + 2F- for the symmetric cover, 2F+ + F- for the alternating cover. */
inline TruncSeries gf_defect_zero(Cover group, long long p, std::size_t order) {
    auto [plus, minus] = gf_bar_core_signed(p, order);
    return group == Cover::Symmetric ? add(plus, scale(minus, 2))
                                     : add(scale(plus, 2), minus);
}

/* ---- degrees and defects ---------------------------------------------- */

namespace detail {
inline Int exact_quotient(const Int& num, const Int& den, const char* where) {
    if (num % den != 0)
        throw exactness_error(std::string(where) + ": " + num.str() +
                              " is not divisible by " + den.str());
    return num / den;
}
} // namespace detail

/* Degree via the bar-length product: 2^floor((n-m)/2) * n! / prod(bar lengths). */
inline Int spin_degree_bar_form(const BarPartition& lambda) {
    if (lambda.parts.empty())
        throw std::invalid_argument("spin_degree_bar_form: empty partition");
    const long long n = lambda.n();
    const long long m = static_cast<long long>(lambda.length());
    const Int core = detail::exact_quotient(factorial(n), bar_lengths(lambda).product(),
                                            "spin_degree_bar_form");
    return pow2((n - m) / 2) * core;
}

/* Degree via the difference-product closed form:
 *   2^floor((n-m)/2) * n!/(a_1!...a_m!) * prod_{i<j} (a_i-a_j)/(a_i+a_j),
 * evaluated as one exact quotient. */
inline Int spin_degree_product_form(const BarPartition& lambda) {
    if (lambda.parts.empty())
        throw std::invalid_argument("spin_degree_product_form: empty partition");
    const auto& a = lambda.parts;
    const long long n = lambda.n();
    const long long m = static_cast<long long>(lambda.length());
    Int num = factorial(n);
    Int den = 1;
    for (int part : a) den *= factorial(part);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            num *= a[i] - a[j];
            den *= a[i] + a[j];
        }
    num *= pow2((n - m) / 2);
    return detail::exact_quotient(num, den, "spin_degree_product_form");
}

/* p-defect: v_p(n!) - v_p(prod of bar lengths). */
inline long long p_defect(const BarPartition& lambda, long long p) {
    require_odd_prime(p, "p_defect");
    long long v = v_p_factorial(lambda.n(), p);
    for (int h : bar_lengths(lambda).multiset()) v -= v_p(Int(h), p);
    return v;
}

/* Degree and requested p-defects of the spin character(s) labelled by a bar
 * partition.  The two closed forms for the degree are both evaluated and
 * must agree. */
struct SpinDegree {
    BarPartition lambda;
    Int degree;
    std::map<long long, long long> defects;
};

inline SpinDegree spin_degree(const BarPartition& lambda, const std::vector<long long>& primes = {}) {
    SpinDegree d;
    d.lambda = lambda;
    d.degree = spin_degree_bar_form(lambda);
    const Int check = spin_degree_product_form(lambda);
    if (check != d.degree)
        throw exactness_error("spin_degree: closed forms disagree: " + d.degree.str() +
                              " vs " + check.str());
    for (long long p : primes) d.defects[p] = p_defect(lambda, p);
    return d;
}

/* ---- tabulated counts -------------------------------------------------- */

enum class CountSource { Enumeration, Series };

struct SpinCountRecord {
    struct PerPrime {
        long long p = 0;
        Int f_pbar;          // number of p-bar-cores of n
        Int f_pbar_plus;     // positive sign class
        Int f_pbar_minus;    // negative sign class
        Int f_defect0_shat;  // p-defect-zero spin characters, symmetric cover
        Int f_defect0_ahat;  // p-defect-zero spin characters, alternating cover
    };
    int n = 0;
    Int f_shat;
    Int f_ahat;
    std::vector<PerPrime> per_p;
};

namespace detail {
inline void check_record(const SpinCountRecord& r) {
    for (const auto& pp : r.per_p) {
        if (pp.f_pbar != pp.f_pbar_plus + pp.f_pbar_minus ||
            pp.f_defect0_shat != pp.f_pbar_plus + 2 * pp.f_pbar_minus ||
            pp.f_defect0_ahat != 2 * pp.f_pbar_plus + pp.f_pbar_minus ||
            pp.f_defect0_shat + pp.f_defect0_ahat != 3 * pp.f_pbar)
            throw exactness_error("spin_count_table: record invariants violated at n = " +
                                  std::to_string(r.n) + ", p = " + std::to_string(pp.p));
    }
}
} // namespace detail

/* One record per n in 0..n_max.  Source Series uses the generating
 * functions; source Enumeration classifies every bar partition of each n
 * directly (only sensible for small n_max). */
inline std::vector<SpinCountRecord> spin_count_table(int n_max,
                                                     const std::vector<long long>& primes,
                                                     CountSource source) {
    if (n_max < 0) throw std::invalid_argument("spin_count_table: n_max must be >= 0");
    for (long long p : primes) require_odd_prime(p, "spin_count_table");
    std::vector<SpinCountRecord> out(static_cast<std::size_t>(n_max) + 1);

    if (source == CountSource::Series) {
        const std::size_t ord = static_cast<std::size_t>(n_max);
        const TruncSeries fs = gf_spin_chars(Cover::Symmetric, ord);
        const TruncSeries fa = gf_spin_chars(Cover::Alternating, ord);
        std::vector<std::pair<TruncSeries, TruncSeries>> signed_cores;
        signed_cores.reserve(primes.size());
        for (long long p : primes) signed_cores.push_back(gf_bar_core_signed(p, ord));
        for (int n = 0; n <= n_max; ++n) {
            auto& r = out[static_cast<std::size_t>(n)];
            r.n = n;
            r.f_shat = fs[static_cast<std::size_t>(n)];
            r.f_ahat = fa[static_cast<std::size_t>(n)];
            for (std::size_t k = 0; k < primes.size(); ++k) {
                SpinCountRecord::PerPrime pp;
                pp.p = primes[k];
                pp.f_pbar_plus = signed_cores[k].first[static_cast<std::size_t>(n)];
                pp.f_pbar_minus = signed_cores[k].second[static_cast<std::size_t>(n)];
                pp.f_pbar = pp.f_pbar_plus + pp.f_pbar_minus;
                pp.f_defect0_shat = pp.f_pbar_plus + 2 * pp.f_pbar_minus;
                pp.f_defect0_ahat = 2 * pp.f_pbar_plus + pp.f_pbar_minus;
                r.per_p.push_back(std::move(pp));
            }
            detail::check_record(r);
        }
        return out;
    }

    for (int n = 0; n <= n_max; ++n) {
        auto& r = out[static_cast<std::size_t>(n)];
        r.n = n;
        Int plus = 0, minus = 0;
        const auto bars = enumerate_bar_partitions(n);
        for (const auto& lambda : bars)
            (bar_sign(lambda) == SignedBarClass::Positive ? plus : minus) += 1;
        r.f_shat = plus + 2 * minus;
        r.f_ahat = 2 * plus + minus;
        for (long long p : primes) {
            SpinCountRecord::PerPrime pp;
            pp.p = p;
            pp.f_pbar_plus = 0;
            pp.f_pbar_minus = 0;
            for (const auto& lambda : bars) {
                if (!is_p_bar_core(lambda, p)) continue;
                (bar_sign(lambda) == SignedBarClass::Positive ? pp.f_pbar_plus
                                                              : pp.f_pbar_minus) += 1;
            }
            pp.f_pbar = pp.f_pbar_plus + pp.f_pbar_minus;
            pp.f_defect0_shat = pp.f_pbar_plus + 2 * pp.f_pbar_minus;
            pp.f_defect0_ahat = 2 * pp.f_pbar_plus + pp.f_pbar_minus;
            r.per_p.push_back(std::move(pp));
        }
        detail::check_record(r);
    }
    return out;
}

} // namespace spinbar
