#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "spinbar/errors.hpp"
#include "spinbar/integers.hpp"
#include "spinbar/spincounts.hpp"
#include "spinbar/truncseries.hpp"

namespace spinbar {

/* ---- pentagonal classification and the R(n) oracle --------------------- */

/* Writes n as k(3k+1)/2 for the unique k in Z, if possible: 24n+1 must be
 * the square of some 6k+1. */
struct PentagonalClass {
    long long n = 0;
    bool pentagonal = false;
    long long k = 0; // meaningful iff pentagonal
    int k_mod4() const { return static_cast<int>(((k % 4) + 4) % 4); }
};

inline PentagonalClass pentagonal_class(long long n) {
    if (n < 0) throw std::invalid_argument("pentagonal_class: n must be >= 0");
    PentagonalClass c;
    c.n = n;
    const long long disc = 24 * n + 1;
    const long long s = isqrt_ll(disc);
    if (s * s != disc) return c;
    c.pentagonal = true;
    c.k = (s % 6 == 1) ? (s - 1) / 6 : -(s + 1) / 6;
    return c;
}

/* Predicted residue mod 3 of the spin character count at n >= 1: zero off
 * the pentagonal support; on it, determined by k mod 4, with the symmetric
 * and alternating covers swapping the nonzero residues. */
inline int predicted_residue_mod3(long long n, Cover group) {
    if (n < 1) throw std::invalid_argument("predicted_residue_mod3: n must be >= 1");
    const PentagonalClass c = pentagonal_class(n);
    if (!c.pentagonal) return 0;
    const int k4 = c.k_mod4();
    const int sym = (k4 == 0 || k4 == 3) ? 1 : 2;
    return group == Cover::Symmetric ? sym : 3 - sym;
}

/* Number of representations n = (3m^2+m)/2 + 2k^2 with m in Z and
 * k >= k_min.  Deliberately a plain double loop so it stays an independent
 * oracle for the mod-2 characterizations. */
inline long long count_R(long long n, int k_min) {
    if (n < 0) throw std::invalid_argument("count_R: n must be >= 0");
    if (k_min != 0 && k_min != 1) throw std::invalid_argument("count_R: k_min must be 0 or 1");
    long long count = 0;
    for (long long m = 0;; ++m) {
        const long long pent_pos = m * (3 * m + 1) / 2;
        const long long pent_neg = m * (3 * m - 1) / 2;
        if (pent_neg > n && pent_pos > n) break;
        for (int sign = 0; sign < (m == 0 ? 1 : 2); ++sign) {
            const long long pent = sign == 0 ? pent_pos : pent_neg;
            if (pent > n) continue;
            for (long long k = k_min; pent + 2 * k * k <= n; ++k)
                if (pent + 2 * k * k == n) ++count;
        }
    }
    return count;
}

/* ---- quadratic residues ------------------------------------------------ */

/* Legendre symbol (a|p) for an odd prime p, by Euler's criterion. */
inline int legendre(long long a, long long p) {
    require_odd_prime(p, "legendre");
    long long base = a % p;
    if (base < 0) base += p;
    if (base == 0) return 0;
    long long result = 1, b = base, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

/* Residues r in [1, p-1] with (24r+1 | p) = -1; always exactly (p-1)/2 of
 * them (r -> 24r+1 is a bijection onto Z_p minus {1}). */
inline std::vector<long long> qnr_residues(long long p) {
    require_odd_prime(p, "qnr_residues");
    if (p < 5) throw invalid_prime_error("qnr_residues: requires p >= 5");
    std::vector<long long> out;
    for (long long r = 1; r < p; ++r)
        if (legendre(24 * r + 1, p) == -1) out.push_back(r);
    if (static_cast<long long>(out.size()) != (p - 1) / 2)
        throw exactness_error("qnr_residues: expected (p-1)/2 residues");
    return out;
}

/* ---- counters and families --------------------------------------------- */

/* The counting functions that congruence families can refer to. */
enum class Counter {
    PartitionFn,        // p(n)
    StrictPartitionFn,  // q(n)
    FShat,              // spin characters of the symmetric cover
    FAhat,              // spin characters of the alternating cover
    FPbar,              // p-bar-cores
    FPbarPlus,          // positive p-bar-cores
    FPbarMinus,         // negative p-bar-cores
    FDefectZeroShat,    // p-defect-zero spin characters, symmetric cover
    FDefectZeroAhat,    // p-defect-zero spin characters, alternating cover
    FPosDefectShat,     // positive-p-defect spin characters, symmetric cover
    FPosDefectAhat,     // positive-p-defect spin characters, alternating cover
};

inline bool counter_needs_prime(Counter c) {
    switch (c) {
        case Counter::PartitionFn:
        case Counter::StrictPartitionFn:
        case Counter::FShat:
        case Counter::FAhat:
            return false;
        default:
            return true;
    }
}

/* Coefficient stream of a counter, as a truncated series. */
inline TruncSeries counter_series(Counter c, std::optional<long long> p, std::size_t order) {
    if (counter_needs_prime(c) && !p)
        throw std::invalid_argument("counter_series: this counter requires p");
    switch (c) {
        case Counter::PartitionFn:
            return invert(pochhammer(+1, 1, 1, order));
        case Counter::StrictPartitionFn:
            return pochhammer(-1, 1, 1, order);
        case Counter::FShat:
            return gf_spin_chars(Cover::Symmetric, order);
        case Counter::FAhat:
            return gf_spin_chars(Cover::Alternating, order);
        case Counter::FPbar:
            return gf_bar_core(*p, order);
        case Counter::FPbarPlus:
            return gf_bar_core_signed(*p, order).first;
        case Counter::FPbarMinus:
            return gf_bar_core_signed(*p, order).second;
        case Counter::FDefectZeroShat:
            return gf_defect_zero(Cover::Symmetric, *p, order);
        case Counter::FDefectZeroAhat:
            return gf_defect_zero(Cover::Alternating, *p, order);
        case Counter::FPosDefectShat:
            return sub(gf_spin_chars(Cover::Symmetric, order),
                       gf_defect_zero(Cover::Symmetric, *p, order));
        case Counter::FPosDefectAhat:
            return sub(gf_spin_chars(Cover::Alternating, order),
                       gf_defect_zero(Cover::Alternating, *p, order));
    }
    throw std::logic_error("counter_series: unreachable");
}

/* How a family is checked: plain vanishing of counter(A n + B) mod M, or a
 * full characterization of counter(n) mod M against an independent oracle
 * (the R representation count mod 2, or the pentagonal residue table mod 3).
 * Characterizations require A = 1, B = 0 and start at n = 1. */
enum class CheckKind { Vanishing, MatchCountR, MatchPentagonalResidue };

struct CongruenceFamily {
    Counter counter = Counter::PartitionFn;
    std::optional<long long> p; // set iff the counter is p-dependent
    long long A = 1;
    long long B = 0;
    Int M = 2;
    CheckKind kind = CheckKind::Vanishing;
    std::string source; // statement id, or "CANDIDATE" for search results
};

inline CongruenceFamily make_family(Counter c, std::optional<long long> p, long long A,
                                    long long B, Int M, CheckKind kind, std::string source) {
    if (A < 1 || B < 0 || B >= A)
        throw std::invalid_argument("make_family: need A >= 1 and 0 <= B < A");
    if (M < 2) throw std::invalid_argument("make_family: need M >= 2");
    if (kind != CheckKind::Vanishing) {
        if (A != 1 || B != 0)
            throw std::invalid_argument("make_family: characterizations need A = 1, B = 0");
        if (c != Counter::FShat && c != Counter::FAhat)
            throw std::invalid_argument(
                "make_family: characterizations apply to the spin-character counters only");
    }
    if (counter_needs_prime(c)) {
        if (!p) throw std::invalid_argument("make_family: counter requires p");
        require_odd_prime(*p, "make_family");
    }
    return CongruenceFamily{c, p, A, B, std::move(M), kind, std::move(source)};
}

struct VerificationReport {
    CongruenceFamily family;
    long long n_max = 0;
    bool holds = false;
    std::optional<long long> first_counterexample; // evaluated index A*n+B
};

/* Check one family for all progression steps up to n_max (characterizations
 * start at n = 1, vanishing families at n = 0). */
inline VerificationReport verify_family(const CongruenceFamily& fam, long long n_max) {
    if (n_max < 0) throw std::invalid_argument("verify_family: n_max must be >= 0");
    const std::size_t order = static_cast<std::size_t>(fam.A * n_max + fam.B);
    const TruncSeries series = counter_series(fam.counter, fam.p, order);

    VerificationReport rep;
    rep.family = fam;
    rep.n_max = n_max;
    rep.holds = true;

    const long long n_start = fam.kind == CheckKind::Vanishing ? 0 : 1;
    for (long long n = n_start; n <= n_max; ++n) {
        const std::size_t idx = static_cast<std::size_t>(fam.A * n + fam.B);
        Int residue = series[idx] % fam.M;
        if (residue < 0) residue += fam.M;
        bool ok = true;
        switch (fam.kind) {
            case CheckKind::Vanishing:
                ok = residue == 0;
                break;
            case CheckKind::MatchCountR: {
                const int k_min = fam.counter == Counter::FShat ? 0 : 1;
                ok = residue == count_R(n, k_min) % 2;
                break;
            }
            case CheckKind::MatchPentagonalResidue: {
                const Cover g =
                    fam.counter == Counter::FShat ? Cover::Symmetric : Cover::Alternating;
                ok = residue == predicted_residue_mod3(n, g);
                break;
            }
        }
        if (!ok) {
            rep.holds = false;
            rep.first_counterexample = static_cast<long long>(idx);
            break;
        }
    }
    return rep;
}

/* ---- statement registry ------------------------------------------------ */

/* Corollary-3.3/3.8 shape: for p prime with p = 5 or 11 (mod 24), the p-1
 * families counter(p^2 n + p r + (p^2-1)/24) = 0 (mod 2), r = 1..p-1, for
 * both spin-character counters. */
inline std::vector<CongruenceFamily> mod2_family(long long p) {
    require_odd_prime(p, "mod2_family");
    if (p % 24 != 5 && p % 24 != 11)
        throw wrong_residue_class_error("mod2_family: p must be 5 or 11 mod 24, got p = " +
                                        std::to_string(p) + " (" + std::to_string(p % 24) +
                                        " mod 24)");
    std::vector<CongruenceFamily> out;
    for (Counter c : {Counter::FShat, Counter::FAhat}) {
        const std::string src = c == Counter::FShat ? "corollary-3.3" : "corollary-3.8";
        for (long long r = 1; r < p; ++r)
            out.push_back(make_family(c, std::nullopt, p * p, p * r + (p * p - 1) / 24, 2,
                                      CheckKind::Vanishing, src));
    }
    return out;
}

inline const std::vector<std::string>& all_sources() {
    static const std::vector<std::string> ids = {
        "theorem-1.1",    "theorem-3.1",    "theorem-3.5",    "corollary-3.3",
        "corollary-3.6",  "theorem-3.7",    "theorem-3.9",    "corollary-3.8",
        "corollary-3.10", "theorem-4.1",    "theorem-4.3",    "corollary-4.3a",
        "theorem-4.5",    "corollary-4.5a",
    };
    return ids;
}

/* Families asserted by a given statement id.  p-dependent statements take
 * the prime; p-independent ones ignore it. */
inline std::vector<CongruenceFamily> statement_families(const std::string& source,
                                                        std::optional<long long> p) {
    auto need_p = [&]() -> long long {
        if (!p) throw std::invalid_argument("statement_families: " + source + " requires p");
        return *p;
    };
    auto qnr_vanishing = [&](Counter c, Int M) {
        const long long pp = need_p();
        if (pp < 5) throw invalid_prime_error("statement_families: requires p >= 5");
        std::vector<CongruenceFamily> out;
        for (long long r : qnr_residues(pp))
            out.push_back(make_family(c, counter_needs_prime(c) ? std::optional<long long>(pp)
                                                                : std::nullopt,
                                      pp, r, M, CheckKind::Vanishing, source));
        return out;
    };

    if (source == "theorem-1.1")
        return {make_family(Counter::PartitionFn, std::nullopt, 5, 4, 5, CheckKind::Vanishing, source),
                make_family(Counter::PartitionFn, std::nullopt, 7, 5, 7, CheckKind::Vanishing, source),
                make_family(Counter::PartitionFn, std::nullopt, 11, 6, 11, CheckKind::Vanishing, source)};
    if (source == "theorem-3.1")
        return {make_family(Counter::FShat, std::nullopt, 1, 0, 2, CheckKind::MatchCountR, source)};
    if (source == "theorem-3.7")
        return {make_family(Counter::FAhat, std::nullopt, 1, 0, 2, CheckKind::MatchCountR, source)};
    if (source == "theorem-3.5")
        return {make_family(Counter::FShat, std::nullopt, 1, 0, 3,
                            CheckKind::MatchPentagonalResidue, source)};
    if (source == "theorem-3.9")
        return {make_family(Counter::FAhat, std::nullopt, 1, 0, 3,
                            CheckKind::MatchPentagonalResidue, source)};
    if (source == "corollary-3.3" || source == "corollary-3.8") {
        auto fams = mod2_family(need_p());
        const Counter want = source == "corollary-3.3" ? Counter::FShat : Counter::FAhat;
        std::vector<CongruenceFamily> out;
        for (auto& f : fams)
            if (f.counter == want) out.push_back(std::move(f));
        return out;
    }
    if (source == "corollary-3.6") return qnr_vanishing(Counter::FShat, 3);
    if (source == "corollary-3.10") return qnr_vanishing(Counter::FAhat, 3);
    if (source == "theorem-4.1") return qnr_vanishing(Counter::FPbar, 2);
    if (source == "theorem-4.3") return qnr_vanishing(Counter::FDefectZeroShat, 3);
    if (source == "theorem-4.5") return qnr_vanishing(Counter::FDefectZeroAhat, 3);
    if (source == "corollary-4.3a") return qnr_vanishing(Counter::FPosDefectShat, 3);
    if (source == "corollary-4.5a") return qnr_vanishing(Counter::FPosDefectAhat, 3);
    throw std::invalid_argument("statement_families: unknown source id '" + source + "'");
}

/* ---- empirical search --------------------------------------------------- */

/* All (A, B, M) with A <= A_max, 0 <= B < A, M in moduli such that
 * counter(A n + B) = 0 (mod M) for every n in 0..n_max.  Results are
 * candidates only (flagged by source = "CANDIDATE"), sorted by (M, A, B). */
inline std::vector<CongruenceFamily> search_congruences(Counter counter,
                                                        std::optional<long long> p,
                                                        long long A_max,
                                                        const std::vector<Int>& moduli,
                                                        long long n_max) {
    if (A_max < 1) throw std::invalid_argument("search_congruences: A_max must be >= 1");
    if (n_max < 50)
        throw std::invalid_argument("search_congruences: n_max must be >= 50 to avoid "
                                    "vacuous matches");
    const std::size_t order = static_cast<std::size_t>(A_max * n_max + (A_max - 1));
    const TruncSeries series = counter_series(counter, p, order);
    std::vector<CongruenceFamily> out;
    for (const Int& m : moduli) {
        if (m < 2) throw std::invalid_argument("search_congruences: moduli must be >= 2");
        for (long long a = 1; a <= A_max; ++a)
            for (long long b = 0; b < a; ++b) {
                bool all_zero = true;
                for (long long n = 0; n <= n_max; ++n) {
                    if (series[static_cast<std::size_t>(a * n + b)] % m != 0) {
                        all_zero = false;
                        break;
                    }
                }
                if (all_zero)
                    out.push_back(make_family(counter, p, a, b, m, CheckKind::Vanishing,
                                              "CANDIDATE"));
            }
    }
    std::sort(out.begin(), out.end(), [](const CongruenceFamily& x, const CongruenceFamily& y) {
        return std::tie(x.M, x.A, x.B) < std::tie(y.M, y.A, y.B);
    });
    return out;
}

} // namespace spinbar
