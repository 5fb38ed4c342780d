#pragma once

#include <string>
#include <vector>

#include "spinbar/errors.hpp"
#include "spinbar/integers.hpp"
#include "spinbar/truncseries.hpp"

namespace spinbar {

/* Both sides of a classical product/sum identity, built independently and
 * compared coefficientwise at a common truncation order. */
struct IdentityCheck {
    std::string name;
    std::string specialization;
    TruncSeries lhs; // sum side
    TruncSeries rhs; // product side
    bool matches = false;
};

namespace detail {
/* Multiply r in place by (1 + c*q^m), c in {+1,-1}; m = 0 means the scalar
 * factor (1 + c). */
inline void mul_binomial(TruncSeries& r, int c, long long m) {
    if (m < 0) throw ill_formed_specialization_error("negative exponent in product factor");
    if (m == 0) {
        r = scale(r, Int(1 + c));
        return;
    }
    if (m > static_cast<long long>(r.order())) return;
    const std::size_t mm = static_cast<std::size_t>(m);
    for (std::size_t n = r.order(); n >= mm; --n) {
        if (c == 1)
            r.coeff(n) += r[n - mm];
        else
            r.coeff(n) -= r[n - mm];
        if (n == mm) break;
    }
}

inline int sign_pow(int s, long long e) {
    if (s == 1) return 1;
    return (((e % 2) + 2) % 2 == 0) ? 1 : -1;
}
} // namespace detail

/* Euler's pentagonal sum  sum_{m in Z} (-1)^m q^{m(3m-1)/2}. */
inline TruncSeries pnt_sum_side(std::size_t order) {
    TruncSeries s(order);
    for (long long m = 0;; ++m) {
        const long long e_pos = m * (3 * m - 1) / 2;
        const long long e_neg = m * (3 * m + 1) / 2; // exponent for -m
        if (e_pos > static_cast<long long>(order) && e_neg > static_cast<long long>(order))
            break;
        const int c = m % 2 == 0 ? 1 : -1;
        if (e_pos <= static_cast<long long>(order))
            s.coeff(static_cast<std::size_t>(e_pos)) += c;
        if (m > 0 && e_neg <= static_cast<long long>(order))
            s.coeff(static_cast<std::size_t>(e_neg)) += c;
    }
    return s;
}

/* Pentagonal number theorem: sum side against (q;q). */
inline IdentityCheck pnt_check(std::size_t order) {
    IdentityCheck c{"pnt", "", pnt_sum_side(order), pochhammer(+1, 1, 1, order), false};
    c.matches = c.lhs == c.rhs;
    return c;
}

/* Jacobi triple product at z = z_sign * q^z_exp:
 *   sum_{n in Z} z^n q^{n^2}
 *     = prod_{n>=0} (1 - q^{2n+2})(1 + z q^{2n+1})(1 + z^{-1} q^{2n+1}).
 * Only z_exp in {0, 1} keeps both sides free of negative exponents. */
inline IdentityCheck jtp_check(int z_sign, long long z_exp, std::size_t order) {
    if (z_sign != 1 && z_sign != -1)
        throw ill_formed_specialization_error("jtp_check: z_sign must be +1 or -1");
    if (z_exp < 0 || z_exp > 1)
        throw ill_formed_specialization_error(
            "jtp_check: z_exp must be 0 or 1, otherwise a negative power of q survives");

    TruncSeries sum(order);
    for (long long n = 0;; ++n) {
        const long long e_pos = n * n + n * z_exp;
        const long long e_neg = n * n - n * z_exp;
        if (e_neg > static_cast<long long>(order)) break; // e_pos >= e_neg
        const int c = detail::sign_pow(z_sign, n);
        if (e_pos <= static_cast<long long>(order))
            sum.coeff(static_cast<std::size_t>(e_pos)) += c;
        if (n > 0 && e_neg <= static_cast<long long>(order))
            sum.coeff(static_cast<std::size_t>(e_neg)) += c;
    }

    TruncSeries prod = TruncSeries::one(order);
    for (long long n = 0;; ++n) {
        const long long m_even = 2 * n + 2;
        const long long m_hi = 2 * n + 1 + z_exp;
        const long long m_lo = 2 * n + 1 - z_exp;
        if (m_lo > static_cast<long long>(order) && m_even > static_cast<long long>(order))
            break;
        detail::mul_binomial(prod, -1, m_even);
        detail::mul_binomial(prod, z_sign, m_hi);
        detail::mul_binomial(prod, z_sign, m_lo);
    }

    IdentityCheck c{"jtp",
                    std::string("z=") + (z_sign == 1 ? "+" : "-") +
                        (z_exp == 0 ? "1" : "q"),
                    std::move(sum), std::move(prod), false};
    c.matches = c.lhs == c.rhs;
    return c;
}

/* Quintuple product identity at s = s_sign * q^s_exp, t = t_sign (+-1):
 *   sum_{n in Z} s^{(3n^2+n)/2} (t^{3n} - t^{-3n-1})
 *     = prod_{n>=1} (1-s^n)(1-s^n t)(1-s^{n-1} t^{-1})(1-s^{2n-1} t^2)(1-s^{2n-1} t^{-2}).
 * t = +1 collapses both sides to 0 (the n = 1 factor 1 - t^{-1} vanishes),
 * which is reported as a valid trivial match. */
inline IdentityCheck qpi_check(int s_sign, long long s_exp, int t_sign, std::size_t order) {
    if (s_sign != 1 && s_sign != -1)
        throw ill_formed_specialization_error("qpi_check: s_sign must be +1 or -1");
    if (s_exp < 1)
        throw ill_formed_specialization_error("qpi_check: s_exp must be >= 1");
    if (t_sign != 1 && t_sign != -1)
        throw ill_formed_specialization_error("qpi_check: only t = +1 or -1 is supported");

    TruncSeries sum(order);
    if (t_sign == -1) {
        for (long long n = 0;; ++n) {
            // gp(n) and gp(-n); t^{3v} - t^{-3v-1} = 2(-1)^v at t = -1
            const long long e_pos = s_exp * (n * (3 * n + 1) / 2);
            const long long e_neg = s_exp * (n * (3 * n - 1) / 2);
            if (e_neg > static_cast<long long>(order)) break;
            const int base = 2 * detail::sign_pow(-1, n);
            if (e_pos <= static_cast<long long>(order))
                sum.coeff(static_cast<std::size_t>(e_pos)) +=
                    base * detail::sign_pow(s_sign, n * (3 * n + 1) / 2);
            if (n > 0 && e_neg <= static_cast<long long>(order))
                sum.coeff(static_cast<std::size_t>(e_neg)) +=
                    base * detail::sign_pow(s_sign, n * (3 * n - 1) / 2);
        }
    }

    TruncSeries prod = TruncSeries::one(order);
    if (t_sign == 1) {
        prod = TruncSeries(order); // factor (1 - s^0 t^{-1}) = 0
    } else {
        for (long long n = 1;; ++n) {
            const long long m1 = s_exp * n;           // (1 - s^n)
            const long long m2 = s_exp * n;           // (1 - s^n t)      -> (1 + s^n)
            const long long m3 = s_exp * (n - 1);     // (1 - s^{n-1}/t)  -> (1 + s^{n-1})
            const long long m4 = s_exp * (2 * n - 1); // (1 - s^{2n-1} t^2) twice
            if (m3 > static_cast<long long>(order) && m1 > static_cast<long long>(order))
                break;
            detail::mul_binomial(prod, -detail::sign_pow(s_sign, n), m1);
            detail::mul_binomial(prod, detail::sign_pow(s_sign, n), m2);
            detail::mul_binomial(prod, detail::sign_pow(s_sign, n - 1), m3);
            detail::mul_binomial(prod, -detail::sign_pow(s_sign, 2 * n - 1), m4);
            detail::mul_binomial(prod, -detail::sign_pow(s_sign, 2 * n - 1), m4);
        }
    }

    IdentityCheck c{"qpi",
                    std::string("s=") + (s_sign == 1 ? "+" : "-") + "q" +
                        (s_exp == 1 ? "" : "^" + std::to_string(s_exp)) +
                        ", t=" + (t_sign == 1 ? "+1" : "-1"),
                    std::move(sum), std::move(prod), false};
    c.matches = c.lhs == c.rhs;
    return c;
}

/* 2 * sum_{n in Z} (-1)^{(3n^2+7n)/2} q^{(3n^2+n)/2}: the specialized
 * quintuple-product sum used for the mod-3 residue analysis; equals
 * 2 * alternate((q;q)) exactly. */
inline TruncSeries mod3_sum_side(std::size_t order) {
    TruncSeries s(order);
    auto addterm = [&](long long n) {
        const long long e = n * (3 * n + 1) / 2;
        if (e > static_cast<long long>(order)) return false;
        const long long sgn_exp = (3 * n * n + 7 * n) / 2;
        s.coeff(static_cast<std::size_t>(e)) += 2 * detail::sign_pow(-1, sgn_exp);
        return true;
    };
    for (long long n = 0;; ++n) {
        const bool a = addterm(n);
        const bool b = n > 0 ? addterm(-n) : true;
        if (!a && !b) break;
    }
    return s;
}

/* The standard battery of specializations. */
inline std::vector<IdentityCheck> check_all_identities(std::size_t order) {
    std::vector<IdentityCheck> out;
    out.push_back(pnt_check(order));
    out.push_back(jtp_check(+1, 0, order));
    out.push_back(jtp_check(-1, 0, order));
    out.push_back(jtp_check(+1, 1, order));
    out.push_back(jtp_check(-1, 1, order));
    out.push_back(qpi_check(-1, 1, -1, order));
    out.push_back(qpi_check(+1, 1, -1, order));
    out.push_back(qpi_check(+1, 1, +1, order));
    out.push_back(qpi_check(-1, 2, -1, order));
    return out;
}

} // namespace spinbar
