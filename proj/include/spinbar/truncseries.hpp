#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spinbar/errors.hpp"
#include "spinbar/integers.hpp"

namespace spinbar {

/* Formal power series in q over Int, truncated at a fixed order N: exactly
 * the coefficients of q^0 .. q^N are stored.  Orders never change
 * implicitly; every binary operation demands equal orders. */
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : c_(order + 1) {}

    static TruncSeries zero(std::size_t order) { return TruncSeries(order); }

    static TruncSeries one(std::size_t order) {
        TruncSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    static TruncSeries monomial(std::size_t order, std::size_t i, Int coefficient) {
        if (i > order) throw std::invalid_argument("monomial: exponent exceeds order");
        TruncSeries s(order);
        s.c_[i] = std::move(coefficient);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Int& operator[](std::size_t i) const { return c_[i]; }
    Int& coeff(std::size_t i) { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return c_ != o.c_; }

    std::size_t nonzero_count() const {
        std::size_t k = 0;
        for (const Int& x : c_)
            if (x != 0) ++k;
        return k;
    }

private:
    std::vector<Int> c_;
};

namespace detail {
inline void require_same_order(const TruncSeries& a, const TruncSeries& b, const char* op) {
    if (a.order() != b.order())
        throw order_mismatch_error(std::string(op) + ": orders " + std::to_string(a.order()) +
                                   " and " + std::to_string(b.order()) + " differ");
}
} // namespace detail

inline TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
    detail::require_same_order(a, b, "add");
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r.coeff(i) = a[i] + b[i];
    return r;
}

inline TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
    detail::require_same_order(a, b, "sub");
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r.coeff(i) = a[i] - b[i];
    return r;
}

inline TruncSeries scale(const TruncSeries& a, const Int& k) {
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r.coeff(i) = a[i] * k;
    return r;
}

/* Cauchy product truncated at the common order.  Zero terms are skipped,
 * which changes nothing about the exact result, and the sparser operand is
 * put in the outer loop. */
inline TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    detail::require_same_order(a, b, "mul");
    const std::size_t n = a.order();
    const TruncSeries& outer = a.nonzero_count() <= b.nonzero_count() ? a : b;
    const TruncSeries& inner = &outer == &a ? b : a;
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (outer[i] == 0) continue;
        for (std::size_t j = 0; j + i <= n; ++j) {
            if (inner[j] == 0) continue;
            r.coeff(i + j) += outer[i] * inner[j];
        }
    }
    return r;
}

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return sub(a, b); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }

/* Multiplicative inverse; requires constant term +1 or -1 so that every
 * coefficient of the inverse is an exact integer. */
inline TruncSeries invert(const TruncSeries& a) {
    if (a[0] != 1 && a[0] != -1)
        throw invalid_inverse_error("invert: constant term must be +1 or -1, got " +
                                    a[0].str());
    const std::size_t n = a.order();
    const bool unit_pos = a[0] == 1;
    std::vector<std::size_t> nz; // nonzero indices of a, excluding 0
    for (std::size_t i = 1; i <= n; ++i)
        if (a[i] != 0) nz.push_back(i);
    TruncSeries b(n);
    b.coeff(0) = a[0];
    for (std::size_t m = 1; m <= n; ++m) {
        Int s = 0;
        for (std::size_t i : nz) {
            if (i > m) break;
            s += a[i] * b[m - i];
        }
        b.coeff(m) = unit_pos ? -s : s;
    }
    return b;
}

/* a^e by binary powering; negative exponents invert first. */
inline TruncSeries pow(const TruncSeries& a, long long e) {
    if (e < 0) return pow(invert(a), -e);
    TruncSeries r = TruncSeries::one(a.order());
    TruncSeries base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return r;
}

/* q -> q^k at unchanged order: coefficient of q^(k*i) becomes a_i. */
inline TruncSeries substitute_power(const TruncSeries& a, long long k) {
    if (k < 1) throw std::invalid_argument("substitute_power: k must be >= 1");
    const std::size_t n = a.order();
    TruncSeries r(n);
    for (std::size_t i = 0; i * static_cast<std::size_t>(k) <= n; ++i)
        r.coeff(i * static_cast<std::size_t>(k)) = a[i];
    return r;
}

/* q -> -q: negates odd-index coefficients. */
inline TruncSeries alternate(const TruncSeries& a) {
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i)
        r.coeff(i) = (i % 2 == 1) ? -a[i] : a[i];
    return r;
}

/* Least non-negative residues coefficientwise. */
inline TruncSeries reduce_mod(const TruncSeries& a, const Int& m) {
    if (m < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2");
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        Int v = a[i] % m;
        if (v < 0) v += m;
        r.coeff(i) = v;
    }
    return r;
}

/* Exact division by 2; an odd coefficient means a formula was transcribed
 * wrongly upstream, so it throws rather than rounding. */
inline TruncSeries halve_exact(const TruncSeries& a) {
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i] % 2 != 0)
            throw exactness_error("halve_exact: odd coefficient " + a[i].str() +
                                  " at index " + std::to_string(i));
        r.coeff(i) = a[i] / 2;
    }
    return r;
}

/* Truncation of prod_{k>=0} (1 - sign*q^(j+k*s)): the infinite Pochhammer
 * product (q^j; q^s) for sign=+1, (-q^j; q^s) for sign=-1.  Each binomial
 * factor is folded in place, high to low. */
inline TruncSeries pochhammer(int sign, long long j, long long s, std::size_t order) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("pochhammer: sign must be +1 or -1");
    if (j < 1 || s < 1)
        throw std::invalid_argument("pochhammer: j and s must be >= 1");
    TruncSeries r = TruncSeries::one(order);
    for (long long m = j; m <= static_cast<long long>(order); m += s) {
        const std::size_t mm = static_cast<std::size_t>(m);
        if (sign == 1) {
            for (std::size_t n = order; n >= mm; --n) {
                r.coeff(n) -= r[n - mm];
                if (n == mm) break;
            }
        } else {
            for (std::size_t n = order; n >= mm; --n) {
                r.coeff(n) += r[n - mm];
                if (n == mm) break;
            }
        }
    }
    return r;
}

} // namespace spinbar
