#pragma once

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "spinbar/errors.hpp"

namespace spinbar {

/* Exact arbitrary-precision signed integer used for every coefficient and
 * count in the library. */
using Int = boost::multiprecision::cpp_int;

inline Int factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long long k = 2; k <= n; ++k) r *= k;
    return r;
}

/* Floor of sqrt(x) for x >= 0, exact (no floating-point rounding leaks). */
inline long long isqrt_ll(long long x) {
    if (x < 0) throw std::invalid_argument("isqrt_ll: negative argument");
    if (x == 0) return 0;
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && s > x / s) --s;
    while ((s + 1) <= x / (s + 1)) ++s;
    return s;
}

inline bool is_square_ll(long long x) {
    if (x < 0) return false;
    long long s = isqrt_ll(x);
    return s * s == x;
}

/* Trial-division primality check restricted to odd primes (2 is rejected). */
inline bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline void require_odd_prime(long long p, const char* where) {
    if (!is_odd_prime(p))
        throw invalid_prime_error(std::string(where) + ": p = " + std::to_string(p) +
                                  " is not an odd prime");
}

/* p-adic valuation of a nonzero integer. */
inline long long v_p(Int x, long long p) {
    if (x == 0) throw std::invalid_argument("v_p: zero has no finite valuation");
    long long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

/* v_p(n!) via Legendre's formula: sum of floor(n/p^i). */
inline long long v_p_factorial(long long n, long long p) {
    if (n < 0) throw std::invalid_argument("v_p_factorial: negative argument");
    long long v = 0;
    for (long long q = p; q <= n; q *= p) {
        v += n / q;
        if (q > n / p) break; // avoid overflow of q *= p
    }
    return v;
}

inline Int pow2(long long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    Int r = 1;
    return r << e;
}

} // namespace spinbar
