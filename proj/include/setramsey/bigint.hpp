#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "setramsey/errors.hpp"

namespace setramsey {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

/// C(n, k) as an exact big integer; 0 when k > n.
inline BigInt big_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= BigInt(n - i);
        result /= BigInt(i + 1); // exact at every step: product of j consecutive integers is divisible by j!
    }
    return result;
}

inline BigInt big_factorial(std::uint64_t n) {
    BigInt result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

/// ceil(p / q) for q > 0.
inline BigInt ceil_div(const BigInt& p, const BigInt& q) {
    if (q <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
    BigInt quot = p / q;
    if (p % q != 0 && p > 0) ++quot;
    return quot;
}

/// floor(p / q) for q > 0.
inline BigInt floor_div(const BigInt& p, const BigInt& q) {
    if (q <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
    BigInt quot = p / q;
    if (p % q != 0 && p < 0) --quot;
    return quot;
}

inline BigInt ceil_rational(const BigRational& x) {
    return ceil_div(numerator(x), denominator(x));
}

inline BigInt floor_rational(const BigRational& x) {
    return floor_div(numerator(x), denominator(x));
}

/// Largest t >= 0 with t^k * q <= p, i.e. floor((p/q)^(1/k)). Requires p >= 0, q > 0, k >= 1.
inline BigInt floor_root_rational(const BigInt& p, const BigInt& q, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("floor_root_rational: k must be >= 1");
    if (p < 0 || q <= 0) throw std::invalid_argument("floor_root_rational: requires p >= 0, q > 0");
    if (p == 0) return 0;
    // bracket: (p/q) < 2^bits(p), so t < 2^(bits(p)/k + 1)
    const std::uint64_t bits = static_cast<std::uint64_t>(msb(p)) + 1;
    BigInt hi = BigInt(1) << static_cast<unsigned>(bits / k + 2);
    BigInt lo = 0;
    while (lo < hi) { // invariant: lo^k*q <= p < (hi+1)^k*q is restored at exit
        BigInt mid = (lo + hi + 1) / 2;
        if (big_pow(mid, k) * q <= p)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace setramsey
