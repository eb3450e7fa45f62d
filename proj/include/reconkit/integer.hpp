#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "reconkit/errors.hpp"

namespace reconkit {

/// Arbitrary precision signed integer used by every reconstruction pipeline.
using Integer = boost::multiprecision::cpp_int;
/// Exact rationals, used only by the explicit chain-sum expansions.
using Rational = boost::multiprecision::cpp_rational;

/// Fixed width counter for subgraph counts. Arithmetic on it goes through the
/// checked helpers below.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("counter overflow in addition");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("counter overflow in multiplication");
    return r;
}

Integer factorial(int n);
Integer binomial(int n, int k);
/// Stirling number of the second kind S(n, k).
Integer stirling2(int n, int k);
/// Number of surjections from an n-set onto a k-set.
Integer surjections(int n, int k);

/// Returns num / den, throwing `Err` with `context` if the division is not exact.
template <class Err>
Integer exact_div(const Integer& num, const Integer& den, const char* context) {
    if (den == 0) throw Err(std::string(context) + ": division by zero");
    Integer q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) {
        throw Err(std::string(context) + ": non-integral division " + num.str() + " / " + den.str());
    }
    return q;
}

/// True if `x` fits into a signed 64-bit integer.
inline bool fits_int64(const Integer& x) {
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace reconkit
