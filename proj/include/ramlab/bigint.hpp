#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ramlab {

// All ramification quantities are exact; q^e overflows 64 bits already for
// modest shapes, so everything arithmetic is cpp_int / cpp_rational.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, long exp) {
    Int r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// Exact division; throws if the division leaves a remainder.
inline Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("exact_div: not divisible");
    return q;
}

inline std::string to_string(const Int& x) { return x.str(); }

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace ramlab
