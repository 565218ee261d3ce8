#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pichar {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

/// Exact quotient; throws if the division leaves a remainder.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error(std::string("non-exact division in ") + what);
    return q;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace pichar
