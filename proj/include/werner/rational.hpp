#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <string>

namespace werner {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_int(BigInt base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("pow_int: negative exponent");
    BigInt out = 1;
    for (int k = 0; k < exponent; ++k) out *= base;
    return out;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string fraction_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Fixed 17-significant-digit decimal rendering, for deterministic file output.
inline std::string decimal_string(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

inline std::string decimal_string(const Rational& r) { return decimal_string(to_double(r)); }

}  // namespace werner
