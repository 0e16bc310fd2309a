#pragma once

// Exact scalar types shared by every module. All algebra in this project is
// tolerance-free: arbitrary-precision integers and rationals, never floating
// point.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace orbigold {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Renders "p" for integers and "p/q" otherwise (ASCII, '-' sign).
inline std::string rat_to_string(const Rat& value) {
    return value.str();
}

// Accepts "p" or "p/q" with an optional leading sign. Throws
// std::invalid_argument on malformed input or a zero denominator.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + text + "': " + e.what());
    }
}

// n! / (k! (n-k)!) as an exact integer; 0 outside the Pascal triangle.
inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact at every step: product of i consecutive integers
    }
    return result;
}

}  // namespace orbigold
