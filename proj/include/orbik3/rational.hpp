// Exact arithmetic aliases and small number-theory helpers used everywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orbik3 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p/q" for proper fractions, plain "p" when the denominator is 1.
inline std::string rat_str(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline long gcd_l(long a, long b) { return std::gcd(a, b); }

inline long lcm_l(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

inline int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

} // namespace orbik3
