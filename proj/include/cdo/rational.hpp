#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "cdo/errors.hpp"

namespace cdo {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) { r *= n - i; r /= i + 1; }
    return r;
}

// m(m-1)...(m-j+1); m may be negative (Laurent exponents).
inline Integer falling(long m, int j) {
    Integer r = 1;
    for (int i = 0; i < j; ++i) r *= Integer(m - i);
    return r;
}

inline std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Accepts "p", "p/q", optional leading '-'.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        require(den != 0, "rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw domain_error("malformed rational: '" + s + "'");
    }
}

}  // namespace cdo
