#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace mucalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// binom(n, k); zero whenever k < 0 or k > n.
Integer binomial(long long n, long long k);

// (-1)^k as an int, valid for negative k as well.
inline int parity_sign(long long k) { return (k & 1LL) ? -1 : 1; }

// Canonical "num/den" rendering, denominator always written and positive,
// e.g. "-9/10", "0/1".  Reports never use decimals.
std::string to_fraction_string(const Rational& r);

// Accepts "num/den" or a bare integer string.
Rational parse_fraction(const std::string& s);

}  // namespace mucalc
