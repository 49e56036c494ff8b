#include "mucalc/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace mucalc {

Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  k = std::min(k, n - k);
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step: r is binom(n-k+i, i)
  }
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a fraction: '" + s + "'");
  }
}

}  // namespace mucalc
