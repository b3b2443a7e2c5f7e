#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace crfe {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Accepts "p", "-p" or "p/q" with q > 0; whitespace around the token is ignored.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer factorial(unsigned n);
// Zero outside 0 <= k <= n.
Integer binomial(long n, long k);
// Rising factorial (a)_n.
Rational pochhammer(const Rational& a, unsigned n);

double to_double(const Rational& q);

inline Rational sign_power(long n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace crfe
