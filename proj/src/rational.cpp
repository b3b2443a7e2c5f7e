#include "crfe/rational.hpp"

#include "crfe/errors.hpp"

#include <cctype>
#include <vector>

namespace crfe {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  const Integer p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Integer factorial(unsigned n) {
  static std::vector<Integer> table{Integer(1)};
  while (table.size() <= n) table.push_back(table.back() * Integer(table.size()));
  return table[n];
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer r(1);
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational pochhammer(const Rational& a, unsigned n) {
  Rational r(1);
  for (unsigned i = 0; i < n; ++i) r *= a + i;
  return r;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace crfe
