#pragma once

#include "crfe/rational.hpp"
#include "crfe/univariate.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace crfe {

inline constexpr int kMaxVars = 8;
using Exponent = std::array<std::uint8_t, kMaxVars>;

int total_degree(const Exponent& e);

// Sparse multivariate polynomial with exact coefficients. The same type serves
// for Cartesian polynomials and for barycentric polynomials (see BaryPoly).
class Polynomial {
 public:
  explicit Polynomial(int num_vars = 1);

  static Polynomial constant(int num_vars, const Rational& c);
  static Polynomial variable(int num_vars, int index);
  static Polynomial monomial(int num_vars, const Exponent& e, const Rational& c = 1);
  // q(x_var)
  static Polynomial univariate(const UniPoly& q, int num_vars, int var);

  int num_vars() const { return num_vars_; }
  // Degree of this representation; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial operator-() const { return *this * Rational(-1); }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  // Representation equality. Use bary_equal for equality as functions on a simplex.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned n) const;
  // Replace x_i by images[i]; all images share a variable count.
  Polynomial substitute(std::span<const Polynomial> images) const;
  // Variable i becomes variable map[i] of a polynomial with new_num_vars variables.
  Polynomial rename(int new_num_vars, std::span<const int> map) const;
  // Sets every variable outside `kept` to zero; kept[j] becomes variable j.
  Polynomial restrict_to(std::span<const int> kept) const;
  Polynomial antiderivative(int var) const;
  Polynomial derivative(int var) const;
  // Multiply by the monomial x^e.
  Polynomial shifted(const Exponent& e) const;

  Rational evaluate(std::span<const Rational> x) const;
  double evaluate(std::span<const double> x) const;

  std::string to_string(const std::string& var_prefix = "l") const;

 private:
  int num_vars_;
  std::map<Exponent, Rational> terms_;
};

// A polynomial in the barycentric coordinates (lambda_0..lambda_l) of an
// l-simplex. Representations are unique only modulo sum(lambda) = 1.
using BaryPoly = Polynomial;

// Canonical representative: lambda_0 eliminated through 1 - sum of the others.
Polynomial bary_canonical(const Polynomial& p);
bool bary_equal(const Polynomial& a, const Polynomial& b);
// Degree as a function on the simplex.
int bary_degree(const Polynomial& p);
// Value at vertex i of the simplex (lambda = e_i).
Rational bary_vertex_value(const Polynomial& p, int i);

}  // namespace crfe
