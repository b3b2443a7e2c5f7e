#pragma once

// Reference computations used by the tests. They share no code path with the
// library routines they check.

#include <vector>

#include "crfe/linalg.hpp"
#include "crfe/polynomial.hpp"
#include "crfe/rational.hpp"
#include "crfe/univariate.hpp"

namespace oracle {

using crfe::Polynomial;
using crfe::Rational;

// Determinant by cofactor expansion along the first row.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    const Rational term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

inline std::vector<std::vector<Rational>> to_rows(const crfe::RationalMatrix& a) {
  std::vector<std::vector<Rational>> out(a.rows(), std::vector<Rational>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
  return out;
}

// Univariate polynomial p(x) evaluated by plain Horner on a coefficient list.
inline Rational horner(const std::vector<Rational>& c, const Rational& x) {
  Rational r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

// Classical sum P_n^{(a,b)}(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s).
inline Rational jacobi_classical(int n, int a, int b, const Rational& x) {
  Rational sum = 0;
  for (int s = 0; s <= n; ++s) {
    Rational t = Rational(crfe::binomial(n + a, n - s) * crfe::binomial(n + b, s));
    for (int i = 0; i < s; ++i) t *= (x - 1) / 2;
    for (int i = 0; i < n - s; ++i) t *= (x + 1) / 2;
    sum += t;
  }
  return sum;
}

// Integral over the reference d-simplex {x >= 0, sum x <= 1} of a Cartesian
// polynomial, by integrating out the last variable first.
inline Rational iterated_integral(const Polynomial& p) {
  const int d = p.num_vars();
  Polynomial g = p;
  for (int j = d - 1; j >= 0; --j) {
    Polynomial upper = Polynomial::constant(d, 1);
    for (int i = 0; i < j; ++i) upper -= Polynomial::variable(d, i);
    // Antiderivative in x_j by hand, then substitute x_j = upper.
    Polynomial result(d);
    for (const auto& [e, c] : g.terms()) {
      crfe::Exponent rest = e;
      const int pw = e[j];
      rest[j] = 0;
      result += Polynomial::monomial(d, rest, c / (pw + 1)) * upper.pow(pw + 1);
    }
    g = result;
  }
  return g.coefficient(crfe::Exponent{});
}

// Barycentric polynomial on the reference d-simplex as a Cartesian polynomial:
// lambda_0 = 1 - sum x, lambda_i = x_i.
inline Polynomial bary_to_reference(const Polynomial& b) {
  const int d = b.num_vars() - 1;
  std::vector<Polynomial> images;
  Polynomial l0 = Polynomial::constant(d, 1);
  for (int i = 0; i < d; ++i) l0 -= Polynomial::variable(d, i);
  images.push_back(l0);
  for (int i = 0; i < d; ++i) images.push_back(Polynomial::variable(d, i));
  return b.substitute(images);
}

}  // namespace oracle
