#include "crfe/orthopoly.hpp"

#include "crfe/errors.hpp"
#include "crfe/integration.hpp"
#include "crfe/jacobi.hpp"

namespace crfe {

BaryPoly simplex_orthopoly(std::span<const int> alpha) {
  const int l = static_cast<int>(alpha.size());
  if (l < 1 || l + 1 > kMaxVars) throw DimensionMismatch("simplex_orthopoly: unsupported dimension");
  for (int a : alpha)
    if (a < 0) throw Error("simplex_orthopoly: negative multi-index entry");
  const int nv = l + 1;
  BaryPoly result = Polynomial::constant(nv, 1);
  for (int j = 1; j <= l; ++j) {
    const int a = alpha[j - 1];
    if (a == 0) continue;
    int tail = 0;
    for (int m = j + 1; m <= l; ++m) tail += alpha[m - 1];
    const int s = 2 * tail + 2 * (l - j) + 1;
    Polynomial S = Polynomial::variable(nv, 0);
    for (int m = j; m <= l; ++m) S += Polynomial::variable(nv, m);
    const Polynomial arg = Polynomial::variable(nv, j) * Rational(2) - S;
    // S^a P(2y/S - 1) = sum_i c_i (2y - S)^i S^(a-i)
    const UniPoly P = jacobi_poly(a, s, 1);
    Polynomial factor(nv);
    Polynomial arg_pow = Polynomial::constant(nv, 1);
    for (int i = 0; i <= a; ++i) {
      if (P[i] != 0) factor += arg_pow * S.pow(a - i) * P[i];
      arg_pow = arg_pow * arg;
    }
    result = result * factor;
  }
  return result;
}

BaryPoly simplex_bubble_weight(int dim) {
  Exponent e{};
  for (int i = 0; i <= dim; ++i) e[i] = 1;
  return Polynomial::monomial(dim + 1, e);
}

Rational weighted_inner(const BaryPoly& p, const BaryPoly& q, int dim) {
  return integrate_simplex(simplex_bubble_weight(dim) * p * q, Rational(1, Integer(factorial(dim))), dim);
}

}  // namespace crfe
