#include "crfe/jacobi.hpp"

#include "crfe/errors.hpp"

#include <string>

namespace crfe {

namespace {

void require_params(int n, int alpha, int beta) {
  if (n < 0 || alpha < 0 || beta < 0)
    throw Error("jacobi parameters must be non-negative: n=" + std::to_string(n) +
                " alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta));
}

}  // namespace

UniPoly jacobi_poly(int n, int alpha, int beta) {
  require_params(n, alpha, beta);
  const Rational a(alpha), b(beta);
  UniPoly p0 = UniPoly::constant(1);
  if (n == 0) return p0;
  UniPoly p1 = UniPoly::linear((a - b) / 2, (a + b + 2) / 2);
  for (int m = 2; m <= n; ++m) {
    const Rational c = Rational(2 * m) + a + b;
    const Rational denom = Rational(2 * m) * (Rational(m) + a + b) * (c - 2);
    UniPoly lin = UniPoly::linear(a * a - b * b, c * (c - 2)) * (c - 1);
    UniPoly p2 = (lin * p1 - p0 * (Rational(2) * (Rational(m) + a - 1) * (Rational(m) + b - 1) * c)) *
                 (Rational(1) / denom);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

UniPoly jacobi_cr_shifted(int k, int d) {
  if (k < 0 || d < 2) throw Error("jacobi_cr_shifted requires k >= 0 and d >= 2");
  std::vector<Rational> c(k + 1);
  for (int l = 0; l <= k; ++l)
    c[l] = sign_power(l) * Rational(binomial(k + l + d - 2, l) * binomial(k, l));
  return UniPoly(std::move(c));
}

Rational rho(int k, int d) { return Rational(binomial(k + d - 2, k)); }

Rational jacobi_at_plus_one(int n, int alpha, int beta) {
  require_params(n, alpha, beta);
  return pochhammer(alpha + 1, n) / Rational(factorial(n));
}

Rational jacobi_at_minus_one(int n, int alpha, int beta) {
  require_params(n, alpha, beta);
  return sign_power(n) * pochhammer(beta + 1, n) / Rational(factorial(n));
}

Rational edge_gamma(int nu) {
  if (nu < 0) throw Error("edge_gamma requires nu >= 0");
  return Rational((2 * nu + 3) * (nu + 2), 8 * (nu + 1));
}

Rational edge_coupling(int nu, int k) {
  if (nu < 0 || nu > k - 1) throw Error("edge_coupling requires 0 <= nu <= k-1");
  if (nu == k - 1) return Rational(1, 2 * k + 1);
  if (nu % 2 == 1) return Rational(0);
  return Rational(k + 1, nu + 2);
}

}  // namespace crfe
