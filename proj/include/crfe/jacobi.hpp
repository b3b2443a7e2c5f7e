#pragma once

#include "crfe/rational.hpp"
#include "crfe/univariate.hpp"

namespace crfe {

// P_n^{(alpha,beta)} from the three-term recurrence. Requires n, alpha, beta >= 0.
UniPoly jacobi_poly(int n, int alpha, int beta);

// s -> P_k^{(0,d-2)}(1-2s), from the explicit hypergeometric sum.
UniPoly jacobi_cr_shifted(int k, int d);

// rho_k = P_k^{(0,d-2)}(-1) up to sign: binomial(k+d-2, k).
Rational rho(int k, int d);

// Values at the endpoints from the closed forms.
Rational jacobi_at_plus_one(int n, int alpha, int beta);
Rational jacobi_at_minus_one(int n, int alpha, int beta);

// Normalization of the (1,1) family: 1 / int (1-x)(1+x) P_nu^2.
Rational edge_gamma(int nu);
// Coupling coefficient of the 2-D edge functionals, 0 <= nu <= k-1.
Rational edge_coupling(int nu, int k);

// Recurrence evaluation in any field or floating type.
template <class T>
T jacobi_value(int n, int alpha, int beta, const T& x) {
  if (n == 0) return T(1);
  const T a(alpha), b(beta);
  T p0(1);
  T p1 = (a + T(1)) + (a + b + T(2)) * (x - T(1)) / T(2);
  for (int m = 2; m <= n; ++m) {
    const T mm(m);
    const T c = T(2) * mm + a + b;
    T p2 = ((c - T(1)) * (c * (c - T(2)) * x + a * a - b * b) * p1 -
            T(2) * (mm + a - T(1)) * (mm + b - T(1)) * c * p0) /
           (T(2) * mm * (mm + a + b) * (c - T(2)));
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace crfe
