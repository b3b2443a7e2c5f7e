#include "crfe/determinants.hpp"
#include "crfe/integration.hpp"
#include "crfe/jacobi.hpp"
#include "crfe/linalg.hpp"
#include "crfe/verifier.hpp"

namespace crfe {

namespace {

Json ints_json(std::span<const int> v) { return Json(std::vector<int>(v.begin(), v.end())); }

// 2^(a+b+1)/(2n+a+b+1) * (n+a)! (n+b)! / ((n+a+b)! n!)
Rational jacobi_norm(int n, int a, int b) {
  Rational h = Rational(Integer(1) << (a + b + 1), Integer(2 * n + a + b + 1));
  h *= Rational(factorial(n + a) * factorial(n + b), factorial(n + a + b) * factorial(n));
  return h;
}

// Integrate variable `var` of p from 0 to `upper`.
Polynomial integrate_out(const Polynomial& p, int var, const Polynomial& upper) {
  const Polynomial anti = p.antiderivative(var);
  std::vector<Polynomial> images;
  for (int i = 0; i < p.num_vars(); ++i) images.push_back(Polynomial::variable(p.num_vars(), i));
  images[var] = upper;
  return anti.substitute(images);
}

}  // namespace

Check check_jacobi_orthogonality(int n_max, int ab_max, const JacobiFamily& family) {
  CheckRecorder rec("jacobi_orthogonality", Json{{"n_max", n_max}, {"ab_max", ab_max}});
  for (int a = 0; a <= ab_max; ++a)
    for (int b = 0; b <= ab_max; ++b) {
      std::vector<UniPoly> p;
      for (int n = 0; n <= n_max; ++n) p.push_back(family(n, a, b));
      for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n; ++m) {
          const Rational ip = integrate_jacobi_weight(p[n] * p[m], a, b);
          const Rational want = (n == m) ? jacobi_norm(n, a, b) : Rational(0);
          if (ip != want)
            rec.fail({{"alpha", a}, {"beta", b}, {"n", n}, {"m", m}, {"inner", rational_json(ip)},
                      {"expected", rational_json(want)}});
        }
    }
  return rec.finish();
}

Check check_jacobi_endpoints(int n_max, int ab_max, int d_max, const JacobiFamily& family) {
  CheckRecorder rec("jacobi_endpoints", Json{{"n_max", n_max}, {"ab_max", ab_max}, {"d_max", d_max}});
  for (int a = 0; a <= ab_max; ++a)
    for (int b = 0; b <= ab_max; ++b)
      for (int n = 0; n <= n_max; ++n) {
        const UniPoly p = family(n, a, b);
        const Rational plus = pochhammer(Rational(a + 1), n) / Rational(factorial(n));
        const Rational minus = sign_power(n) * pochhammer(Rational(b + 1), n) / Rational(factorial(n));
        if (p(Rational(1)) != plus)
          rec.fail({{"alpha", a}, {"beta", b}, {"n", n}, {"at", 1}, {"value", rational_json(p(Rational(1)))},
                    {"expected", rational_json(plus)}});
        if (p(Rational(-1)) != minus)
          rec.fail({{"alpha", a}, {"beta", b}, {"n", n}, {"at", -1}, {"value", rational_json(p(Rational(-1)))},
                    {"expected", rational_json(minus)}});
      }
  // P_k^{(0,d-2)}(1) = 1 and P_k^{(0,d-2)}(-1) = (-1)^k binomial(k+d-2, k)
  for (int d = 2; d <= d_max; ++d)
    for (int n = 0; n <= n_max; ++n) {
      const UniPoly p = family(n, 0, d - 2);
      const Rational rho_k(binomial(n + d - 2, n));
      if (p(Rational(1)) != 1 || p(Rational(-1)) != sign_power(n) * rho_k)
        rec.fail({{"d", d}, {"n", n}, {"at_plus_one", rational_json(p(Rational(1)))},
                  {"at_minus_one", rational_json(p(Rational(-1)))}, {"rho", rational_json(rho_k)}});
    }
  return rec.finish();
}

Check check_jacobi_explicit_sum(int k_max, int d_max, const CrShiftedFamily& explicit_sum) {
  CheckRecorder rec("jacobi_explicit_sum", Json{{"k_max", k_max}, {"d_max", d_max}});
  for (int d = 2; d <= d_max; ++d)
    for (int k = 0; k <= k_max; ++k) {
      const UniPoly want = jacobi_poly(k, 0, d - 2).compose(UniPoly::linear(1, -2));
      const UniPoly got = explicit_sum(k, d);
      if (!(got == want))
        rec.fail({{"d", d}, {"k", k}, {"explicit", got.to_string("s")}, {"recurrence", want.to_string("s")}});
    }
  return rec.finish();
}

Check check_simplex_orthopoly_orthogonality(int l_max, int order_max, const OrthopolyFamily& family) {
  CheckRecorder rec("simplex_orthopoly_orthogonality", Json{{"l_max", l_max}, {"order_max", order_max}});
  for (int l = 1; l <= l_max; ++l) {
    const auto alphas = multi_indices(l, order_max);
    std::vector<BaryPoly> p;
    for (const auto& a : alphas) p.push_back(family(a));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i; j < p.size(); ++j) {
        const Rational ip = weighted_inner(p[i], p[j], l);
        if ((i == j) != (ip != 0))
          rec.fail({{"l", l}, {"alpha", ints_json(alphas[i])}, {"beta", ints_json(alphas[j])},
                    {"inner", rational_json(ip)}});
      }
  }
  return rec.finish();
}

Check check_simplex_orthopoly_examples(int order_max, const OrthopolyFamily& family) {
  CheckRecorder rec("simplex_orthopoly_examples", Json{{"order_max", order_max}});
  const UniPoly two_y_minus_one = UniPoly::linear(-1, 2);
  for (int a = 0; a <= order_max; ++a) {
    const std::vector<int> alpha{a};
    const BaryPoly want = Polynomial::univariate(jacobi_poly(a, 1, 1).compose(two_y_minus_one), 2, 1);
    const BaryPoly got = family(alpha);
    if (!bary_equal(got, want))
      rec.fail({{"l", 1}, {"alpha", ints_json(alpha)}, {"family", got.to_string()}, {"example", want.to_string()}});
  }
  // P_{a1}^{(2 a2 + 3, 1)}(2 y1 - 1) (1 - y1)^a2 P_{a2}^{(1,1)}(2 y2 / (1 - y1) - 1)
  const Polynomial y1 = Polynomial::variable(3, 1), y2 = Polynomial::variable(3, 2);
  const Polynomial one_minus_y1 = Polynomial::constant(3, 1) - y1;
  for (int a1 = 0; a1 <= order_max; ++a1)
    for (int a2 = 0; a1 + a2 <= order_max; ++a2) {
      const std::vector<int> alpha{a1, a2};
      const BaryPoly first = Polynomial::univariate(jacobi_poly(a1, 2 * a2 + 3, 1).compose(two_y_minus_one), 3, 1);
      const UniPoly inner = jacobi_poly(a2, 1, 1);
      BaryPoly second(3);
      // t^i (1 - y1)^a2 with t = 2 y2 / (1 - y1) - 1 becomes (2 y2 - (1 - y1))^i (1 - y1)^(a2 - i)
      for (int i = 0; i <= inner.degree(); ++i)
        second += (Rational(2) * y2 - one_minus_y1).pow(i) * one_minus_y1.pow(a2 - i) * inner[i];
      const BaryPoly want = first * second;
      const BaryPoly got = family(alpha);
      if (!bary_equal(got, want))
        rec.fail({{"l", 2}, {"alpha", ints_json(alpha)}, {"family", bary_canonical(got).to_string()},
                  {"example", bary_canonical(want).to_string()}});
    }
  return rec.finish();
}

Check check_edge_gamma(int nu_max, const RationalFn1& gamma) {
  CheckRecorder rec("edge_gamma_normalization", Json{{"nu_max", nu_max}});
  for (int nu = 0; nu <= nu_max; ++nu) {
    const UniPoly p = jacobi_poly(nu, 1, 1);
    const Rational norm = integrate_jacobi_weight(p * p, 1, 1);
    const Rational g = gamma(nu);
    if (g * norm != 1)
      rec.fail({{"nu", nu}, {"gamma", rational_json(g)}, {"inverse_norm", rational_json(Rational(1) / norm)}});
  }
  return rec.finish();
}

Check check_g_x1_identity(int d_max, int order_max, const GConstant& c) {
  CheckRecorder rec("g_x1_identity", Json{{"d_max", d_max}, {"order_max", order_max}});
  for (int d = 2; d <= d_max; ++d) {
    const int n = d - 1;  // facet variables x_1..x_{d-1} are variables 0..n-1
    for (const auto& alpha : multi_indices(n, order_max)) {
      Exponent e{};
      for (int i = 0; i < n; ++i) e[i] = static_cast<std::uint8_t>(alpha[i]);
      Polynomial g = Polynomial::monomial(n, e);
      // Innermost variable first: x_j runs over [0, 1 - x_1 - ... - x_{j-1}].
      for (int j = n - 1; j >= 1; --j) {
        Polynomial upper = Polynomial::constant(n, 1);
        for (int i = 0; i < j; ++i) upper -= Polynomial::variable(n, i);
        g = integrate_out(g, j, upper);
      }
      int tail = 0;
      for (int i = 1; i < n; ++i) tail += alpha[i];
      const UniPoly shape =
          UniPoly::identity().pow(alpha[0]) * UniPoly::linear(1, -1).pow(static_cast<unsigned>(d - 2 + tail));
      const Polynomial want = Polynomial::univariate(shape, n, 0) * c(d, alpha);
      if (!(g == want))
        rec.fail({{"d", d}, {"alpha", ints_json(alpha)}, {"integral", g.to_string("x")},
                  {"closed_form", want.to_string("x")}});
    }
  }
  return rec.finish();
}

Check check_tech_identities(int d_max, int k_max, const RhoFn& rho_fn) {
  CheckRecorder rec("tech_identities", Json{{"d_max", d_max}, {"k_max", k_max}});
  for (int d = 2; d <= d_max; ++d)
    for (int k = 1; k <= k_max; ++k) {
      const Rational r = rho_fn(k, d);
      const Rational sr = sign_power(k) * r;
      const bool a_lhs = (d - 1 + sr == 0);
      const bool a_rhs = (k == 1) || (d == 2 && k % 2 == 1);
      if (a_lhs != a_rhs) rec.fail({{"identity", "a"}, {"d", d}, {"k", k}, {"rho", rational_json(r)}});
      if (d + sr == 0) rec.fail({{"identity", "b"}, {"d", d}, {"k", k}, {"rho", rational_json(r)}});
      if ((r == 1) != (d == 2)) rec.fail({{"identity", "c"}, {"d", d}, {"k", k}, {"rho", rational_json(r)}});
    }
  return rec.finish();
}

Check check_det_q_formula(int d_max, const DetClosedForm& closed) {
  CheckRecorder rec("det_Q_formula", Json{{"d_max", d_max}, {"s_grid", "[-2, d]"}});
  for (int d = 2; d <= d_max; ++d)
    for (int s = -2; s <= d; ++s) {
      const Rational direct = exact_determinant(q_matrix<Rational>(d, Rational(s)));
      const Rational formula = closed(d, Rational(s));
      if (direct != formula)
        rec.fail({{"d", d}, {"s", s}, {"direct", rational_json(direct)}, {"closed_form", rational_json(formula)}});
    }
  return rec.finish();
}

Check check_det_r_formula(int d_max, const DetClosedForm& closed) {
  CheckRecorder rec("det_R_formula", Json{{"d_max", d_max}, {"s_grid", "[-2, d]"}});
  for (int d = 2; d <= d_max; ++d)
    for (int s = -2; s <= d; ++s) {
      const Rational direct = exact_determinant(r_matrix<Rational>(d, Rational(s)));
      const Rational formula = closed(d, Rational(s));
      if (direct != formula)
        rec.fail({{"d", d}, {"s", s}, {"direct", rational_json(direct)}, {"closed_form", rational_json(formula)}});
    }
  return rec.finish();
}

Check check_det_q_regular(int d_max, const DetClosedForm& closed) {
  CheckRecorder rec("det_Q_regular", Json{{"d_max", d_max}});
  // det Q_{d+1}(d-1) = (-d)^d
  for (int d = 1; d + 1 <= d_max; ++d) {
    Rational want(1);
    for (int i = 0; i < d; ++i) want *= Rational(-d);
    const Rational direct = exact_determinant(q_matrix<Rational>(d + 1, Rational(d - 1)));
    const Rational formula = closed(d + 1, Rational(d - 1));
    if (direct != want || formula != want)
      rec.fail({{"d", d}, {"direct", rational_json(direct)}, {"closed_form", rational_json(formula)},
                {"expected", rational_json(want)}});
  }
  return rec.finish();
}

}  // namespace crfe
