#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "crfe/determinants.hpp"
#include "crfe/errors.hpp"
#include "crfe/integration.hpp"
#include "crfe/jacobi.hpp"
#include "crfe/linalg.hpp"
#include "crfe/orthopoly.hpp"
#include "crfe/quadrature.hpp"
#include "oracles.hpp"

using namespace crfe;

TEST_CASE("rational text round trip") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational(" -7 ")) == "-7");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK(parse_rational("123456789012345678901234567890/3") == Rational(Integer("41152263004115226300411522630")));
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "--1", "2/"}) CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(pochhammer(Rational(3), 4) == Rational(3 * 4 * 5 * 6));
}

TEST_CASE("univariate arithmetic and integration") {
  const UniPoly x = UniPoly::identity();
  const UniPoly p = x * x - UniPoly::constant(1);
  CHECK(p(Rational(3)) == 8);
  CHECK(p.compose(UniPoly::linear(1, 2))(Rational(1)) == 8);
  CHECK(p.integrate(Rational(0), Rational(1)) == Rational(-2, 3));
  // int_{-1}^{1} (1-x)(1+x) dx = 4/3
  CHECK(integrate_jacobi_weight(UniPoly::constant(1), 1, 1) == Rational(4, 3));
}

TEST_CASE("jacobi recurrence matches the classical sum") {
  for (int n = 0; n <= 7; ++n)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        const UniPoly p = jacobi_poly(n, a, b);
        for (int xi = -3; xi <= 3; ++xi) {
          const Rational x(xi, 3);
          CHECK(p(x) == oracle::jacobi_classical(n, a, b, x));
          CHECK(jacobi_value<Rational>(n, a, b, x) == p(x));
        }
      }
}

TEST_CASE("jacobi endpoint closed forms and rho") {
  CHECK(rho(2, 4) == 6);
  CHECK(rho(3, 2) == 1);
  CHECK(rho(1, 5) == 4);
  for (int n = 0; n <= 6; ++n) {
    CHECK(jacobi_at_plus_one(n, 2, 1) == oracle::jacobi_classical(n, 2, 1, Rational(1)));
    CHECK(jacobi_at_minus_one(n, 2, 1) == oracle::jacobi_classical(n, 2, 1, Rational(-1)));
  }
}

TEST_CASE("shifted profile P_k^(0,d-2)(1-2s)") {
  for (int d = 2; d <= 5; ++d)
    for (int k = 0; k <= 6; ++k) {
      const UniPoly p = jacobi_cr_shifted(k, d);
      for (int si = 0; si <= 4; ++si) {
        const Rational s(si, 4);
        CHECK(p(s) == oracle::jacobi_classical(k, 0, d - 2, 1 - 2 * s));
      }
    }
}

TEST_CASE("edge normalization and coupling values") {
  // Norm of the (1,1) family from the Gamma-function formula: 8 (nu+1) / ((2 nu + 3)(nu + 2))
  for (int nu = 0; nu <= 4; ++nu) {
    const Rational norm = Rational(8 * (nu + 1), (2 * nu + 3) * (nu + 2));
    CHECK(edge_gamma(nu) * norm == 1);
  }
  CHECK(edge_coupling(0, 3) == 2);
  CHECK(edge_coupling(1, 3) == 0);
  CHECK(edge_coupling(2, 3) == Rational(1, 7));
}

TEST_CASE("polynomial algebra") {
  const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  const Polynomial p = (x + y).pow(3);
  CHECK(p.degree() == 3);
  CHECK(p.coefficient(Exponent{1, 2}) == 3);
  CHECK(p.derivative(0).coefficient(Exponent{0, 2}) == 3);
  const Rational pt[] = {Rational(1, 2), Rational(1, 3)};
  CHECK(p.evaluate(std::span<const Rational>(pt)) == Rational(125, 216));
  CHECK((p - p).is_zero());
}

TEST_CASE("barycentric canonical form") {
  const Polynomial l0 = Polynomial::variable(3, 0), l1 = Polynomial::variable(3, 1), l2 = Polynomial::variable(3, 2);
  CHECK(bary_equal(l0 + l1 + l2, Polynomial::constant(3, 1)));
  CHECK(bary_equal((l0 + l1 + l2) * l1, l1));
  CHECK(!bary_equal(l0, l1));
  CHECK(bary_degree((l0 + l1 + l2).pow(4)) == 0);
  CHECK(bary_vertex_value(l0 * 3 - l2, 2) == -1);
}

TEST_CASE("simplex integration against the iterated integral") {
  CHECK(integrate_monomial(Exponent{1, 1, 0}, 3, Rational(1, 2)) == Rational(1, 24));
  for (int d = 1; d <= 4; ++d)
    for (const auto& beta : multi_indices(d + 1, 3)) {
      Exponent e{};
      for (int i = 0; i <= d; ++i) e[i] = static_cast<std::uint8_t>(beta[i]);
      const Polynomial m = Polynomial::monomial(d + 1, e);
      const Rational vol = Rational(1) / Rational(factorial(d));
      CHECK(integrate_simplex(m, vol, d) == oracle::iterated_integral(oracle::bary_to_reference(m)));
    }
  CHECK_THROWS_AS(integrate_simplex(Polynomial(3), 1, 3), DimensionMismatch);
}

TEST_CASE("multi-indices and monomial index") {
  CHECK(multi_indices(2, 2).size() == 6);
  CHECK(multi_indices(3, 0).size() == 1);
  const MonomialIndex idx(2, 3);
  CHECK(idx.size() == 10);
  CHECK(idx.find(Exponent{0, 1, 1}) >= 0);
  CHECK(idx.find(Exponent{1, 0, 0}) == -1);
}

TEST_CASE("simplex orthogonal polynomials") {
  for (int l = 1; l <= 3; ++l) {
    const auto alphas = multi_indices(l, 3);
    for (std::size_t i = 0; i < alphas.size(); ++i)
      for (std::size_t j = 0; j < alphas.size(); ++j) {
        const Rational ip = weighted_inner(simplex_orthopoly(alphas[i]), simplex_orthopoly(alphas[j]), l);
        if (i == j) CHECK(ip > 0);
        else CHECK(ip == 0);
      }
  }
  // l = 1: P_1^{(1,1)}(2 y1 - 1) = 2 (2 y1 - 1) = 4 y1 - 2
  const std::vector<int> a{1};
  CHECK(bary_equal(simplex_orthopoly(a), Polynomial::variable(2, 1) * 4 - Polynomial::constant(2, 2)));
}

TEST_CASE("fraction-free elimination") {
  RationalMatrix m(3, 3);
  m << 2, 1, 1, 1, 3, 2, 1, 0, 0;
  CHECK(exact_determinant(m) == oracle::cofactor_det(oracle::to_rows(m)));
  CHECK(exact_rank(m) == 3);
  RationalMatrix s(3, 3);
  s << 1, 2, 3, 2, 4, 6, Rational(1, 2), 1, Rational(3, 2);
  CHECK(exact_rank(s) == 1);
  CHECK(exact_determinant(s) == 0);
  CHECK_THROWS_AS(gram_solve(s, RationalMatrix::Identity(3, 3)), SingularMatrixError);
  const RationalMatrix inv = inverse(m);
  const RationalMatrix id = m * inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id(i, j) == (i == j ? 1 : 0));
  const RationalMatrix ns = null_space(s);
  CHECK(ns.cols() == 2);
  const RationalMatrix zero = s * ns;
  for (Eigen::Index i = 0; i < zero.rows(); ++i)
    for (Eigen::Index j = 0; j < zero.cols(); ++j) CHECK(zero(i, j) == 0);
  // Integer Bareiss agrees with the rational path.
  Matrix<Integer> z(2, 2);
  z << 4, 7, 2, 6;
  CHECK(bareiss_determinant(z) == 10);
  CHECK(bareiss_rank(z) == 2);
}

TEST_CASE("gram solve example Q_3(1)") {
  const RationalMatrix q = q_matrix<Rational>(3, Rational(1));
  CHECK(exact_determinant(q) == 4);
  RationalMatrix rhs = RationalMatrix::Zero(3, 1);
  rhs(0, 0) = 1;
  const RationalMatrix x = gram_solve(q, rhs);
  const RationalMatrix back = q * x;
  CHECK(back(0, 0) == 1);
  CHECK(back(1, 0) == 0);
  CHECK(back(2, 0) == 0);
}

TEST_CASE("determinant closed forms against cofactor expansion") {
  for (int d = 2; d <= 6; ++d)
    for (int s = -2; s <= d; ++s) {
      CHECK(det_q_closed_form(d, s) == oracle::cofactor_det(oracle::to_rows(q_matrix<Rational>(d, Rational(s)))));
      CHECK(det_r_closed_form(d, s) == oracle::cofactor_det(oracle::to_rows(r_matrix<Rational>(d, Rational(s)))));
    }
  CHECK(det_q_closed_form(3, 1) == 4);
  CHECK(det_q_closed_form(6, 4) == -3125);
  CHECK(det_r_closed_form(2, 5) == -6);
}

TEST_CASE("collapsed quadrature") {
  for (int l = 1; l <= 3; ++l) {
    const SimplexRule r = simplex_rule(l, 4);
    double sum = 0;
    for (double w : r.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0));
    // Average of lambda_0 lambda_1 over the l-simplex: l! * 1 / (l + 2)!
    double avg = 0;
    for (std::size_t i = 0; i < r.weights.size(); ++i) avg += r.weights[i] * r.bary[i][0] * r.bary[i][1];
    const double want = std::tgamma(l + 1) / std::tgamma(l + 3);
    CHECK(avg == doctest::Approx(want));
  }
}
