#pragma once

#include "crfe/rational.hpp"

#include <string>
#include <vector>

namespace crfe {

// Dense univariate polynomial with exact coefficients, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly identity();
  // a + b*x
  static UniPoly linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational operator[](int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  Rational operator()(const Rational& x) const;
  template <class T>
  T evaluate(T x) const {
    T r(0);
    for (int i = degree(); i >= 0; --i) r = r * x + T(coeffs_[i].template convert_to<T>());
    return r;
  }

  // p(inner(x))
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(unsigned n) const;
  UniPoly antiderivative() const;
  Rational integrate(const Rational& a, const Rational& b) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Integral over [-1, 1] against (1-x)^a (1+x)^b, by expanding the weight.
Rational integrate_jacobi_weight(const UniPoly& p, int a, int b);

}  // namespace crfe
