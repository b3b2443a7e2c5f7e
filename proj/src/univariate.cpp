#include "crfe/univariate.hpp"

#include <algorithm>

namespace crfe {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }
UniPoly UniPoly::identity() { return UniPoly({Rational(0), Rational(1)}); }
UniPoly UniPoly::linear(const Rational& a, const Rational& b) { return UniPoly({a, b}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[i];
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(r));
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational r(0);
  for (int i = degree(); i >= 0; --i) r = r * x + coeffs_[i];
  return r;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly r;
  for (int i = degree(); i >= 0; --i) r = r * inner + UniPoly::constant(coeffs_[i]);
  return r;
}

UniPoly UniPoly::pow(unsigned n) const {
  UniPoly r = UniPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

UniPoly UniPoly::antiderivative() const {
  std::vector<Rational> r(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i + 1] = coeffs_[i] / Rational(i + 1);
  return UniPoly(std::move(r));
}

Rational UniPoly::integrate(const Rational& a, const Rational& b) const {
  UniPoly F = antiderivative();
  return F(b) - F(a);
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0 && i > 0 && c == -1) {
      out += "-";
      c = 1;
    }
    if (i == 0 || c != 1) out += crfe::to_string(c) + (i > 0 ? "*" : "");
    if (i > 0) out += var + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out;
}

Rational integrate_jacobi_weight(const UniPoly& p, int a, int b) {
  UniPoly w = UniPoly::linear(1, -1).pow(a) * UniPoly::linear(1, 1).pow(b);
  UniPoly f = p * w;
  Rational r(0);
  for (int i = 0; i <= f.degree(); i += 2) r += f[i] * Rational(2, i + 1);
  return r;
}

}  // namespace crfe
