#include "crfe/polynomial.hpp"

#include "crfe/errors.hpp"

#include <sstream>

namespace crfe {

int total_degree(const Exponent& e) {
  int s = 0;
  for (auto v : e) s += v;
  return s;
}

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVars)
    throw DimensionMismatch("polynomial variable count out of range: " + std::to_string(num_vars));
}

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponent{}, c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) throw DimensionMismatch("variable index out of range");
  Exponent e{};
  e[index] = 1;
  return monomial(num_vars, e);
}

Polynomial Polynomial::monomial(int num_vars, const Exponent& e, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::univariate(const UniPoly& q, int num_vars, int var) {
  Polynomial p(num_vars);
  if (var < 0 || var >= num_vars) throw DimensionMismatch("variable index out of range");
  for (int i = 0; i <= q.degree(); ++i) {
    Exponent e{};
    e[var] = static_cast<std::uint8_t>(i);
    p.add_term(e, q[i]);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw DimensionMismatch("adding polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw DimensionMismatch("subtracting polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw DimensionMismatch("multiplying polynomials in different variables");
  Polynomial r(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = constant(num_vars_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1u) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (static_cast<int>(images.size()) != num_vars_)
    throw DimensionMismatch("substitute needs one image per variable");
  const int nv = images.empty() ? num_vars_ : images.front().num_vars();
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  Polynomial r(nv);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(nv, c);
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(nv, 1));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::rename(int new_num_vars, std::span<const int> map) const {
  if (static_cast<int>(map.size()) != num_vars_) throw DimensionMismatch("rename needs one target per variable");
  Polynomial r(new_num_vars);
  for (const auto& [e, c] : terms_) {
    Exponent f{};
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0 || map[i] >= new_num_vars) throw DimensionMismatch("rename target out of range");
      f[map[i]] = static_cast<std::uint8_t>(f[map[i]] + e[i]);
    }
    r.add_term(f, c);
  }
  return r;
}

Polynomial Polynomial::restrict_to(std::span<const int> kept) const {
  Polynomial r(static_cast<int>(kept.size()));
  for (const auto& [e, c] : terms_) {
    int kept_degree = 0;
    Exponent f{};
    for (std::size_t j = 0; j < kept.size(); ++j) {
      f[j] = e[kept[j]];
      kept_degree += e[kept[j]];
    }
    if (kept_degree != total_degree(e)) continue;
    r.add_term(f, c);
  }
  return r;
}

Polynomial Polynomial::antiderivative(int var) const {
  Polynomial r(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = static_cast<std::uint8_t>(f[var] + 1);
    r.add_term(f, c / Rational(f[var]));
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] = static_cast<std::uint8_t>(f[var] - 1);
    r.add_term(f, c * Rational(e[var]));
  }
  return r;
}

Polynomial Polynomial::shifted(const Exponent& s) const {
  Polynomial r(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f;
    for (int i = 0; i < kMaxVars; ++i) f[i] = static_cast<std::uint8_t>(e[i] + s[i]);
    r.terms_.emplace(f, c);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != num_vars_) throw DimensionMismatch("evaluation point has wrong dimension");
  Rational r(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < num_vars_; ++i)
      for (int j = 0; j < e[i]; ++j) t *= x[i];
    r += t;
  }
  return r;
}

double Polynomial::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != num_vars_) throw DimensionMismatch("evaluation point has wrong dimension");
  double r = 0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (int i = 0; i < num_vars_; ++i)
      for (int j = 0; j < e[i]; ++j) t *= x[i];
    r += t;
  }
  return r;
}

std::string Polynomial::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest degree first reads more naturally.
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return total_degree(a.first) < total_degree(b.first);
  });
  for (const auto& [e, c0] : ordered) {
    Rational c = c0;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0 && total_degree(e) > 0 && c == -1) {
      out << "-";
      c = 1;
    }
    first = false;
    bool wrote = false;
    if (total_degree(e) == 0 || c != 1) {
      out << crfe::to_string(c);
      wrote = true;
    }
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << var_prefix << i;
      if (e[i] > 1) out << "^" << int(e[i]);
      wrote = true;
    }
  }
  return out.str();
}

Polynomial bary_canonical(const Polynomial& p) {
  const int n = p.num_vars();
  if (n <= 1) {
    // A point: every barycentric polynomial is a constant.
    Rational v(0);
    for (const auto& [e, c] : p.terms()) v += c;
    return Polynomial::constant(n, v);
  }
  Polynomial lam0 = Polynomial::constant(n, 1);
  for (int i = 1; i < n; ++i) lam0 -= Polynomial::variable(n, i);
  // Terms free of lambda_0 are already canonical.
  Polynomial out(n);
  std::vector<Polynomial> lam0_powers{Polynomial::constant(n, 1)};
  for (const auto& [e, c] : p.terms()) {
    if (e[0] == 0) {
      out.add_term(e, c);
      continue;
    }
    while (static_cast<int>(lam0_powers.size()) <= e[0]) lam0_powers.push_back(lam0_powers.back() * lam0);
    Exponent rest = e;
    rest[0] = 0;
    for (const auto& [f, v] : lam0_powers[e[0]].terms()) {
      Exponent g;
      for (int i = 0; i < kMaxVars; ++i) g[i] = static_cast<std::uint8_t>(rest[i] + f[i]);
      out.add_term(g, c * v);
    }
  }
  return out;
}

bool bary_equal(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars()) throw DimensionMismatch("comparing polynomials on different simplices");
  return bary_canonical(a - b).is_zero();
}

int bary_degree(const Polynomial& p) { return bary_canonical(p).degree(); }

Rational bary_vertex_value(const Polynomial& p, int i) {
  Rational v(0);
  for (const auto& [e, c] : p.terms())
    if (total_degree(e) == 0 || total_degree(e) == e[i]) v += c;
  return v;
}

}  // namespace crfe
