#include "crfe/integration.hpp"

#include "crfe/errors.hpp"

#include <functional>

namespace crfe {

Rational integrate_monomial(const Exponent& beta, int num_vars, const Rational& volume) {
  const int l = num_vars - 1;
  Integer num = factorial(l);
  for (int i = 0; i < num_vars; ++i) num *= factorial(beta[i]);
  return volume * Rational(num, factorial(total_degree(beta) + l));
}

Rational integrate_simplex(const BaryPoly& p, const Rational& volume, int dim) {
  if (p.num_vars() != dim + 1)
    throw DimensionMismatch("integrate_simplex: polynomial has " + std::to_string(p.num_vars()) +
                            " barycentric variables, simplex dimension is " + std::to_string(dim));
  Rational r(0);
  for (const auto& [e, c] : p.terms()) r += c * integrate_monomial(e, dim + 1, volume);
  return r;
}

std::vector<std::vector<int>> multi_indices(int n, int max_total) {
  std::vector<std::vector<int>> out;
  if (max_total < 0) return out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(0, max_total);
  return out;
}

MonomialIndex::MonomialIndex(int dim, int degree) : dim_(dim), degree_(degree) {
  for (const auto& a : multi_indices(dim, degree)) {
    Exponent e{};
    for (int i = 0; i < dim; ++i) e[i + 1] = static_cast<std::uint8_t>(a[i]);
    index_.emplace(e, static_cast<int>(list_.size()));
    list_.push_back(e);
  }
}

int MonomialIndex::find(const Exponent& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace crfe
