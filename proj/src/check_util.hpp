#pragma once

#include <optional>
#include <vector>

#include "crfe/integration.hpp"
#include "crfe/verifier.hpp"

namespace crfe::detail {

struct Moment {
  std::vector<int> beta;
  Rational value;
};

// First nonzero average of p * lambda^beta over the l-simplex, |beta| <= max_degree.
inline std::optional<Moment> first_nonzero_moment(const BaryPoly& p, int dim, int max_degree) {
  if (p.is_zero() || max_degree < 0) return std::nullopt;
  for (const auto& beta : multi_indices(dim + 1, max_degree)) {
    Exponent e{};
    for (int i = 0; i <= dim; ++i) e[i] = static_cast<std::uint8_t>(beta[i]);
    const Rational v = integrate_simplex(p.shifted(e), Rational(1), dim);
    if (v != 0) return Moment{beta, v};
  }
  return std::nullopt;
}

inline std::vector<FeFunction> functions_of(std::span<const BasisMember> members) {
  std::vector<FeFunction> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.function);
  return out;
}

inline int max_degree(std::span<const FeFunction> fns) {
  int deg = 0;
  for (const auto& f : fns) deg = std::max(deg, f.degree());
  return deg;
}

}  // namespace crfe::detail
