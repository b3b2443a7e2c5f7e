#pragma once

#include <vector>

namespace crfe {

// Gauss-Legendre nodes and weights on [0, 1].
struct GaussRule {
  std::vector<double> nodes, weights;
};
GaussRule gauss_legendre_01(int n);

// Collapsed (Duffy) tensor rule on the reference l-simplex, given in
// barycentric coordinates; weights sum to 1 so the rule computes averages.
struct SimplexRule {
  std::vector<std::vector<double>> bary;
  std::vector<double> weights;
};
SimplexRule simplex_rule(int dim, int points_per_direction);

// Points per direction used by the callable interpolation path.
inline int default_quadrature_points(int k, int d) { return (2 * k + d + 1) / 2 + 1; }

}  // namespace crfe
