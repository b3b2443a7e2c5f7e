#include "crfe/quadrature.hpp"

#include "crfe/errors.hpp"

#include <cmath>
#include <numbers>

namespace crfe {

GaussRule gauss_legendre_01(int n) {
  if (n < 1) throw Error("quadrature needs at least one point");
  GaussRule r;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int m = 2; m <= n; ++m) {
        double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes.push_back((1 - x) / 2);
    r.weights.push_back(1.0 / ((1 - x * x) * dp * dp));
  }
  return r;
}

SimplexRule simplex_rule(int dim, int points_per_direction) {
  SimplexRule rule;
  if (dim == 0) {
    rule.bary.push_back({1.0});
    rule.weights.push_back(1.0);
    return rule;
  }
  const GaussRule g = gauss_legendre_01(points_per_direction);
  const int n = points_per_direction;
  std::vector<int> idx(dim, 0);
  double factorial = 1;
  for (int i = 2; i <= dim; ++i) factorial *= i;
  for (;;) {
    // x_1 = t_1, x_j = (1 - t_1)...(1 - t_{j-1}) t_j
    std::vector<double> lam(dim + 1);
    double rest = 1, w = factorial;
    for (int j = 0; j < dim; ++j) {
      const double t = g.nodes[idx[j]];
      lam[j + 1] = rest * t;
      w *= g.weights[idx[j]] * std::pow(1 - t, dim - 1 - j);
      rest *= 1 - t;
    }
    lam[0] = rest;
    rule.bary.push_back(lam);
    rule.weights.push_back(w);
    int p = dim - 1;
    while (p >= 0 && ++idx[p] == n) idx[p--] = 0;
    if (p < 0) break;
  }
  return rule;
}

}  // namespace crfe
