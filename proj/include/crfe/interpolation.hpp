#pragma once

#include "crfe/basis.hpp"
#include "crfe/dofs.hpp"

#include <functional>
#include <span>
#include <vector>

namespace crfe {

struct Interpolant {
  std::vector<Rational> coefficients;
  FeFunction function;
};

// Exact interpolation sum_i J_i(u) b_i with functionals dual to the basis.
Interpolant interpolate(const SimplicialComplex& cx, const DofSet& dofs, const CrBasis& basis, const FeFunction& u);

// Edge interpolation on interior edges (two dimensions, odd k).
Interpolant edge_interpolate(const SimplicialComplex& cx, const FeFunction& u, int k);
// Edge interpolation plus the L2(K) projection of the remainder onto the
// simplex bubbles W_K P_alpha, |alpha| <= k-3, on every triangle.
FeFunction approx_op_2d(const SimplicialComplex& cx, const FeFunction& u, int k);

// Binary64 path for functions given as callables. Functionals are evaluated
// with a collapsed Gauss rule; results are approximate by construction.
using Callable = std::function<double(std::span<const double>)>;

struct FloatInterpolant {
  std::vector<double> coefficients;
  int points_per_direction = 0;
};

FloatInterpolant interpolate_callable(const SimplicialComplex& cx, const DofSet& dofs, const Callable& u,
                                      int points_per_direction);
double evaluate_expansion(const SimplicialComplex& cx, const CrBasis& basis, std::span<const double> coefficients,
                          int K, std::span<const double> bary);
// Largest |u - Iu| over a lattice of barycentric sample points per simplex.
double sampled_max_error(const SimplicialComplex& cx, const CrBasis& basis, std::span<const double> coefficients,
                         const Callable& u, int lattice = 6);

}  // namespace crfe
