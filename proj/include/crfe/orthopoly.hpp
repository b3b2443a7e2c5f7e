#pragma once

#include "crfe/polynomial.hpp"

#include <span>

namespace crfe {

// Orthogonal polynomial on the l-simplex (l = alpha.size() >= 1) in homogeneous
// barycentric form, orthogonal under the weight lambda_0 * ... * lambda_l:
//   prod_j S_j^{a_j} P_{a_j}^{(s_j,1)}(2 y_j / S_j - 1),
//   S_j = y_0 + y_j + ... + y_l,  s_j = 2 (a_{j+1} + ... + a_l) + 2 (l - j) + 1.
BaryPoly simplex_orthopoly(std::span<const int> alpha);

// The weight lambda_0 * ... * lambda_l.
BaryPoly simplex_bubble_weight(int dim);

// int over the reference l-simplex of weight * p * q.
Rational weighted_inner(const BaryPoly& p, const BaryPoly& q, int dim);

}  // namespace crfe
