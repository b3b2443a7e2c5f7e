#pragma once

#include "crfe/complex.hpp"
#include "crfe/fe_function.hpp"
#include "crfe/integration.hpp"
#include "crfe/linalg.hpp"

#include <span>

namespace crfe {

// Coordinates of piecewise polynomials of degree <= k in the canonical monomial
// basis of every simplex, stacked simplex by simplex (one column per function).
RationalMatrix coefficient_matrix(const SimplicialComplex& cx, std::span<const FeFunction> fns, int degree);

// Canonical-monomial coordinates of a single polynomial on an l-simplex.
RationalVector poly_coordinates(const BaryPoly& p, const MonomialIndex& index);
BaryPoly poly_from_coordinates(const RationalVector& c, const MonomialIndex& index);

// Mass matrix of the canonical monomials on an l-simplex of the given volume.
RationalMatrix monomial_mass_matrix(const MonomialIndex& index, const Rational& volume);

// Cached index and mass matrix of averages (volume 1) on the reference l-simplex.
const MonomialIndex& monomial_index(int dim, int degree);
const RationalMatrix& average_mass_matrix(int dim, int degree);

// Broken L2 Gram matrix sum_K int_K f_a f_b.
RationalMatrix gram_matrix(const SimplicialComplex& cx, std::span<const FeFunction> fns, int degree);

// Rank of a family of piecewise polynomials. Equals the rank of its broken L2
// Gram matrix, which is C^T M C with M positive definite.
long family_rank(const SimplicialComplex& cx, std::span<const FeFunction> fns, int degree);

}  // namespace crfe
