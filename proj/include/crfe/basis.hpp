#pragma once

#include "crfe/complex.hpp"
#include "crfe/fe_function.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace crfe {

enum class BoundaryCondition { Full, Zero };

BoundaryCondition parse_boundary_condition(std::string_view s);
std::string to_string(BoundaryCondition bc);

struct BasisTag {
  enum class Kind { Vertex, Face, NcFacet, NcSimplex, EdgeMode };
  Kind kind = Kind::Vertex;
  // Face dimension for Vertex/Face tags, d-1 for NcFacet and EdgeMode, d for NcSimplex.
  int dim = 0;
  int entity = 0;
  // Multi-index of a Face tag; {mu} for EdgeMode.
  std::vector<int> alpha;

  static BasisTag vertex(int z) { return {Kind::Vertex, 0, z, {}}; }
  static BasisTag face(int l, int id, std::vector<int> a) { return {Kind::Face, l, id, std::move(a)}; }
  static BasisTag nc_facet(int d, int F) { return {Kind::NcFacet, d - 1, F, {}}; }
  static BasisTag nc_simplex(int d, int K) { return {Kind::NcSimplex, d, K, {}}; }
  static BasisTag edge_mode(int E, int mu) { return {Kind::EdgeMode, 1, E, {mu}}; }

  std::string to_string() const;
  auto operator<=>(const BasisTag&) const = default;
};

struct BasisMember {
  BasisTag tag;
  FeFunction function;
};

struct CrBasis {
  int k = 1;
  BoundaryCondition bc = BoundaryCondition::Full;
  std::vector<BasisMember> members;
  // Even k with full boundary data: the simplex whose nonconforming function is left out.
  std::optional<int> dropped_simplex;

  std::vector<FeFunction> functions() const;
  int index_of(const BasisTag& tag) const;
};

FeFunction hat_function(const SimplicialComplex& cx, int z);
// Product of the barycentric coordinates of the face vertices on every simplex of its patch.
FeFunction face_bubble(const SimplicialComplex& cx, int l, int tau);
// l = 0: hat function (alpha empty). l >= 1: bubble times the orthogonal polynomial
// of the face evaluated at the barycentric coordinates of the face vertices;
// requires |alpha| <= k - l - 1.
FeFunction conforming_face_fn(const SimplicialComplex& cx, int l, int tau, std::span<const int> alpha, int k);
FeFunction nc_simplex_fn(const SimplicialComplex& cx, int K, int k);
FeFunction nc_facet_fn(const SimplicialComplex& cx, int F, int k);
// Sum of the facet functions over all facets containing vertex z.
FeFunction psi_z(const SimplicialComplex& cx, int z, int k);
// Sum of the simplex functions over all simplices; even k.
FeFunction psi_big(const SimplicialComplex& cx, int k);

// Polynomial s -> P_k^{(0,d-2)}(1-2s) as an expression in lambda_i of an l-simplex.
BaryPoly cr_profile(int k, int d, int num_vars, int var);

CrBasis build_basis(const SimplicialComplex& cx, int k, BoundaryCondition bc);
long dim_formula(const SimplicialComplex& cx, int k, BoundaryCondition bc);

// Trace from the smaller adjacent simplex minus the trace from the larger,
// in the facet's own barycentric variables. Interior facets only.
BaryPoly jump(const SimplicialComplex& cx, const FeFunction& v, int F);
// Trace on a boundary facet.
BaryPoly boundary_trace(const SimplicialComplex& cx, const FeFunction& v, int F);

}  // namespace crfe
