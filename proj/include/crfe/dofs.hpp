#pragma once

#include "crfe/basis.hpp"
#include "crfe/complex.hpp"
#include "crfe/fe_function.hpp"
#include "crfe/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace crfe {

enum class CarrierKind { Simplex, Facet };

// Selects which simplex or boundary facet carries the functionals of a face.
enum class MarkPolicy { SmallestId, LargestId };

struct MarkTarget {
  CarrierKind kind = CarrierKind::Simplex;
  int id = 0;
  friend bool operator==(const MarkTarget&, const MarkTarget&) = default;
};

// Interior faces go to an adjacent simplex, boundary faces to a boundary facet
// containing them. A simplex is always marked by itself.
class Mark {
 public:
  Mark(const SimplicialComplex& cx, MarkPolicy policy = MarkPolicy::SmallestId);
  MarkTarget operator()(int l, int face_id) const { return targets_.at(l).at(face_id); }
  MarkPolicy policy() const { return policy_; }
  // Overrides one assignment; used to build deliberately invalid marks.
  void set(int l, int face_id, MarkTarget t) { targets_.at(l).at(face_id) = t; }

 private:
  MarkPolicy policy_;
  std::vector<std::vector<MarkTarget>> targets_;
};

// Which simplex's trace a facet-carried integral reads on an interior facet.
enum class FacetSide { Lower, Upper };

// scale * int_K w u for a simplex carrier, scale * (1/|F|) int_F w u for a facet
// carrier. Facet integrals are taken against the normalized measure because
// facet volumes are irrational in general.
struct WeightedIntegral {
  CarrierKind kind = CarrierKind::Simplex;
  int carrier = 0;
  BaryPoly weight;
  Rational scale{1};
};

// A linear functional dual to the basis member carrying the same tag.
struct Functional {
  BasisTag tag;
  std::vector<WeightedIntegral> terms;
  // Terms beyond the first are corrections added during assembly.
  const WeightedIntegral& primary() const { return terms.front(); }
};

Rational evaluate(const SimplicialComplex& cx, const WeightedIntegral& t, const FeFunction& u,
                  FacetSide side = FacetSide::Lower);
Rational evaluate(const SimplicialComplex& cx, const Functional& f, const FeFunction& u,
                  FacetSide side = FacetSide::Lower);

// [J_i(b_j)]
RationalMatrix functional_matrix(const SimplicialComplex& cx, std::span<const Functional> dofs,
                                 std::span<const FeFunction> fns);

// Local bidual functionals on K for odd k, one per local basis function
// (face functions of the faces of K of dimension >= 1, facet functions of K).
std::vector<Functional> local_simplex_dofs(const SimplicialComplex& cx, int K, int k);

// Traces on a boundary facet F of the functions the boundary functionals of F
// must separate: face functions of faces of F, and facet functions of the
// boundary facets of the simplex adjacent to F.
struct RestrictedFamily {
  int facet = 0;
  int simplex = 0;
  std::vector<BasisTag> tags;
  std::vector<BaryPoly> traces;
};
RestrictedFamily restricted_family(const SimplicialComplex& cx, int F, int k);
// Bidual functionals for the restricted family of a boundary facet F.
std::vector<Functional> boundary_facet_dofs(const SimplicialComplex& cx, int F, int k);

enum class BoundaryDofMode {
  // Boundary functionals corrected by the interior functionals of their simplex,
  // which makes the functional matrix the identity.
  Corrected,
  // Boundary functionals exactly as constructed on the facet; the functional
  // matrix is then unit block lower-triangular.
  Raw
};

struct DofSet {
  int k = 1;
  BoundaryCondition bc = BoundaryCondition::Full;
  BoundaryDofMode mode = BoundaryDofMode::Corrected;
  // functionals[i] is dual to basis.members[i].
  std::vector<Functional> functionals;
};

// Odd k only; throws UnsupportedError for even k.
DofSet assemble_dofs(const SimplicialComplex& cx, const CrBasis& basis, const Mark& mark,
                     BoundaryDofMode mode = BoundaryDofMode::Corrected);

// Two-dimensional edge functionals J_nu^E, nu = 0..k-1, for odd k:
//   J_nu^E u = (2/|E|) int_E g_nu u,
//   g_nu = gamma_nu (P_nu^{(1,1)}(2 phi_{A_1} - 1) - c_{nu,k} P_{k-1}^{(1,1)}(2 phi_{A_1} - 1)).
std::vector<Functional> edge_dofs_2d(const SimplicialComplex& cx, int E, int k);
// Edge basis: 4 b_E P_mu^{(1,1)}(2 phi_{A_1} - 1) for mu <= k-2 and the facet
// function for mu = k-1. The factor 4 normalizes b_E to 1 at the edge midpoint.
std::vector<BasisMember> edge_basis_2d(const SimplicialComplex& cx, int E, int k);

// Facet means (1/|F|) int_F u, tagged as duals of the k = 1 facet functions.
std::vector<Functional> facet_mean_dofs_k1(const SimplicialComplex& cx, BoundaryCondition bc);

}  // namespace crfe
