#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crfe/basis.hpp"
#include "crfe/complex.hpp"
#include "crfe/dofs.hpp"
#include "crfe/orthopoly.hpp"
#include "crfe/univariate.hpp"

namespace crfe {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "crfe 1.0.0";

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);
CheckStatus parse_check_status(std::string_view s);

struct Check {
  std::string name;
  // {"mesh": id, "d": d, "k": k, ...extra}; foundation checks carry their ranges instead.
  Json params = Json::object();
  CheckStatus status = CheckStatus::Pass;
  // Failure witness, or the reason a check was skipped.
  std::optional<Json> witness;
};

struct Report {
  std::string version = kVersion;
  std::string mesh;
  std::vector<Check> checks;
  double elapsed_ms = 0;

  bool passed() const;
  int count(CheckStatus s) const;
};

Json to_json(const Check& c);
Json to_json(const Report& r);
Check check_from_json(const Json& j);
Report report_from_json(const Json& j);

// A validated mesh with the id used in check params.
struct NamedComplex {
  std::string id;
  SimplicialComplex cx;
};
NamedComplex make_named(MeshGenerator g, int dim, int n = 2);

// Witness helpers.
Json rational_json(const Rational& q);
Json tag_json(const BasisTag& t);

// Accumulates failures; the first one becomes the witness.
class CheckRecorder {
 public:
  CheckRecorder(std::string name, Json params) : name_(std::move(name)), params_(std::move(params)) {}
  void fail(Json witness);
  void skip(std::string reason);
  void note(const std::string& key, Json value) { params_[key] = std::move(value); }
  bool failed() const { return failures_ > 0; }
  Check finish() const;

 private:
  std::string name_;
  Json params_;
  long failures_ = 0;
  std::optional<Json> witness_;
  std::optional<std::string> skip_reason_;
};

Json mesh_params(const NamedComplex& m, int k);

// ---------------------------------------------------------------------------
// Check families. Every family takes the objects under test explicitly so that
// a test fixture can hand in a deliberately broken variant.

using JacobiFamily = std::function<UniPoly(int n, int alpha, int beta)>;
using CrShiftedFamily = std::function<UniPoly(int k, int d)>;
using OrthopolyFamily = std::function<BaryPoly(std::span<const int> alpha)>;
using RationalFn1 = std::function<Rational(int)>;
using RhoFn = std::function<Rational(int k, int d)>;
using DetClosedForm = std::function<Rational(int d, const Rational& s)>;
using GConstant = std::function<Rational(int d, std::span<const int> alpha)>;
using ProfileFn = std::function<BaryPoly(int k, int d, int num_vars, int var)>;

Check check_jacobi_orthogonality(int n_max, int ab_max, const JacobiFamily& family);
Check check_jacobi_endpoints(int n_max, int ab_max, int d_max, const JacobiFamily& family);
Check check_jacobi_explicit_sum(int k_max, int d_max, const CrShiftedFamily& explicit_sum);
Check check_simplex_orthopoly_orthogonality(int l_max, int order_max, const OrthopolyFamily& family);
Check check_simplex_orthopoly_examples(int order_max, const OrthopolyFamily& family);
Check check_edge_gamma(int nu_max, const RationalFn1& gamma);
// int over the trailing facet variables of x^alpha = c x_1^a1 (1 - x_1)^(d-2+|alpha'|)
Check check_g_x1_identity(int d_max, int order_max, const GConstant& c);
Check check_tech_identities(int d_max, int k_max, const RhoFn& rho_fn);
Check check_det_q_formula(int d_max, const DetClosedForm& closed);
Check check_det_r_formula(int d_max, const DetClosedForm& closed);
Check check_det_q_regular(int d_max, const DetClosedForm& closed);

// Interior jump moments (and boundary traces for bc = zero) against all
// barycentric monomials of degree <= k-1.
Check check_moment_conditions(const NamedComplex& m, int k, BoundaryCondition bc,
                              std::span<const BasisMember> members);
// (a) trace of the profile on the facet opposite z is 1; (b) it is orthogonal
// to P_{k-1} on the other facets.
Check check_orthofacetprop_a(const NamedComplex& m, int k, const ProfileFn& profile);
Check check_orthofacetprop_b(const NamedComplex& m, int k, const ProfileFn& profile);
// Members tagged NcSimplex/NcFacet are compared with the vertex value formulas.
Check check_vertex_values(const NamedComplex& m, int k, std::span<const BasisMember> nc_members);
std::vector<BasisMember> all_nc_members(const SimplicialComplex& cx, int k);
// k = 1: simplex functions vanish and facet functions equal 1 - d lambda_opp.
Check check_nc_k1_closed_form(const NamedComplex& m, std::span<const BasisMember> nc_members);
// Rank of the members equals their count and the dimension count. For even k
// also stacks every simplex function onto the full conforming set.
Check check_direct_sums(const NamedComplex& m, int k, BoundaryCondition bc, std::span<const BasisMember> members,
                        long expected_dim);
std::vector<BasisMember> overcomplete_stack(const SimplicialComplex& cx, int k);
Check check_overcomplete_dependency(const NamedComplex& m, int k, std::span<const BasisMember> stack);
// Hat functions, all face functions and (bc = full) the constant 1 lie in the span.
Check check_containment(const NamedComplex& m, int k, BoundaryCondition bc, std::span<const BasisMember> members);
using PsiFn = std::function<FeFunction(int z)>;
Check check_psi_z_properties(const NamedComplex& m, int k, const PsiFn& psi);
Check check_psi_big_continuity(const NamedComplex& m, int k, const FeFunction& psi_big_fn);
Check check_biduality(const NamedComplex& m, int k, BoundaryCondition bc, std::span<const Functional> dofs,
                      std::span<const BasisMember> members);
// Raw boundary functionals: unit diagonal, off-diagonal entries only in
// boundary rows against interior-carried columns.
Check check_raw_unisolvence(const NamedComplex& m, int k, BoundaryCondition bc, std::span<const Functional> dofs,
                            std::span<const BasisMember> members);
Check check_biduality_edges_2d(const NamedComplex& m, int k, std::span<const Functional> dofs,
                               std::span<const BasisMember> members);
Check check_biduality_facet_means(const NamedComplex& m, BoundaryCondition bc, std::span<const Functional> dofs,
                                  std::span<const BasisMember> members);
using RestrictedFamilyFn = std::function<RestrictedFamily(int F)>;
Check check_restricted_trace_independence(const NamedComplex& m, int k, const RestrictedFamilyFn& family);
// Facet-carried functionals on interior facets give the same value from both sides.
Check check_dof_well_definedness(const NamedComplex& m, int k, std::span<const Functional> dofs,
                                 std::span<const BasisMember> members);
// Interpolation reproduces members and random combinations; boundary
// coefficients vanish for inputs with zero boundary trace.
Check check_interpolation_projection(const NamedComplex& m, int k, BoundaryCondition bc,
                                     std::span<const BasisMember> members, std::span<const Functional> dofs);
using ApproxOpFn = std::function<FeFunction(const FeFunction&)>;
Check check_approx_op_2d(const NamedComplex& m, int k, std::span<const BasisMember> zero_members,
                         const ApproxOpFn& op);
Check check_mark_invariants(const NamedComplex& m, const Mark& mark);
using RefMapFn = std::function<RefMap(int K, int l, int face_id)>;
// Face closure, patches, and reference maps that agree on shared faces.
Check check_complex_consistency(const NamedComplex& m, const RefMapFn& ref_map);

// Deterministic pseudo-random rational combinations of the members.
std::vector<FeFunction> random_combinations(std::span<const BasisMember> members, int count, unsigned seed);

// ---------------------------------------------------------------------------

struct SuiteOptions {
  int k_min = 1;
  int k_max = 3;
  // Name prefix; empty selects every check.
  std::string filter;
};

// Foundation checks plus every mesh-level check on each mesh and order.
Report run_suite(const std::vector<NamedComplex>& meshes, const SuiteOptions& opt);
// The built-in meshes: reference, two-simplex, grid2d (n = 2) and kuhn-cube for d <= 3.
std::vector<NamedComplex> default_meshes();
// Every check family run on a fixture built to fail.
Report run_negative_controls(const std::string& filter = "");

}  // namespace crfe
