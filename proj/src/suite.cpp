#include <chrono>
#include <optional>

#include "crfe/determinants.hpp"
#include "crfe/integration.hpp"
#include "crfe/interpolation.hpp"
#include "crfe/jacobi.hpp"
#include "crfe/verifier.hpp"

namespace crfe {

namespace {

class Runner {
 public:
  Runner(std::string filter, Report& report) : filter_(std::move(filter)), report_(report) {}
  bool wants(std::string_view name) const { return name.starts_with(filter_); }
  template <class Fn>
  void operator()(std::string_view name, Fn&& fn) {
    if (wants(name)) report_.checks.push_back(fn());
  }

 private:
  std::string filter_;
  Report& report_;
};

Rational g_constant(int d, std::span<const int> alpha) {
  Integer num(1);
  int tail = 0;
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    num *= factorial(alpha[i]);
    tail += alpha[i];
  }
  return Rational(num, factorial(d - 2 + tail));
}

BaryPoly orthopoly(std::span<const int> a) { return simplex_orthopoly(a); }

void run_foundations(Runner& run) {
  run("jacobi_orthogonality", [] { return check_jacobi_orthogonality(8, 4, jacobi_poly); });
  run("jacobi_endpoints", [] { return check_jacobi_endpoints(8, 6, 8, jacobi_poly); });
  run("jacobi_explicit_sum", [] { return check_jacobi_explicit_sum(10, 8, jacobi_cr_shifted); });
  run("simplex_orthopoly_orthogonality", [] { return check_simplex_orthopoly_orthogonality(3, 4, orthopoly); });
  run("simplex_orthopoly_examples", [] { return check_simplex_orthopoly_examples(4, orthopoly); });
  run("edge_gamma_normalization", [] { return check_edge_gamma(5, edge_gamma); });
  run("g_x1_identity", [] { return check_g_x1_identity(4, 3, g_constant); });
  run("tech_identities", [] { return check_tech_identities(8, 10, rho); });
  run("det_Q_formula", [] { return check_det_q_formula(8, det_q_closed_form); });
  run("det_R_formula", [] { return check_det_r_formula(8, det_r_closed_form); });
  run("det_Q_regular", [] { return check_det_q_regular(8, det_q_closed_form); });
}

// Lazily built objects shared by the checks of one (mesh, k).
struct Context {
  const NamedComplex& m;
  int k;
  std::optional<CrBasis> basis[2];
  std::optional<DofSet> dofs[2];
  std::optional<DofSet> raw;

  const CrBasis& get_basis(BoundaryCondition bc) {
    auto& slot = basis[bc == BoundaryCondition::Full ? 0 : 1];
    if (!slot) slot = build_basis(m.cx, k, bc);
    return *slot;
  }
  const DofSet& get_dofs(BoundaryCondition bc) {
    auto& slot = dofs[bc == BoundaryCondition::Full ? 0 : 1];
    if (!slot) slot = assemble_dofs(m.cx, get_basis(bc), Mark(m.cx));
    return *slot;
  }
  const DofSet& get_raw() {
    if (!raw) raw = assemble_dofs(m.cx, get_basis(BoundaryCondition::Full), Mark(m.cx), BoundaryDofMode::Raw);
    return *raw;
  }
};

constexpr BoundaryCondition kBcs[] = {BoundaryCondition::Full, BoundaryCondition::Zero};

void run_mesh_checks(Runner& run, const NamedComplex& m, int k) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  const bool odd = k % 2 == 1;
  const bool multi = cx.num_simplices() > 1;
  Context ctx{m, k, {}, {}, {}};

  for (auto bc : kBcs)
    run("moment_conditions", [&] { return check_moment_conditions(m, k, bc, ctx.get_basis(bc).members); });
  run("orthofacetprop_a", [&] { return check_orthofacetprop_a(m, k, cr_profile); });
  run("orthofacetprop_b", [&] { return check_orthofacetprop_b(m, k, cr_profile); });
  run("vertex_values", [&] { return check_vertex_values(m, k, all_nc_members(cx, k)); });
  if (k == 1) run("nc_k1_closed_form", [&] { return check_nc_k1_closed_form(m, all_nc_members(cx, 1)); });
  for (auto bc : kBcs)
    run("direct_sums", [&] { return check_direct_sums(m, k, bc, ctx.get_basis(bc).members, dim_formula(cx, k, bc)); });
  if (!odd) run("overcomplete_dependency", [&] { return check_overcomplete_dependency(m, k, overcomplete_stack(cx, k)); });
  for (auto bc : kBcs)
    run("containment", [&] { return check_containment(m, k, bc, ctx.get_basis(bc).members); });
  run("psi_z_properties", [&] { return check_psi_z_properties(m, k, [&](int z) { return psi_z(cx, z, k); }); });
  if (!odd) run("psi_big_continuity", [&] { return check_psi_big_continuity(m, k, psi_big(cx, k)); });

  if (odd && multi) {
    for (auto bc : kBcs)
      run("biduality_general", [&] {
        return check_biduality(m, k, bc, ctx.get_dofs(bc).functionals, ctx.get_basis(bc).members);
      });
    run("dof_raw_unisolvence", [&] {
      return check_raw_unisolvence(m, k, BoundaryCondition::Full, ctx.get_raw().functionals,
                                   ctx.get_basis(BoundaryCondition::Full).members);
    });
  }
  if (odd && d == 2) {
    std::vector<Functional> edofs;
    std::vector<BasisMember> ebasis;
    if (run.wants("biduality_edges_2d") || run.wants("dof_well_definedness")) {
      for (const Face& E : cx.faces(1)) {
        if (E.on_boundary) continue;
        for (auto& f : edge_dofs_2d(cx, E.id, k)) edofs.push_back(std::move(f));
        for (auto& b : edge_basis_2d(cx, E.id, k)) ebasis.push_back(std::move(b));
      }
    }
    run("biduality_edges_2d", [&] { return check_biduality_edges_2d(m, k, edofs, ebasis); });
    run("dof_well_definedness",
        [&] { return check_dof_well_definedness(m, k, edofs, ctx.get_basis(BoundaryCondition::Full).members); });
  }
  if (k == 1) {
    for (auto bc : kBcs)
      run("biduality_facet_means", [&] {
        const auto dofs = facet_mean_dofs_k1(cx, bc);
        std::vector<BasisMember> members;
        for (const auto& f : dofs) members.push_back({f.tag, nc_facet_fn(cx, f.tag.entity, 1)});
        return check_biduality_facet_means(m, bc, dofs, members);
      });
    if (d != 2)
      run("dof_well_definedness", [&] {
        return check_dof_well_definedness(m, 1, facet_mean_dofs_k1(cx, BoundaryCondition::Full),
                                          ctx.get_basis(BoundaryCondition::Full).members);
      });
  }
  if (odd)
    run("restricted_trace_independence", [&] {
      return check_restricted_trace_independence(m, k, [&](int F) { return restricted_family(cx, F, k); });
    });
  if (odd && multi)
    for (auto bc : kBcs)
      run("interpolation_projection", [&] {
        return check_interpolation_projection(m, k, bc, ctx.get_basis(bc).members, ctx.get_dofs(bc).functionals);
      });
  if (odd && d == 2 && multi)
    run("approx_op_2d_projection", [&] {
      return check_approx_op_2d(m, k, ctx.get_basis(BoundaryCondition::Zero).members,
                                [&](const FeFunction& u) { return approx_op_2d(cx, u, k); });
    });
}

void run_mesh_structure(Runner& run, const NamedComplex& m) {
  run("complex_consistency", [&] {
    return check_complex_consistency(m, [&](int K, int l, int id) { return m.cx.ref_map(K, l, id); });
  });
  for (auto policy : {MarkPolicy::SmallestId, MarkPolicy::LargestId})
    run("mark_invariants", [&] { return check_mark_invariants(m, Mark(m.cx, policy)); });
}

}  // namespace

std::vector<NamedComplex> default_meshes() {
  std::vector<NamedComplex> out;
  out.push_back(make_named(MeshGenerator::Reference, 2));
  out.push_back(make_named(MeshGenerator::TwoSimplex, 2));
  out.push_back(make_named(MeshGenerator::Grid2d, 2, 2));
  out.push_back(make_named(MeshGenerator::Reference, 3));
  out.push_back(make_named(MeshGenerator::TwoSimplex, 3));
  out.push_back(make_named(MeshGenerator::KuhnCube, 3));
  return out;
}

Report run_suite(const std::vector<NamedComplex>& meshes, const SuiteOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  for (std::size_t i = 0; i < meshes.size(); ++i) report.mesh += (i ? ", " : "") + meshes[i].id;
  Runner run(opt.filter, report);
  run_foundations(run);
  for (const auto& m : meshes) {
    run_mesh_structure(run, m);
    for (int k = opt.k_min; k <= opt.k_max; ++k) run_mesh_checks(run, m, k);
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace crfe
