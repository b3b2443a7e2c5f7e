#include <chrono>

#include "crfe/determinants.hpp"
#include "crfe/gram.hpp"
#include "crfe/integration.hpp"
#include "crfe/interpolation.hpp"
#include "crfe/jacobi.hpp"
#include "crfe/verifier.hpp"

// Fixtures built to make each check family fail.

namespace crfe {

namespace {

Check tagged(Check c, const std::string& fixture) {
  c.params["fixture"] = fixture;
  return c;
}

}  // namespace

Report run_negative_controls(const std::string& filter) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  const NamedComplex tri = make_named(MeshGenerator::TwoSimplex, 2);
  const NamedComplex tet = make_named(MeshGenerator::TwoSimplex, 3);
  const NamedComplex grid = make_named(MeshGenerator::Grid2d, 2, 2);
  report.mesh = tri.id + ", " + tet.id + ", " + grid.id;
  const auto& cx = tri.cx;
  const auto& cx3 = tet.cx;

  auto run = [&](std::string_view name, auto&& fn) {
    if (name.starts_with(filter)) report.checks.push_back(fn());
  };

  run("jacobi_orthogonality", [] {
    return tagged(check_jacobi_orthogonality(4, 1,
                                             [](int n, int a, int b) {
                                               UniPoly p = jacobi_poly(n, a, b);
                                               return n == 3 ? p + UniPoly::constant(Rational(1, 7)) : p;
                                             }),
                  "P_3 shifted by 1/7");
  });
  run("jacobi_endpoints", [] {
    return tagged(check_jacobi_endpoints(4, 1, 3,
                                         [](int n, int a, int b) {
                                           UniPoly p = jacobi_poly(n, a, b);
                                           return n == 2 ? p * Rational(2) : p;
                                         }),
                  "P_2 doubled");
  });
  run("jacobi_explicit_sum", [] {
    return tagged(check_jacobi_explicit_sum(4, 3,
                                            [](int k, int d) {
                                              UniPoly p = jacobi_cr_shifted(k, d);
                                              return k == 2 ? p + UniPoly::constant(Rational(1, 3)) : p;
                                            }),
                  "k = 2 sum shifted by 1/3");
  });
  run("simplex_orthopoly_orthogonality", [] {
    // Plain barycentric monomials are not orthogonal.
    return tagged(check_simplex_orthopoly_orthogonality(2, 2,
                                                        [](std::span<const int> a) {
                                                          Exponent e{};
                                                          for (std::size_t i = 0; i < a.size(); ++i)
                                                            e[i + 1] = static_cast<std::uint8_t>(a[i]);
                                                          return Polynomial::monomial(static_cast<int>(a.size()) + 1, e);
                                                        }),
                  "monomials instead of orthogonal polynomials");
  });
  run("simplex_orthopoly_examples", [] {
    return tagged(check_simplex_orthopoly_examples(2,
                                                   [](std::span<const int> a) {
                                                     std::vector<int> r(a.rbegin(), a.rend());
                                                     return simplex_orthopoly(r);
                                                   }),
                  "multi-index reversed");
  });
  run("edge_gamma_normalization", [] {
    return tagged(check_edge_gamma(3, [](int nu) { return nu == 2 ? edge_gamma(nu) + 1 : edge_gamma(nu); }),
                  "gamma_2 plus one");
  });
  run("g_x1_identity", [] {
    return tagged(check_g_x1_identity(3, 2,
                                      [](int d, std::span<const int> alpha) {
                                        int tail = 0;
                                        for (std::size_t i = 1; i < alpha.size(); ++i) tail += alpha[i];
                                        return Rational(Integer(1), factorial(d - 1 + tail));
                                      }),
                  "constant with the factorial index off by one");
  });
  run("tech_identities", [] {
    return tagged(check_tech_identities(4, 4, [](int k, int d) { return Rational(binomial(k + d - 1, k)); }),
                  "rho with d - 1 in place of d - 2");
  });
  run("det_Q_formula", [] {
    return tagged(check_det_q_formula(4,
                                      [](int d, const Rational& s) {
                                        Rational r = sign_power(d + 1) * (Rational(d) - s);
                                        for (int i = 0; i < d - 1; ++i) r *= 1 + s;
                                        return r;
                                      }),
                  "closed form with d - s in place of d - 1 - s");
  });
  run("det_R_formula", [] {
    return tagged(check_det_r_formula(4, [](int d, const Rational& s) { return -det_r_closed_form(d, s); }),
                  "closed form with flipped sign");
  });
  run("det_Q_regular", [] {
    return tagged(check_det_q_regular(5,
                                      [](int d, const Rational& s) {
                                        return d == 4 ? det_q_closed_form(d, s) + 1 : det_q_closed_form(d, s);
                                      }),
                  "closed form off by one at d = 4");
  });

  run("moment_conditions", [&] {
    // A facet function shifted by a constant on one side of its facet.
    int F = 0;
    for (const Face& f : cx.faces(1))
      if (!f.on_boundary) F = f.id;
    FeFunction f = nc_facet_fn(cx, F, 3);
    f.add(cx.face(1, F).patch.front(), Polynomial::constant(3, Rational(1, 5)));
    const std::vector<BasisMember> members{{BasisTag::nc_facet(2, F), f}};
    return tagged(check_moment_conditions(tri, 3, BoundaryCondition::Full, members), "facet function plus 1/5 on one side");
  });
  run("orthofacetprop_a", [&] {
    return tagged(check_orthofacetprop_a(tri, 2,
                                         [](int k, int d, int nv, int var) {
                                           return cr_profile(k, d, nv, var) +
                                                  Polynomial::variable(nv, (var + 1) % nv) * Rational(1, 2);
                                         }),
                  "profile plus a neighbouring coordinate");
  });
  run("orthofacetprop_b", [&] {
    return tagged(check_orthofacetprop_b(
                      tri, 2, [](int k, int d, int nv, int var) { return cr_profile(k, d + 1, nv, var); }),
                  "profile of the wrong dimension");
  });
  run("vertex_values", [&] {
    auto members = all_nc_members(cx3, 2);
    members.front().function.add(0, Polynomial::constant(4, Rational(1, 3)));
    return tagged(check_vertex_values(tet, 2, members), "simplex function plus 1/3");
  });
  run("nc_k1_closed_form", [&] {
    auto members = all_nc_members(cx3, 1);
    members.front().function = hat_function(cx3, 0);
    return tagged(check_nc_k1_closed_form(tet, members), "hat function tagged as a simplex function");
  });
  run("direct_sums", [&] {
    auto members = build_basis(cx, 3, BoundaryCondition::Full).members;
    members.push_back(members.front());
    return tagged(check_direct_sums(tri, 3, BoundaryCondition::Full, members,
                                    dim_formula(cx, 3, BoundaryCondition::Full)),
                  "first member repeated");
  });
  run("overcomplete_dependency", [&] {
    auto stack = overcomplete_stack(cx, 2);
    stack.pop_back();
    return tagged(check_overcomplete_dependency(tri, 2, stack), "one simplex function missing");
  });
  run("containment", [&] {
    auto members = build_basis(cx, 3, BoundaryCondition::Full).members;
    members.erase(members.begin());
    return tagged(check_containment(tri, 3, BoundaryCondition::Full, members), "first member removed");
  });
  run("psi_z_properties", [&] {
    return tagged(check_psi_z_properties(tri, 2,
                                         [&](int z) {
                                           FeFunction f = psi_z(cx, z, 2);
                                           if (z == 0) f += nc_simplex_fn(cx, 0, 2);
                                           return f;
                                         }),
                  "psi of vertex 0 plus a simplex function");
  });
  run("psi_big_continuity", [&] {
    return tagged(check_psi_big_continuity(tri, 2, psi_big(cx, 2) + nc_simplex_fn(cx, 0, 2)),
                  "simplex function 0 counted twice");
  });
  run("biduality_general", [&] {
    const CrBasis basis = build_basis(cx3, 3, BoundaryCondition::Zero);
    DofSet dofs = assemble_dofs(cx3, basis, Mark(cx3));
    dofs.functionals.back().terms.front().scale *= 2;
    return tagged(check_biduality(tet, 3, BoundaryCondition::Zero, dofs.functionals, basis.members),
                  "last functional doubled");
  });
  run("dof_raw_unisolvence", [&] {
    const CrBasis basis = build_basis(cx, 3, BoundaryCondition::Full);
    DofSet dofs = assemble_dofs(cx, basis, Mark(cx), BoundaryDofMode::Raw);
    std::swap(dofs.functionals[0], dofs.functionals[1]);
    return tagged(check_raw_unisolvence(tri, 3, BoundaryCondition::Full, dofs.functionals, basis.members),
                  "first two functionals swapped");
  });
  run("biduality_edges_2d", [&] {
    std::vector<Functional> dofs;
    std::vector<BasisMember> members;
    for (const Face& E : cx.faces(1)) {
      if (E.on_boundary) continue;
      dofs = edge_dofs_2d(cx, E.id, 3);
      members = edge_basis_2d(cx, E.id, 3);
    }
    members.front().function *= Rational(1, 4);
    return tagged(check_biduality_edges_2d(tri, 3, dofs, members), "edge bubble without the factor 4");
  });
  run("biduality_facet_means", [&] {
    auto dofs = facet_mean_dofs_k1(cx3, BoundaryCondition::Full);
    std::vector<BasisMember> members;
    for (const auto& f : dofs) members.push_back({f.tag, nc_facet_fn(cx3, f.tag.entity, 1)});
    dofs.front().terms.front().scale *= 3;
    return tagged(check_biduality_facet_means(tet, BoundaryCondition::Full, dofs, members), "first mean tripled");
  });
  run("restricted_trace_independence", [&] {
    return tagged(check_restricted_trace_independence(tet, 3,
                                                      [&](int F) {
                                                        RestrictedFamily fam = restricted_family(cx3, F, 3);
                                                        fam.tags.push_back(fam.tags.front());
                                                        fam.traces.push_back(fam.traces.front());
                                                        return fam;
                                                      }),
                  "first trace repeated");
  });
  run("dof_well_definedness", [&] {
    // A facet mean against a weight of degree k on an interior facet.
    auto dofs = facet_mean_dofs_k1(cx, BoundaryCondition::Zero);
    dofs.front().terms.front().weight = Polynomial::variable(2, 0);
    const CrBasis basis = build_basis(cx, 1, BoundaryCondition::Full);
    return tagged(check_dof_well_definedness(tri, 1, dofs, basis.members), "weight lambda_0 of degree k");
  });
  run("interpolation_projection", [&] {
    const CrBasis basis = build_basis(cx, 3, BoundaryCondition::Full);
    DofSet dofs = assemble_dofs(cx, basis, Mark(cx));
    dofs.functionals[1].terms.push_back(dofs.functionals[0].terms.front());
    return tagged(check_interpolation_projection(tri, 3, BoundaryCondition::Full, basis.members, dofs.functionals),
                  "functional 1 plus functional 0");
  });
  run("approx_op_2d_projection", [&] {
    const CrBasis basis = build_basis(grid.cx, 3, BoundaryCondition::Zero);
    return tagged(check_approx_op_2d(grid, 3, basis.members,
                                     [&](const FeFunction& u) { return Rational(2) * approx_op_2d(grid.cx, u, 3); }),
                  "operator doubled");
  });
  run("mark_invariants", [&] {
    Mark mark(cx);
    for (const Face& F : cx.faces(1))
      if (!F.on_boundary) {
        for (int K = 0; K < cx.num_simplices(); ++K)
          if (!cx.contains(K, F)) mark.set(1, F.id, {CarrierKind::Simplex, K});
        mark.set(0, 0, {CarrierKind::Simplex, 0});
      }
    return tagged(check_mark_invariants(tri, mark), "boundary vertex marked by a simplex");
  });
  run("complex_consistency", [&] {
    return tagged(check_complex_consistency(tri,
                                            [&](int K, int l, int id) {
                                              RefMap r = cx.ref_map(K, l, id);
                                              if (l == 1) r.jacobian.col(0) *= Rational(-1);
                                              return r;
                                            }),
                  "edge maps reversed");
  });

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace crfe
