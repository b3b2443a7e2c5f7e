#include <algorithm>
#include <random>
#include <set>

#include "check_util.hpp"
#include "crfe/gram.hpp"
#include "crfe/linalg.hpp"
#include "crfe/verifier.hpp"

namespace crfe {

using detail::functions_of;

namespace {

// First entry where R differs from the identity.
void compare_identity(CheckRecorder& rec, const RationalMatrix& R, std::span<const Functional> dofs,
                      std::span<const BasisMember> members) {
  if (R.rows() != R.cols()) {
    rec.fail({{"functionals", R.rows()}, {"members", R.cols()}, {"reason", "matrix is not square"}});
    return;
  }
  for (Eigen::Index i = 0; i < R.rows(); ++i)
    for (Eigen::Index j = 0; j < R.cols(); ++j) {
      const Rational want = (i == j) ? Rational(1) : Rational(0);
      if (R(i, j) != want)
        rec.fail({{"row", i}, {"col", j}, {"functional", tag_json(dofs[i].tag)}, {"member", tag_json(members[j].tag)},
                  {"value", rational_json(R(i, j))}});
    }
}

bool facet_carried(const Functional& f) { return f.primary().kind == CarrierKind::Facet; }

int boundary_weight_degree(std::span<const Functional> dofs) {
  int deg = -1;
  for (const auto& f : dofs)
    for (const auto& t : f.terms)
      if (t.kind == CarrierKind::Facet) deg = std::max(deg, bary_degree(t.weight));
  return deg;
}

}  // namespace

Check check_biduality(const NamedComplex& m, int k, BoundaryCondition bc, std::span<const Functional> dofs,
                      std::span<const BasisMember> members) {
  Json params = mesh_params(m, k);
  params["bc"] = to_string(bc);
  params["dofs"] = static_cast<long>(dofs.size());
  CheckRecorder rec("biduality_general", params);
  const int wdeg = boundary_weight_degree(dofs);
  if (wdeg >= 0) rec.note("boundary_weight_max_degree", wdeg);
  const auto fns = functions_of(members);
  compare_identity(rec, functional_matrix(m.cx, dofs, fns), dofs, members);
  return rec.finish();
}

Check check_raw_unisolvence(const NamedComplex& m, int k, BoundaryCondition bc, std::span<const Functional> dofs,
                            std::span<const BasisMember> members) {
  Json params = mesh_params(m, k);
  params["bc"] = to_string(bc);
  CheckRecorder rec("dof_raw_unisolvence", params);
  const auto fns = functions_of(members);
  const RationalMatrix R = functional_matrix(m.cx, dofs, fns);
  long coupling = 0;
  for (Eigen::Index i = 0; i < R.rows(); ++i)
    for (Eigen::Index j = 0; j < R.cols(); ++j) {
      if (i == j) {
        if (R(i, i) != 1)
          rec.fail({{"row", i}, {"functional", tag_json(dofs[i].tag)}, {"diagonal", rational_json(R(i, i))}});
        continue;
      }
      if (R(i, j) == 0) continue;
      // Allowed: a boundary functional seeing a function whose dual is interior-carried.
      if (facet_carried(dofs[i]) && !facet_carried(dofs[j])) {
        ++coupling;
        continue;
      }
      rec.fail({{"row", i}, {"col", j}, {"functional", tag_json(dofs[i].tag)}, {"member", tag_json(members[j].tag)},
                {"value", rational_json(R(i, j))}});
    }
  rec.note("coupling_entries", coupling);
  return rec.finish();
}

Check check_biduality_edges_2d(const NamedComplex& m, int k, std::span<const Functional> dofs,
                               std::span<const BasisMember> members) {
  Json params = mesh_params(m, k);
  params["dofs"] = static_cast<long>(dofs.size());
  CheckRecorder rec("biduality_edges_2d", params);
  const auto fns = functions_of(members);
  compare_identity(rec, functional_matrix(m.cx, dofs, fns), dofs, members);
  return rec.finish();
}

Check check_biduality_facet_means(const NamedComplex& m, BoundaryCondition bc, std::span<const Functional> dofs,
                                  std::span<const BasisMember> members) {
  Json params = mesh_params(m, 1);
  params["bc"] = to_string(bc);
  CheckRecorder rec("biduality_facet_means", params);
  const auto fns = functions_of(members);
  compare_identity(rec, functional_matrix(m.cx, dofs, fns), dofs, members);
  return rec.finish();
}

Check check_restricted_trace_independence(const NamedComplex& m, int k, const RestrictedFamilyFn& family) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  CheckRecorder rec("restricted_trace_independence", mesh_params(m, k));
  long tested = 0;
  for (const Face& F : cx.faces(d - 1)) {
    if (!F.on_boundary) continue;
    const int K = F.patch.front();
    const auto facets = cx.faces_of(K, d - 1);
    const bool all_boundary =
        std::all_of(facets.begin(), facets.end(), [&](int G) { return cx.face(d - 1, G).on_boundary; });
    if (all_boundary) continue;
    const RestrictedFamily fam = family(F.id);
    const auto n = static_cast<Eigen::Index>(fam.traces.size());
    RationalMatrix G(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j)
        G(i, j) = G(j, i) = integrate_simplex(fam.traces[i] * fam.traces[j], Rational(1), d - 1);
    const auto rank = exact_rank(G);
    ++tested;
    if (rank != n) rec.fail({{"facet", F.id}, {"simplex", K}, {"rank", static_cast<long>(rank)}, {"size", n}});
  }
  if (tested == 0) rec.skip("precondition |F*(K)| < |F(K)| violated for every boundary facet");
  rec.note("facets_tested", tested);
  return rec.finish();
}

Check check_dof_well_definedness(const NamedComplex& m, int k, std::span<const Functional> dofs,
                                 std::span<const BasisMember> members) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  CheckRecorder rec("dof_well_definedness", mesh_params(m, k));
  long tested = 0;
  for (const auto& f : dofs)
    for (const auto& t : f.terms) {
      if (t.kind != CarrierKind::Facet || cx.face(d - 1, t.carrier).on_boundary) continue;
      const auto& patch = cx.face(d - 1, t.carrier).patch;
      for (const auto& mem : members) {
        const auto& pieces = mem.function.pieces();
        if (std::none_of(patch.begin(), patch.end(), [&](int K) { return pieces.count(K) > 0; })) continue;
        const Rational lo = evaluate(cx, t, mem.function, FacetSide::Lower);
        const Rational hi = evaluate(cx, t, mem.function, FacetSide::Upper);
        ++tested;
        if (lo != hi)
          rec.fail({{"functional", tag_json(f.tag)}, {"facet", t.carrier}, {"member", tag_json(mem.tag)},
                    {"lower", rational_json(lo)}, {"upper", rational_json(hi)}});
      }
    }
  rec.note("evaluations", tested);
  return rec.finish();
}

std::vector<FeFunction> random_combinations(std::span<const BasisMember> members, int count, unsigned seed) {
  std::vector<FeFunction> out;
  if (members.empty()) return out;
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(members.size()) - 1);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  const int terms = std::min<int>(6, static_cast<int>(members.size()));
  for (int c = 0; c < count; ++c) {
    FeFunction f;
    for (int t = 0; t < terms; ++t) {
      int p = num(gen);
      if (p == 0) p = 1;
      f += Rational(p, den(gen)) * members[pick(gen)].function;
    }
    out.push_back(f);
  }
  return out;
}

Check check_interpolation_projection(const NamedComplex& m, int k, BoundaryCondition bc,
                                     std::span<const BasisMember> members, std::span<const Functional> dofs) {
  const auto& cx = m.cx;
  Json params = mesh_params(m, k);
  params["bc"] = to_string(bc);
  CheckRecorder rec("interpolation_projection", params);

  std::vector<FeFunction> inputs = functions_of(members);
  const std::size_t n_members = inputs.size();
  for (auto& f : random_combinations(members, 20, 20240611u)) inputs.push_back(std::move(f));
  // Inputs with zero boundary trace: conforming functions of interior faces,
  // and (full data) members of the space with zero boundary moments.
  const std::size_t zero_begin = inputs.size();
  std::vector<BasisMember> interior;
  for (const auto& mem : members)
    if ((mem.tag.kind == BasisTag::Kind::Vertex || mem.tag.kind == BasisTag::Kind::Face) &&
        !cx.face(mem.tag.dim, mem.tag.entity).on_boundary)
      interior.push_back(mem);
  for (auto& f : random_combinations(interior, 5, 7u)) inputs.push_back(std::move(f));
  if (bc == BoundaryCondition::Full) {
    const CrBasis zero = build_basis(cx, k, BoundaryCondition::Zero);
    for (auto& f : random_combinations(zero.members, 5, 11u)) inputs.push_back(std::move(f));
  }
  rec.note("inputs", static_cast<long>(inputs.size()));

  const RationalMatrix A = functional_matrix(cx, dofs, inputs);
  for (std::size_t c = 0; c < inputs.size(); ++c) {
    const auto col = static_cast<Eigen::Index>(c);
    if (c < n_members) {
      for (Eigen::Index i = 0; i < A.rows(); ++i)
        if (A(i, col) != (i == col ? 1 : 0)) {
          rec.fail({{"input", tag_json(members[c].tag)}, {"functional", tag_json(dofs[i].tag)},
                    {"coefficient", rational_json(A(i, col))}});
          break;
        }
      continue;
    }
    FeFunction back;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      if (A(i, col) != 0) back += A(i, col) * members[i].function;
    if (!back.equals(inputs[c])) {
      const FeFunction diff = (back - inputs[c]).canonical();
      const auto& [K, p] = *diff.pieces().begin();
      rec.fail({{"input", static_cast<long>(c)}, {"simplex", K}, {"residual", p.to_string()}});
    }
    if (c >= zero_begin)
      for (Eigen::Index i = 0; i < A.rows(); ++i)
        if (facet_carried(dofs[i]) && A(i, col) != 0) {
          rec.fail({{"input", static_cast<long>(c)}, {"functional", tag_json(dofs[i].tag)},
                    {"coefficient", rational_json(A(i, col))}, {"reason", "boundary coefficient of a zero-trace input"}});
          break;
        }
  }
  return rec.finish();
}

Check check_approx_op_2d(const NamedComplex& m, int k, std::span<const BasisMember> zero_members,
                         const ApproxOpFn& op) {
  CheckRecorder rec("approx_op_2d_projection", mesh_params(m, k));
  std::vector<FeFunction> inputs = functions_of(zero_members);
  std::vector<std::string> labels;
  for (const auto& mem : zero_members) labels.push_back(mem.tag.to_string());
  for (auto& f : random_combinations(zero_members, 5, 3u)) {
    inputs.push_back(std::move(f));
    labels.push_back("combination " + std::to_string(labels.size()));
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const FeFunction out = op(inputs[i]);
    if (!out.equals(inputs[i])) {
      const FeFunction diff = (out - inputs[i]).canonical();
      const auto& [K, p] = *diff.pieces().begin();
      rec.fail({{"input", labels[i]}, {"simplex", K}, {"residual", p.to_string()}});
    }
  }
  return rec.finish();
}

Check check_mark_invariants(const NamedComplex& m, const Mark& mark) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  Json params{{"mesh", m.id}, {"d", d}, {"policy", mark.policy() == MarkPolicy::SmallestId ? "smallest" : "largest"}};
  CheckRecorder rec("mark_invariants", params);
  for (int l = 0; l <= d; ++l)
    for (const Face& f : cx.faces(l)) {
      const MarkTarget t = mark(l, f.id);
      bool ok = false;
      if (l == d) {
        ok = t.kind == CarrierKind::Simplex && t.id == f.patch.front();
      } else if (!f.on_boundary) {
        ok = t.kind == CarrierKind::Simplex && cx.contains(t.id, f);
      } else if (t.kind == CarrierKind::Facet) {
        const Face& g = cx.face(d - 1, t.id);
        ok = g.on_boundary && std::includes(g.vertices.begin(), g.vertices.end(), f.vertices.begin(), f.vertices.end());
      }
      if (!ok)
        rec.fail({{"l", l}, {"face", f.id}, {"boundary", f.on_boundary},
                  {"target", t.kind == CarrierKind::Simplex ? "simplex" : "facet"}, {"target_id", t.id}});
    }
  return rec.finish();
}

Check check_complex_consistency(const NamedComplex& m, const RefMapFn& ref_map) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  CheckRecorder rec("complex_consistency", Json{{"mesh", m.id}, {"d", d}});
  for (int l = 0; l <= d; ++l)
    for (const Face& f : cx.faces(l)) {
      // Closure: every (l-1)-subface is present.
      if (l > 0)
        for (std::size_t drop = 0; drop < f.vertices.size(); ++drop) {
          auto sub = f.vertices;
          sub.erase(sub.begin() + static_cast<long>(drop));
          if (cx.find_face(sub) < 0) rec.fail({{"l", l}, {"face", f.id}, {"missing_subface", sub}});
        }
      std::vector<int> patch;
      for (int K = 0; K < cx.num_simplices(); ++K)
        if (cx.contains(K, f)) patch.push_back(K);
      if (patch != f.patch) rec.fail({{"l", l}, {"face", f.id}, {"patch", f.patch}, {"expected_patch", patch}});
      if (l == d - 1 && f.patch.size() != (f.on_boundary ? 1u : 2u))
        rec.fail({{"facet", f.id}, {"patch_size", f.patch.size()}, {"boundary", f.on_boundary}});
      if (l == 0) continue;
      // Reference maps restricted to the face agree and hit its vertices in order.
      std::optional<RefMap> first;
      for (int K : f.patch) {
        const RefMap r = ref_map(K, l, f.id);
        for (int j = 0; j <= l; ++j) {
          std::vector<Rational> xhat(d, Rational(0));
          if (j > 0) xhat[j - 1] = 1;
          if (r.apply(xhat) != cx.mesh().vertices[f.vertices[j]])
            rec.fail({{"l", l}, {"face", f.id}, {"simplex", K}, {"reference_vertex", j},
                      {"reason", "reference vertex is not mapped onto the face vertex"}});
        }
        if (!first) {
          first = r;
        } else if (first->origin != r.origin || first->face_jacobian(l) != r.face_jacobian(l)) {
          rec.fail({{"l", l}, {"face", f.id}, {"simplex", K}, {"other", first->simplex},
                    {"reason", "restricted maps differ"}});
        }
      }
    }
  return rec.finish();
}

}  // namespace crfe
