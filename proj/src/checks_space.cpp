#include <algorithm>
#include <set>

#include "check_util.hpp"
#include "crfe/gram.hpp"
#include "crfe/jacobi.hpp"
#include "crfe/linalg.hpp"
#include "crfe/verifier.hpp"

namespace crfe {

using detail::first_nonzero_moment;
using detail::functions_of;

Check check_moment_conditions(const NamedComplex& m, int k, BoundaryCondition bc,
                              std::span<const BasisMember> members) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  Json params = mesh_params(m, k);
  params["bc"] = to_string(bc);
  params["test_degree"] = k - 1;
  CheckRecorder rec("moment_conditions", params);
  long tested = 0;
  for (const auto& mem : members) {
    std::set<int> facets;
    for (const auto& [K, p] : mem.function.pieces())
      for (int F : cx.faces_of(K, d - 1)) facets.insert(F);
    for (int F : facets) {
      const Face& f = cx.face(d - 1, F);
      if (f.on_boundary && bc == BoundaryCondition::Full) continue;
      const BaryPoly j = f.on_boundary ? boundary_trace(cx, mem.function, F) : jump(cx, mem.function, F);
      ++tested;
      if (auto bad = first_nonzero_moment(j, d - 1, k - 1))
        rec.fail({{"member", tag_json(mem.tag)}, {"facet", F}, {"boundary", f.on_boundary},
                  {"beta", bad->beta}, {"moment", rational_json(bad->value)}});
    }
  }
  rec.note("facet_tests", tested);
  return rec.finish();
}

namespace {

// The profile P_k^{(0,d-2)}(1 - 2 lambda_z) on K, traced onto facet F of K.
BaryPoly profile_trace(const SimplicialComplex& cx, int K, int z, int F, int k, const ProfileFn& profile) {
  const int d = cx.dim();
  const BaryPoly q = profile(k, d, d + 1, cx.local_index(K, z));
  return bary_canonical(cx.trace(K, q, cx.face(d - 1, F)));
}

}  // namespace

Check check_orthofacetprop_a(const NamedComplex& m, int k, const ProfileFn& profile) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  CheckRecorder rec("orthofacetprop_a", mesh_params(m, k));
  for (int K = 0; K < cx.num_simplices(); ++K)
    for (int z : cx.simplex(K)) {
      std::vector<int> rest;
      for (int v : cx.simplex(K))
        if (v != z) rest.push_back(v);
      const int F = cx.find_face(rest);
      const BaryPoly t = profile_trace(cx, K, z, F, k, profile);
      if (!bary_equal(t, Polynomial::constant(d, 1)))
        rec.fail({{"simplex", K}, {"vertex", z}, {"facet", F}, {"trace", t.to_string()}});
    }
  return rec.finish();
}

Check check_orthofacetprop_b(const NamedComplex& m, int k, const ProfileFn& profile) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  CheckRecorder rec("orthofacetprop_b", mesh_params(m, k));
  for (int K = 0; K < cx.num_simplices(); ++K)
    for (int z : cx.simplex(K))
      for (int F : cx.faces_of(K, d - 1)) {
        const auto& fv = cx.face(d - 1, F).vertices;
        if (std::find(fv.begin(), fv.end(), z) == fv.end()) continue;
        const BaryPoly t = profile_trace(cx, K, z, F, k, profile);
        if (auto bad = first_nonzero_moment(t, d - 1, k - 1))
          rec.fail({{"simplex", K}, {"vertex", z}, {"facet", F}, {"beta", bad->beta},
                    {"moment", rational_json(bad->value)}});
      }
  return rec.finish();
}

std::vector<BasisMember> all_nc_members(const SimplicialComplex& cx, int k) {
  const int d = cx.dim();
  std::vector<BasisMember> out;
  for (int K = 0; K < cx.num_simplices(); ++K) out.push_back({BasisTag::nc_simplex(d, K), nc_simplex_fn(cx, K, k)});
  for (int F = 0; F < cx.num_faces(d - 1); ++F) out.push_back({BasisTag::nc_facet(d, F), nc_facet_fn(cx, F, k)});
  return out;
}

Check check_vertex_values(const NamedComplex& m, int k, std::span<const BasisMember> nc_members) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  CheckRecorder rec("vertex_values", mesh_params(m, k));
  const Rational r(binomial(k + d - 2, k));
  const Rational simplex_value = (Rational(d - 1) + sign_power(k) * r) / d;
  const Rational facet_value = (Rational(1) + sign_power(k + 1) * r) / d;
  auto compare = [&](const BasisMember& mem, int K, int y, const Rational& want) {
    const Rational got = mem.function.value_at_vertex(cx, K, y);
    if (got != want)
      rec.fail({{"member", tag_json(mem.tag)}, {"simplex", K}, {"vertex", y}, {"value", rational_json(got)},
                {"expected", rational_json(want)}});
  };
  for (const auto& mem : nc_members) {
    if (mem.tag.kind == BasisTag::Kind::NcSimplex) {
      const int K = mem.tag.entity;
      for (int y : cx.simplex(K)) compare(mem, K, y, simplex_value);
    } else if (mem.tag.kind == BasisTag::Kind::NcFacet) {
      const Face& f = cx.face(d - 1, mem.tag.entity);
      for (int K : f.patch)
        for (int y : cx.simplex(K)) {
          const bool on_facet = std::binary_search(f.vertices.begin(), f.vertices.end(), y);
          compare(mem, K, y, on_facet ? facet_value : facet_value * Rational(1 - d));
        }
    }
  }
  return rec.finish();
}

Check check_nc_k1_closed_form(const NamedComplex& m, std::span<const BasisMember> nc_members) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  CheckRecorder rec("nc_k1_closed_form", mesh_params(m, 1));
  for (const auto& mem : nc_members) {
    if (mem.tag.kind == BasisTag::Kind::NcSimplex) {
      const FeFunction c = mem.function.canonical();
      if (!c.pieces().empty()) {
        const auto& [K, p] = *c.pieces().begin();
        rec.fail({{"member", tag_json(mem.tag)}, {"simplex", K}, {"piece", p.to_string()}});
      }
    } else if (mem.tag.kind == BasisTag::Kind::NcFacet) {
      const int F = mem.tag.entity;
      for (int K : cx.face(d - 1, F).patch) {
        const BaryPoly want =
            Polynomial::constant(d + 1, 1) - Rational(d) * cx.barycentric(K, cx.opposite_vertex(K, F));
        const BaryPoly got = mem.function.piece_or_zero(K, d + 1);
        if (!bary_equal(got, want))
          rec.fail({{"member", tag_json(mem.tag)}, {"simplex", K}, {"piece", bary_canonical(got).to_string()},
                    {"expected", bary_canonical(want).to_string()}});
      }
    }
  }
  return rec.finish();
}

namespace {

// Tags carrying nonzero entries of the first kernel vector of the members.
Json dependency_witness(const SimplicialComplex& cx, std::span<const BasisMember> members, int degree) {
  const auto fns = functions_of(members);
  const RationalMatrix ns = null_space(coefficient_matrix(cx, fns, degree));
  Json dep = Json::array();
  if (ns.cols() == 0) return dep;
  for (Eigen::Index i = 0; i < ns.rows(); ++i)
    if (ns(i, 0) != 0) dep.push_back({{"member", tag_json(members[i].tag)}, {"coefficient", rational_json(ns(i, 0))}});
  return dep;
}

}  // namespace

Check check_direct_sums(const NamedComplex& m, int k, BoundaryCondition bc, std::span<const BasisMember> members,
                        long expected_dim) {
  const auto& cx = m.cx;
  Json params = mesh_params(m, k);
  params["bc"] = to_string(bc);
  CheckRecorder rec("direct_sums", params);
  const auto fns = functions_of(members);
  const long rank = family_rank(cx, fns, k);
  const long count = static_cast<long>(members.size());
  rec.note("rank", rank);
  rec.note("expected_dim", expected_dim);
  if (rank != count || rank != expected_dim) {
    Json w{{"rank", rank}, {"members", count}, {"expected_dim", expected_dim}};
    if (rank < count) w["dependency"] = dependency_witness(cx, members, k);
    rec.fail(std::move(w));
  }
  if (k == 1) {
    // V_1^nc(T) = {0}: every simplex function vanishes identically.
    for (int K = 0; K < cx.num_simplices(); ++K)
      if (!nc_simplex_fn(cx, K, 1).canonical().pieces().empty())
        rec.fail({{"simplex", K}, {"reason", "simplex function of order 1 is not zero"}});
  }
  return rec.finish();
}

std::vector<BasisMember> overcomplete_stack(const SimplicialComplex& cx, int k) {
  const int d = cx.dim();
  std::vector<BasisMember> out;
  for (auto& mem : build_basis(cx, k, BoundaryCondition::Full).members)
    if (mem.tag.kind == BasisTag::Kind::Vertex || mem.tag.kind == BasisTag::Kind::Face) out.push_back(std::move(mem));
  for (int K = 0; K < cx.num_simplices(); ++K) out.push_back({BasisTag::nc_simplex(d, K), nc_simplex_fn(cx, K, k)});
  return out;
}

Check check_overcomplete_dependency(const NamedComplex& m, int k, std::span<const BasisMember> stack) {
  const auto& cx = m.cx;
  CheckRecorder rec("overcomplete_dependency", mesh_params(m, k));
  if (k % 2 != 0) {
    rec.skip("the simplex functions are independent of the conforming space for odd k");
    return rec.finish();
  }
  const auto fns = functions_of(stack);
  const RationalMatrix ns = null_space(coefficient_matrix(cx, fns, k));
  rec.note("stack_size", static_cast<long>(stack.size()));
  rec.note("kernel_dim", static_cast<long>(ns.cols()));
  if (ns.cols() != 1) {
    rec.fail({{"kernel_dim", static_cast<long>(ns.cols())}, {"expected", 1}});
    return rec.finish();
  }
  // The kernel vector must weight every simplex function equally, i.e. express
  // Psi_k = sum_K B^K as a conforming function.
  std::optional<Rational> weight;
  FeFunction combo;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    const Rational& c = ns(static_cast<Eigen::Index>(i), 0);
    if (c != 0) combo += c * stack[i].function;
    if (stack[i].tag.kind != BasisTag::Kind::NcSimplex) continue;
    if (c == 0 || (weight && *weight != c)) {
      rec.fail({{"member", tag_json(stack[i].tag)}, {"coefficient", rational_json(c)},
                {"reason", "kernel vector does not weight all simplex functions equally"}});
      break;
    }
    weight = c;
  }
  const FeFunction residual = combo.canonical();
  if (!residual.pieces().empty()) {
    const auto& [K, p] = *residual.pieces().begin();
    rec.fail({{"simplex", K}, {"residual", p.to_string()}, {"reason", "kernel combination is not zero"}});
  }
  return rec.finish();
}

Check check_containment(const NamedComplex& m, int k, BoundaryCondition bc, std::span<const BasisMember> members) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  Json params = mesh_params(m, k);
  params["bc"] = to_string(bc);
  CheckRecorder rec("containment", params);
  std::vector<BasisMember> extras;
  for (int z = 0; z < cx.num_vertices(); ++z)
    if (bc == BoundaryCondition::Full || !cx.face(0, z).on_boundary)
      extras.push_back({BasisTag::vertex(z), hat_function(cx, z)});
  for (int l = 1; l <= d; ++l)
    for (const Face& f : cx.faces(l)) {
      if (bc == BoundaryCondition::Zero && f.on_boundary) continue;
      for (const auto& alpha : multi_indices(l, k - l - 1))
        extras.push_back({BasisTag::face(l, f.id, alpha), conforming_face_fn(cx, l, f.id, alpha, k)});
    }
  if (bc == BoundaryCondition::Full) {
    FeFunction one;
    for (int K = 0; K < cx.num_simplices(); ++K) one.set(K, Polynomial::constant(d + 1, 1));
    extras.push_back({BasisTag::vertex(-1), one});
  }
  const auto base = functions_of(members);
  const long base_rank = family_rank(cx, base, k);
  auto all = base;
  for (const auto& e : extras) all.push_back(e.function);
  const long all_rank = family_rank(cx, all, k);
  rec.note("extras", static_cast<long>(extras.size()));
  if (all_rank != base_rank) {
    for (const auto& e : extras) {
      auto one_more = base;
      one_more.push_back(e.function);
      if (family_rank(cx, one_more, k) != base_rank) {
        rec.fail({{"function", e.tag.entity < 0 ? Json("constant 1") : tag_json(e.tag)},
                  {"base_rank", base_rank}, {"reason", "not in the span of the basis"}});
        break;
      }
    }
  }
  return rec.finish();
}

Check check_psi_z_properties(const NamedComplex& m, int k, const PsiFn& psi) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  CheckRecorder rec("psi_z_properties", mesh_params(m, k));
  const Rational r(binomial(k + d - 2, k));
  const Rational peak = Rational(1) + sign_power(k + 1) * r;
  for (int z = 0; z < cx.num_vertices(); ++z) {
    const FeFunction f = psi(z);
    const auto& patch = cx.face(0, z).patch;
    for (int K : f.support())
      if (!std::binary_search(patch.begin(), patch.end(), K))
        rec.fail({{"vertex", z}, {"simplex", K}, {"reason", "support outside the vertex patch"}});
    for (int K = 0; K < cx.num_simplices(); ++K)
      for (int y : cx.simplex(K)) {
        const Rational got = f.value_at_vertex(cx, K, y);
        const Rational want = (y == z) ? peak : Rational(0);
        if (got != want)
          rec.fail({{"vertex", z}, {"simplex", K}, {"at", y}, {"value", rational_json(got)},
                    {"expected", rational_json(want)}});
      }
    for (const Face& F : cx.faces(d - 1)) {
      if (F.on_boundary) {
        // Only vertices inside the domain give functions with zero boundary trace.
        if (cx.face(0, z).on_boundary) continue;
        const BaryPoly t = boundary_trace(cx, f, F.id);
        if (!t.is_zero())
          rec.fail({{"vertex", z}, {"facet", F.id}, {"boundary_trace", t.to_string()}});
      } else {
        const BaryPoly j = jump(cx, f, F.id);
        if (!j.is_zero()) rec.fail({{"vertex", z}, {"facet", F.id}, {"jump", j.to_string()}});
      }
    }
  }
  return rec.finish();
}

Check check_psi_big_continuity(const NamedComplex& m, int k, const FeFunction& psi_big_fn) {
  const auto& cx = m.cx;
  const int d = cx.dim();
  CheckRecorder rec("psi_big_continuity", mesh_params(m, k));
  if (k % 2 != 0) {
    rec.skip("defined for even k");
    return rec.finish();
  }
  for (const Face& F : cx.faces(d - 1)) {
    if (F.on_boundary) continue;
    const BaryPoly j = jump(cx, psi_big_fn, F.id);
    if (!j.is_zero()) rec.fail({{"facet", F.id}, {"jump", j.to_string()}});
  }
  const Rational want = (Rational(d - 1) + Rational(binomial(k + d - 2, k))) / d;
  for (int K = 0; K < cx.num_simplices(); ++K)
    for (int y : cx.simplex(K)) {
      const Rational got = psi_big_fn.value_at_vertex(cx, K, y);
      if (got != want)
        rec.fail({{"simplex", K}, {"vertex", y}, {"value", rational_json(got)}, {"expected", rational_json(want)}});
    }
  return rec.finish();
}

}  // namespace crfe
