#include "crfe/dofs.hpp"

#include "crfe/errors.hpp"
#include "crfe/gram.hpp"
#include "crfe/integration.hpp"
#include "crfe/jacobi.hpp"
#include "crfe/orthopoly.hpp"

#include <algorithm>

namespace crfe {

namespace {

void require_odd(int k) {
  if (k < 1) throw Error("polynomial order k must be at least 1");
  if (k % 2 == 0)
    throw UnsupportedError("degrees of freedom are available for odd k only (k=" + std::to_string(k) + ")");
}

bool subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Piece on K of the conforming face function of (l, tau, alpha), l >= 1.
BaryPoly face_fn_piece(const SimplicialComplex& cx, int K, int l, int tau, const std::vector<int>& alpha) {
  const auto li = cx.local_indices(K, cx.face(l, tau));
  Exponent w{};
  for (int i : li) w[i] = 1;
  return bary_canonical(simplex_orthopoly(alpha).rename(cx.dim() + 1, li).shifted(w));
}

BaryPoly nc_facet_piece(const SimplicialComplex& cx, int K, int F, int k) {
  return *nc_facet_fn(cx, F, k).piece(K);
}

// Average of p * q over an l-simplex via canonical coordinates.
Rational average_product(const BaryPoly& p, const BaryPoly& q) {
  const BaryPoly cp = bary_canonical(p), cq = bary_canonical(q);
  if (cp.is_zero() || cq.is_zero()) return Rational(0);
  const int dim = p.num_vars() - 1;
  const int deg = std::max(cp.degree(), cq.degree());
  const MonomialIndex& index = monomial_index(dim, deg);
  return poly_coordinates(cp, index).dot(average_mass_matrix(dim, deg) * poly_coordinates(cq, index));
}

int side_simplex(const SimplicialComplex& cx, int F, FacetSide side) {
  const auto& patch = cx.face(cx.dim() - 1, F).patch;
  return side == FacetSide::Lower ? patch.front() : patch.back();
}

// Bidual weights for a family of polynomials on an l-simplex (average measure).
std::vector<BaryPoly> dual_weights(const std::vector<BaryPoly>& family, int dim, int degree) {
  const MonomialIndex& index = monomial_index(dim, degree);
  const Eigen::Index n = static_cast<Eigen::Index>(family.size());
  RationalMatrix C(index.size(), n);
  for (Eigen::Index j = 0; j < n; ++j) C.col(j) = poly_coordinates(family[j], index);
  const RationalMatrix G = C.transpose() * average_mass_matrix(dim, degree) * C;
  const RationalMatrix W = C * inverse(G);
  std::vector<BaryPoly> out;
  for (Eigen::Index j = 0; j < n; ++j) out.push_back(poly_from_coordinates(W.col(j), index));
  return out;
}

}  // namespace

Mark::Mark(const SimplicialComplex& cx, MarkPolicy policy) : policy_(policy) {
  const int d = cx.dim();
  targets_.resize(d + 1);
  for (int l = 0; l <= d; ++l)
    for (const auto& f : cx.faces(l)) {
      MarkTarget t;
      if (!f.on_boundary) {
        t.kind = CarrierKind::Simplex;
        t.id = policy == MarkPolicy::SmallestId ? f.patch.front() : f.patch.back();
      } else {
        t.kind = CarrierKind::Facet;
        std::vector<int> candidates;
        for (const auto& F : cx.faces(d - 1))
          if (F.on_boundary && subset(f.vertices, F.vertices)) candidates.push_back(F.id);
        t.id = policy == MarkPolicy::SmallestId ? candidates.front() : candidates.back();
      }
      targets_[l].push_back(t);
    }
}

Rational evaluate(const SimplicialComplex& cx, const WeightedIntegral& t, const FeFunction& u, FacetSide side) {
  if (t.kind == CarrierKind::Simplex) {
    const BaryPoly* p = u.piece(t.carrier);
    if (!p) return Rational(0);
    return t.scale * cx.volume(t.carrier) * average_product(t.weight, *p);
  }
  const int K = side_simplex(cx, t.carrier, side);
  const BaryPoly* p = u.piece(K);
  if (!p) return Rational(0);
  const BaryPoly tr = cx.trace(K, *p, cx.face(cx.dim() - 1, t.carrier));
  return t.scale * average_product(t.weight, tr);
}

Rational evaluate(const SimplicialComplex& cx, const Functional& f, const FeFunction& u, FacetSide side) {
  Rational r(0);
  for (const auto& t : f.terms) r += evaluate(cx, t, u, side);
  return r;
}

RationalMatrix functional_matrix(const SimplicialComplex& cx, std::span<const Functional> dofs,
                                 std::span<const FeFunction> fns) {
  const int d = cx.dim();
  int deg = 0;
  for (const auto& f : dofs)
    for (const auto& t : f.terms) deg = std::max(deg, bary_degree(t.weight));
  std::vector<FeFunction> canon;
  for (const auto& u : fns) {
    canon.push_back(u.canonical());
    deg = std::max(deg, canon.back().degree());
  }
  // Which functions live on each simplex.
  std::vector<std::vector<int>> on_simplex(cx.num_simplices());
  for (std::size_t j = 0; j < canon.size(); ++j)
    for (const auto& [K, p] : canon[j].pieces()) on_simplex[K].push_back(static_cast<int>(j));

  const MonomialIndex& cell_index = monomial_index(d, deg);
  const MonomialIndex& facet_index = monomial_index(d - 1, deg);
  std::map<std::pair<int, int>, RationalVector> cell_coords;
  auto coords_on = [&](int j, int K) -> const RationalVector& {
    auto key = std::make_pair(j, K);
    auto it = cell_coords.find(key);
    if (it == cell_coords.end()) it = cell_coords.emplace(key, poly_coordinates(*canon[j].piece(K), cell_index)).first;
    return it->second;
  };
  std::map<std::tuple<int, int, int>, RationalVector> facet_coords;
  auto trace_coords = [&](int j, int K, int F) -> const RationalVector& {
    auto key = std::make_tuple(j, K, F);
    auto it = facet_coords.find(key);
    if (it == facet_coords.end())
      it = facet_coords
               .emplace(key, poly_coordinates(cx.trace(K, *canon[j].piece(K), cx.face(d - 1, F)), facet_index))
               .first;
    return it->second;
  };

  RationalMatrix R = RationalMatrix::Zero(static_cast<Eigen::Index>(dofs.size()), static_cast<Eigen::Index>(fns.size()));
  for (std::size_t i = 0; i < dofs.size(); ++i)
    for (const auto& t : dofs[i].terms) {
      if (t.kind == CarrierKind::Simplex) {
        const int K = t.carrier;
        if (on_simplex[K].empty()) continue;
        const RationalVector v = average_mass_matrix(d, deg) * poly_coordinates(t.weight, cell_index) *
                                 (t.scale * cx.volume(K));
        for (int j : on_simplex[K]) R(i, j) += v.dot(coords_on(j, K));
      } else {
        const int K = side_simplex(cx, t.carrier, FacetSide::Lower);
        if (on_simplex[K].empty()) continue;
        const RationalVector v = average_mass_matrix(d - 1, deg) * poly_coordinates(t.weight, facet_index) * t.scale;
        for (int j : on_simplex[K]) R(i, j) += v.dot(trace_coords(j, K, t.carrier));
      }
    }
  return R;
}

std::vector<Functional> local_simplex_dofs(const SimplicialComplex& cx, int K, int k) {
  require_odd(k);
  const int d = cx.dim();
  std::vector<BasisTag> tags;
  std::vector<BaryPoly> family;
  for (int l = 1; l <= std::min(k - 1, d); ++l)
    for (int tau : cx.faces_of(K, l))
      for (const auto& a : multi_indices(l, k - l - 1)) {
        tags.push_back(BasisTag::face(l, tau, a));
        family.push_back(face_fn_piece(cx, K, l, tau, a));
      }
  for (int F : cx.faces_of(K, d - 1)) {
    tags.push_back(BasisTag::nc_facet(d, F));
    family.push_back(nc_facet_piece(cx, K, F, k));
  }
  // Weights from the average measure; rescale to the true measure of K.
  auto weights = dual_weights(family, d, k);
  std::vector<Functional> out;
  for (std::size_t i = 0; i < tags.size(); ++i)
    out.push_back({tags[i], {WeightedIntegral{CarrierKind::Simplex, K, weights[i] * (Rational(1) / cx.volume(K)), 1}}});
  return out;
}

RestrictedFamily restricted_family(const SimplicialComplex& cx, int F, int k) {
  require_odd(k);
  const int d = cx.dim();
  const Face& facet = cx.face(d - 1, F);
  if (!facet.on_boundary) throw Error("facet " + std::to_string(F) + " is not on the boundary");
  if (cx.num_simplices() < 2)
    throw UnsupportedError("boundary facet functionals need a mesh with more than one simplex");
  RestrictedFamily fam;
  fam.facet = F;
  fam.simplex = facet.patch.front();
  const int K = fam.simplex;
  for (int l = 1; l <= std::min(k - 1, d - 1); ++l)
    for (int tau : cx.faces_of(K, l)) {
      if (!subset(cx.face(l, tau).vertices, facet.vertices)) continue;
      for (const auto& a : multi_indices(l, k - l - 1)) {
        fam.tags.push_back(BasisTag::face(l, tau, a));
        fam.traces.push_back(bary_canonical(cx.trace(K, face_fn_piece(cx, K, l, tau, a), facet)));
      }
    }
  for (int G : cx.faces_of(K, d - 1)) {
    if (!cx.face(d - 1, G).on_boundary) continue;
    fam.tags.push_back(BasisTag::nc_facet(d, G));
    fam.traces.push_back(bary_canonical(cx.trace(K, nc_facet_piece(cx, K, G, k), facet)));
  }
  return fam;
}

std::vector<Functional> boundary_facet_dofs(const SimplicialComplex& cx, int F, int k) {
  const RestrictedFamily fam = restricted_family(cx, F, k);
  auto weights = dual_weights(fam.traces, cx.dim() - 1, k);
  std::vector<Functional> out;
  for (std::size_t i = 0; i < fam.tags.size(); ++i)
    out.push_back({fam.tags[i], {WeightedIntegral{CarrierKind::Facet, F, weights[i], 1}}});
  return out;
}

DofSet assemble_dofs(const SimplicialComplex& cx, const CrBasis& basis, const Mark& mark, BoundaryDofMode mode) {
  require_odd(basis.k);
  if (basis.bc == BoundaryCondition::Full && cx.num_simplices() < 2)
    throw UnsupportedError("full boundary data needs a mesh with more than one simplex");
  const int d = cx.dim();
  const int k = basis.k;
  DofSet dofs;
  dofs.k = k;
  dofs.bc = basis.bc;
  dofs.mode = mode;
  std::map<int, std::vector<Functional>> local, facet;
  auto pick = [](const std::vector<Functional>& from, const BasisTag& tag) {
    for (const auto& f : from)
      if (f.tag == tag) return f;
    throw Error("internal: no functional for " + tag.to_string());
  };
  for (const auto& m : basis.members) {
    MarkTarget target;
    if (m.tag.kind == BasisTag::Kind::Face)
      target = mark(m.tag.dim, m.tag.entity);
    else if (m.tag.kind == BasisTag::Kind::NcFacet)
      target = mark(d - 1, m.tag.entity);
    else
      throw Error("basis member " + m.tag.to_string() + " has no functional for odd k");
    if (target.kind == CarrierKind::Simplex) {
      auto it = local.find(target.id);
      if (it == local.end()) it = local.emplace(target.id, local_simplex_dofs(cx, target.id, k)).first;
      dofs.functionals.push_back(pick(it->second, m.tag));
    } else {
      auto it = facet.find(target.id);
      if (it == facet.end()) it = facet.emplace(target.id, boundary_facet_dofs(cx, target.id, k)).first;
      dofs.functionals.push_back(pick(it->second, m.tag));
    }
  }
  if (mode == BoundaryDofMode::Corrected && basis.bc == BoundaryCondition::Full) {
    const auto fns = basis.functions();
    const RationalMatrix R = functional_matrix(cx, dofs.functionals, fns);
    std::vector<Functional> corrected = dofs.functionals;
    for (std::size_t i = 0; i < corrected.size(); ++i) {
      if (dofs.functionals[i].primary().kind != CarrierKind::Facet) continue;
      for (std::size_t j = 0; j < corrected.size(); ++j) {
        if (dofs.functionals[j].primary().kind != CarrierKind::Simplex || R(i, j) == 0) continue;
        for (auto t : dofs.functionals[j].terms) {
          t.scale *= -R(i, j);
          corrected[i].terms.push_back(std::move(t));
        }
      }
    }
    dofs.functionals = std::move(corrected);
  }
  return dofs;
}

std::vector<Functional> edge_dofs_2d(const SimplicialComplex& cx, int E, int k) {
  if (cx.dim() != 2) throw UnsupportedError("edge functionals are two-dimensional");
  require_odd(k);
  // x = 2 y_1 - 1 on the edge, y_1 the coordinate of the second vertex.
  const UniPoly x = UniPoly::linear(-1, 2);
  const UniPoly top = jacobi_poly(k - 1, 1, 1).compose(x);
  std::vector<Functional> out;
  for (int nu = 0; nu <= k - 1; ++nu) {
    const UniPoly g = (jacobi_poly(nu, 1, 1).compose(x) - top * edge_coupling(nu, k)) * edge_gamma(nu);
    out.push_back({BasisTag::edge_mode(E, nu), {WeightedIntegral{CarrierKind::Facet, E, Polynomial::univariate(g, 2, 1), 2}}});
  }
  return out;
}

std::vector<BasisMember> edge_basis_2d(const SimplicialComplex& cx, int E, int k) {
  if (cx.dim() != 2) throw UnsupportedError("edge functions are two-dimensional");
  require_odd(k);
  const Face& edge = cx.face(1, E);
  std::vector<BasisMember> out;
  for (int mu = 0; mu <= k - 2; ++mu) {
    const UniPoly P = jacobi_poly(mu, 1, 1).compose(UniPoly::linear(-1, 2));
    FeFunction f;
    for (int K : edge.patch) {
      const auto li = cx.local_indices(K, edge);
      const BaryPoly bubble = Polynomial::variable(3, li[0]) * Polynomial::variable(3, li[1]) * Rational(4);
      f.set(K, bary_canonical(bubble * Polynomial::univariate(P, 3, li[1])));
    }
    out.push_back({BasisTag::edge_mode(E, mu), f});
  }
  out.push_back({BasisTag::edge_mode(E, k - 1), nc_facet_fn(cx, E, k)});
  return out;
}

std::vector<Functional> facet_mean_dofs_k1(const SimplicialComplex& cx, BoundaryCondition bc) {
  const int d = cx.dim();
  std::vector<Functional> out;
  for (const auto& F : cx.faces(d - 1)) {
    if (bc == BoundaryCondition::Zero && F.on_boundary) continue;
    out.push_back({BasisTag::nc_facet(d, F.id), {WeightedIntegral{CarrierKind::Facet, F.id, Polynomial::constant(d, 1), 1}}});
  }
  return out;
}

}  // namespace crfe
