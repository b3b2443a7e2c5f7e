#include "crfe/interpolation.hpp"

#include "crfe/errors.hpp"
#include "crfe/gram.hpp"
#include "crfe/integration.hpp"
#include "crfe/orthopoly.hpp"
#include "crfe/quadrature.hpp"

#include <cmath>

namespace crfe {

Interpolant interpolate(const SimplicialComplex& cx, const DofSet& dofs, const CrBasis& basis, const FeFunction& u) {
  if (dofs.functionals.size() != basis.members.size())
    throw Error("functionals and basis have different sizes");
  const std::vector<FeFunction> input{u};
  const RationalMatrix c = functional_matrix(cx, dofs.functionals, input);
  Interpolant out;
  for (std::size_t i = 0; i < basis.members.size(); ++i) {
    out.coefficients.push_back(c(i, 0));
    if (c(i, 0) != 0) out.function += c(i, 0) * basis.members[i].function;
  }
  out.function = out.function.canonical();
  return out;
}

Interpolant edge_interpolate(const SimplicialComplex& cx, const FeFunction& u, int k) {
  Interpolant out;
  for (const auto& E : cx.faces(1)) {
    if (E.on_boundary) continue;
    const auto dofs = edge_dofs_2d(cx, E.id, k);
    const auto basis = edge_basis_2d(cx, E.id, k);
    for (std::size_t i = 0; i < dofs.size(); ++i) {
      const Rational c = evaluate(cx, dofs[i], u);
      out.coefficients.push_back(c);
      if (c != 0) out.function += c * basis[i].function;
    }
  }
  out.function = out.function.canonical();
  return out;
}

FeFunction approx_op_2d(const SimplicialComplex& cx, const FeFunction& u, int k) {
  if (cx.dim() != 2) throw UnsupportedError("the edge-based operator is two-dimensional");
  FeFunction result = edge_interpolate(cx, u, k).function;
  if (k < 3) return result;
  const FeFunction rest = (u - result).canonical();
  const auto alphas = multi_indices(2, k - 3);
  for (int K = 0; K < cx.num_simplices(); ++K) {
    const BaryPoly* r = rest.piece(K);
    if (!r) continue;
    std::vector<BaryPoly> bubbles;
    for (const auto& a : alphas) bubbles.push_back(bary_canonical(simplex_bubble_weight(2) * simplex_orthopoly(a)));
    const int deg = std::max(k, bary_degree(*r));
    const MonomialIndex& index = monomial_index(2, deg);
    const Eigen::Index n = static_cast<Eigen::Index>(bubbles.size());
    RationalMatrix B(index.size(), n);
    for (Eigen::Index j = 0; j < n; ++j) B.col(j) = poly_coordinates(bubbles[j], index);
    const RationalMatrix& M = average_mass_matrix(2, deg);
    const RationalMatrix G = B.transpose() * M * B;
    const RationalMatrix rhs = B.transpose() * M * poly_coordinates(*r, index);
    const RationalMatrix c = gram_solve(G, rhs);
    Polynomial proj(3);
    for (Eigen::Index j = 0; j < n; ++j) proj += bubbles[j] * c(j, 0);
    result.add(K, proj);
  }
  return result.canonical();
}

namespace {

std::vector<double> to_point(const SimplicialComplex& cx, const std::vector<int>& vertices, std::span<const double> bary) {
  const int d = cx.dim();
  std::vector<double> x(d, 0.0);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int c = 0; c < d; ++c) x[c] += bary[i] * to_double(cx.mesh().vertices[vertices[i]][c]);
  return x;
}

}  // namespace

FloatInterpolant interpolate_callable(const SimplicialComplex& cx, const DofSet& dofs, const Callable& u,
                                      int points_per_direction) {
  const int d = cx.dim();
  const SimplexRule cell = simplex_rule(d, points_per_direction);
  const SimplexRule facet = simplex_rule(d - 1, points_per_direction);
  FloatInterpolant out;
  out.points_per_direction = points_per_direction;
  for (const auto& f : dofs.functionals) {
    double value = 0;
    for (const auto& t : f.terms) {
      const bool on_cell = t.kind == CarrierKind::Simplex;
      const SimplexRule& rule = on_cell ? cell : facet;
      const auto& verts = on_cell ? cx.simplex(t.carrier) : cx.face(d - 1, t.carrier).vertices;
      double s = 0;
      for (std::size_t q = 0; q < rule.weights.size(); ++q) {
        const auto x = to_point(cx, verts, rule.bary[q]);
        s += rule.weights[q] * t.weight.evaluate(std::span<const double>(rule.bary[q])) * u(x);
      }
      if (on_cell) s *= to_double(cx.volume(t.carrier));
      value += to_double(t.scale) * s;
    }
    out.coefficients.push_back(value);
  }
  return out;
}

double evaluate_expansion(const SimplicialComplex& cx, const CrBasis& basis, std::span<const double> coefficients,
                          int K, std::span<const double> bary) {
  (void)cx;
  double v = 0;
  for (std::size_t i = 0; i < basis.members.size(); ++i) {
    const BaryPoly* p = basis.members[i].function.piece(K);
    if (p && coefficients[i] != 0) v += coefficients[i] * p->evaluate(bary);
  }
  return v;
}

double sampled_max_error(const SimplicialComplex& cx, const CrBasis& basis, std::span<const double> coefficients,
                         const Callable& u, int lattice) {
  const int d = cx.dim();
  double worst = 0;
  for (const auto& a : multi_indices(d, lattice)) {
    std::vector<double> bary(d + 1);
    int s = 0;
    for (int i = 0; i < d; ++i) {
      bary[i + 1] = double(a[i]) / lattice;
      s += a[i];
    }
    bary[0] = double(lattice - s) / lattice;
    for (int K = 0; K < cx.num_simplices(); ++K) {
      const auto x = to_point(cx, cx.simplex(K), bary);
      worst = std::max(worst, std::abs(u(x) - evaluate_expansion(cx, basis, coefficients, K, bary)));
    }
  }
  return worst;
}

}  // namespace crfe
