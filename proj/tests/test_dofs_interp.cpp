#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "crfe/dofs.hpp"
#include "crfe/interpolation.hpp"

using namespace crfe;

namespace {

bool is_identity(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

RationalMatrix dof_matrix(const SimplicialComplex& cx, const DofSet& dofs, const CrBasis& basis) {
  const auto fns = basis.functions();
  return functional_matrix(cx, dofs.functionals, fns);
}

}  // namespace

TEST_CASE("general functionals are bidual to the basis") {
  const std::pair<MeshGenerator, int> meshes[] = {
      {MeshGenerator::TwoSimplex, 2}, {MeshGenerator::Grid2d, 2}, {MeshGenerator::TwoSimplex, 3}};
  for (const auto& [g, dim] : meshes) {
    const SimplicialComplex cx(generate_mesh(g, dim));
    for (int k : {1, 3})
      for (auto bc : {BoundaryCondition::Full, BoundaryCondition::Zero})
        for (auto policy : {MarkPolicy::SmallestId, MarkPolicy::LargestId}) {
          CAPTURE(generator_name(g));
          CAPTURE(k);
          CAPTURE(to_string(bc));
          const CrBasis basis = build_basis(cx, k, bc);
          const DofSet dofs = assemble_dofs(cx, basis, Mark(cx, policy));
          CHECK(is_identity(dof_matrix(cx, dofs, basis)));
        }
  }
}

TEST_CASE("raw boundary functionals give a unit triangular matrix") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::TwoSimplex, 3));
  const CrBasis basis = build_basis(cx, 3, BoundaryCondition::Full);
  const DofSet raw = assemble_dofs(cx, basis, Mark(cx), BoundaryDofMode::Raw);
  const RationalMatrix m = dof_matrix(cx, raw, basis);
  for (Eigen::Index i = 0; i < m.rows(); ++i) CHECK(m(i, i) == 1);
  CHECK(exact_determinant(m) == 1);
}

TEST_CASE("unsupported configurations") {
  const SimplicialComplex two(generate_mesh(MeshGenerator::TwoSimplex, 2));
  for (int k : {2, 4})
    CHECK_THROWS_AS(assemble_dofs(two, build_basis(two, k, BoundaryCondition::Full), Mark(two)), UnsupportedError);
  const SimplicialComplex ref(generate_mesh(MeshGenerator::Reference, 2));
  CHECK_THROWS_AS(assemble_dofs(ref, build_basis(ref, 1, BoundaryCondition::Full), Mark(ref)), UnsupportedError);
  CHECK_THROWS_AS(edge_dofs_2d(two, 0, 2), UnsupportedError);
}

TEST_CASE("edge functionals in two dimensions") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::Grid2d, 2, 2));
  for (int k : {1, 3, 5}) {
    std::vector<Functional> dofs;
    std::vector<FeFunction> fns;
    for (const Face& E : cx.faces(1)) {
      if (E.on_boundary) continue;
      for (auto& f : edge_dofs_2d(cx, E.id, k)) dofs.push_back(std::move(f));
      for (auto& b : edge_basis_2d(cx, E.id, k)) fns.push_back(std::move(b.function));
    }
    CAPTURE(k);
    CHECK(dofs.size() == static_cast<std::size_t>(8 * k));
    CHECK(is_identity(functional_matrix(cx, dofs, fns)));
  }
}

TEST_CASE("facet means for k = 1") {
  for (int d = 2; d <= 4; ++d) {
    const SimplicialComplex cx(generate_mesh(MeshGenerator::TwoSimplex, d));
    const auto dofs = facet_mean_dofs_k1(cx, BoundaryCondition::Full);
    CHECK(dofs.size() == static_cast<std::size_t>(cx.num_faces(d - 1)));
    std::vector<FeFunction> fns;
    for (const auto& f : dofs) fns.push_back(nc_facet_fn(cx, f.tag.entity, 1));
    CHECK(is_identity(functional_matrix(cx, dofs, fns)));
  }
}

TEST_CASE("interpolation reproduces the space") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::Grid2d, 2, 2));
  const CrBasis basis = build_basis(cx, 3, BoundaryCondition::Full);
  const DofSet dofs = assemble_dofs(cx, basis, Mark(cx));
  for (std::size_t i = 0; i < basis.members.size(); i += 7) {
    const Interpolant ip = interpolate(cx, dofs, basis, basis.members[i].function);
    for (std::size_t j = 0; j < ip.coefficients.size(); ++j) CHECK(ip.coefficients[j] == (i == j ? 1 : 0));
  }
  FeFunction one;
  for (int K = 0; K < cx.num_simplices(); ++K) one.set(K, Polynomial::constant(3, 1));
  CHECK(interpolate(cx, dofs, basis, one).function.equals(one));
  // A conforming quadratic lies in the space.
  FeFunction q;
  for (int K = 0; K < cx.num_simplices(); ++K) {
    const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    q.set(K, cx.from_cartesian(K, x * y - y * y * Rational(1, 3)));
  }
  CHECK(interpolate(cx, dofs, basis, q).function.equals(q));
}

TEST_CASE("edge interpolation and the two-dimensional operator") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::Grid2d, 2, 2));
  for (int k : {1, 3}) {
    const CrBasis basis = build_basis(cx, k, BoundaryCondition::Zero);
    for (const auto& m : basis.members) CHECK(approx_op_2d(cx, m.function, k).equals(m.function));
  }
  const SimplicialComplex d3(generate_mesh(MeshGenerator::TwoSimplex, 3));
  CHECK_THROWS_AS(approx_op_2d(d3, FeFunction(), 1), UnsupportedError);
}

TEST_CASE("floating-point interpolation of callables") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::Grid2d, 2, 2));
  const CrBasis basis = build_basis(cx, 3, BoundaryCondition::Full);
  const DofSet dofs = assemble_dofs(cx, basis, Mark(cx));

  const Callable poly = [](std::span<const double> x) { return x[0] * x[1] - x[1] * x[1] / 3; };
  const FloatInterpolant a = interpolate_callable(cx, dofs, poly, 8);
  CHECK(sampled_max_error(cx, basis, a.coefficients, poly) < 1e-10);

  const double pi = std::acos(-1.0);
  const Callable demo = [pi](std::span<const double> x) { return std::sin(pi * x[0]) * std::sin(pi * x[1]); };
  const FloatInterpolant b = interpolate_callable(cx, dofs, demo, 8);
  CHECK(b.points_per_direction == 8);
  for (double c : b.coefficients) CHECK(std::isfinite(c));
  const double err = sampled_max_error(cx, basis, b.coefficients, demo);
  CHECK(std::isfinite(err));
  CHECK(err < 0.1);
}
