#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crfe/basis.hpp"
#include "crfe/gram.hpp"
#include "crfe/integration.hpp"

using namespace crfe;

namespace {

// Constraint matrix of the space: rows are the moments of jumps (and of
// boundary traces for bc=zero) against barycentric monomials of degree k-1 on
// every facet, columns are the canonical monomials of degree k on every
// simplex, ordered like coefficient_matrix.
RationalMatrix moment_constraints(const SimplicialComplex& cx, int k, BoundaryCondition bc) {
  const int d = cx.dim();
  const MonomialIndex idx(d, k);
  const auto tests = multi_indices(d, k - 1);
  std::vector<std::vector<Rational>> rows;
  for (const Face& F : cx.faces(d - 1)) {
    if (F.on_boundary && bc == BoundaryCondition::Full) continue;
    for (const auto& beta : tests) {
      Exponent e{};
      for (int i = 0; i < d; ++i) e[i] = static_cast<std::uint8_t>(beta[i]);
      const Polynomial q = Polynomial::monomial(d, e);
      std::vector<Rational> row(static_cast<std::size_t>(cx.num_simplices() * idx.size()));
      for (std::size_t side = 0; side < F.patch.size(); ++side) {
        const int K = F.patch[side];
        for (int j = 0; j < idx.size(); ++j) {
          const BaryPoly tr = cx.trace(K, Polynomial::monomial(d + 1, idx[j]), F);
          const Rational v = integrate_simplex(tr * q, 1, d - 1);
          row[static_cast<std::size_t>(K * idx.size() + j)] = side == 0 ? v : -v;
        }
      }
      rows.push_back(std::move(row));
    }
  }
  RationalMatrix a(static_cast<Eigen::Index>(rows.size()), cx.num_simplices() * idx.size());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = rows[i][j];
  return a;
}

bool all_zero(const RationalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

struct Case {
  MeshGenerator g;
  int dim;
  int n;
  int k_max;
};

}  // namespace

TEST_CASE("basis lies in the space cut out by the moment conditions") {
  const Case cases[] = {{MeshGenerator::Reference, 2, 2, 4},  {MeshGenerator::TwoSimplex, 2, 2, 4},
                        {MeshGenerator::Grid2d, 2, 2, 3},     {MeshGenerator::TwoSimplex, 3, 2, 3},
                        {MeshGenerator::KuhnCube, 3, 2, 2}};
  for (const auto& c : cases) {
    const SimplicialComplex cx(generate_mesh(c.g, c.dim, c.n));
    for (int k = 1; k <= c.k_max; ++k)
      for (auto bc : {BoundaryCondition::Full, BoundaryCondition::Zero}) {
        CAPTURE(generator_name(c.g));
        CAPTURE(c.dim);
        CAPTURE(k);
        CAPTURE(to_string(bc));
        const RationalMatrix a = moment_constraints(cx, k, bc);
        const long max_dim = a.cols() - exact_rank(a);
        const CrBasis basis = build_basis(cx, k, bc);
        const auto fns = basis.functions();
        const RationalMatrix coeffs = coefficient_matrix(cx, fns, k);
        const long rank = exact_rank(coeffs);
        CHECK(static_cast<long>(fns.size()) == rank);
        CHECK(dim_formula(cx, k, bc) == rank);
        CHECK(all_zero(a * coeffs));
        // The maximal space is reached in two dimensions and for k = 1; in
        // three dimensions it is strictly larger once k >= 2.
        if (c.dim == 2 || k == 1) CHECK(rank == max_dim);
        else CHECK(rank < max_dim);
        CHECK(basis.dropped_simplex.has_value() == (k % 2 == 0 && bc == BoundaryCondition::Full));
      }
  }
}

TEST_CASE("two tetrahedra, k = 2") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::TwoSimplex, 3));
  // 20 piecewise coefficients, 3 moment conditions on the shared facet.
  const RationalMatrix a = moment_constraints(cx, 2, BoundaryCondition::Full);
  CHECK(a.cols() - exact_rank(a) == 17);
  // 5 vertices, 9 edges and one simplex function.
  CHECK(dim_formula(cx, 2, BoundaryCondition::Full) == 15);
}

TEST_CASE("gram rank equals coefficient rank") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::TwoSimplex, 2));
  for (int k = 1; k <= 3; ++k) {
    auto fns = build_basis(cx, k, BoundaryCondition::Full).functions();
    const long r = family_rank(cx, fns, k);
    CHECK(exact_rank(gram_matrix(cx, fns, k)) == r);
    // A repeated member lowers nothing.
    fns.push_back(fns.front() + fns.back());
    CHECK(family_rank(cx, fns, k) == r);
    CHECK(exact_rank(gram_matrix(cx, fns, k)) == r);
  }
}

TEST_CASE("k = 1 with zero boundary data on two triangles") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::TwoSimplex, 2));
  const CrBasis basis = build_basis(cx, 1, BoundaryCondition::Zero);
  REQUIRE(basis.members.size() == 1);
  CHECK(basis.members[0].tag.kind == BasisTag::Kind::NcFacet);
  const int F = basis.members[0].tag.entity;
  FeFunction want;
  for (int K : cx.face(1, F).patch)
    want.set(K, Polynomial::constant(3, 1) - cx.barycentric(K, cx.opposite_vertex(K, F)) * Rational(2));
  CHECK(basis.members[0].function.equals(want));
}

TEST_CASE("simplex function vertex value for d = 4, k = 2") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::TwoSimplex, 4));
  const FeFunction b = nc_simplex_fn(cx, 0, 2);
  for (int y : cx.simplex(0)) {
    const auto& pt = cx.mesh().vertices[y];
    CHECK(b.value_at(cx, 0, pt) == Rational(9, 4));
  }
}

TEST_CASE("facet function values for k = 1") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::Reference, 3));
  const FeFunction f = nc_facet_fn(cx, 0, 1);
  const int opp = cx.opposite_vertex(0, 0);
  CHECK(f.value_at_vertex(cx, 0, opp) == -2);
  for (int y : cx.face(2, 0).vertices) CHECK(f.value_at_vertex(cx, 0, y) == 1);
}

TEST_CASE("jump and boundary trace preconditions") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::TwoSimplex, 2));
  const FeFunction h = hat_function(cx, 0);
  for (const Face& F : cx.faces(1)) {
    if (F.on_boundary) {
      CHECK_THROWS_AS(jump(cx, h, F.id), Error);
      CHECK_NOTHROW(boundary_trace(cx, h, F.id));
    } else {
      CHECK(jump(cx, h, F.id).is_zero());
      CHECK_THROWS_AS(boundary_trace(cx, h, F.id), Error);
    }
  }
  CHECK_THROWS(psi_big(cx, 3));
  CHECK_THROWS(build_basis(cx, 0, BoundaryCondition::Full));
}

TEST_CASE("conforming functions are continuous") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::KuhnCube, 3));
  const CrBasis basis = build_basis(cx, 3, BoundaryCondition::Full);
  for (const auto& m : basis.members) {
    if (m.tag.kind != BasisTag::Kind::Vertex && m.tag.kind != BasisTag::Kind::Face) continue;
    for (const Face& F : cx.faces(2))
      if (!F.on_boundary) CHECK(jump(cx, m.function, F.id).is_zero());
  }
}

TEST_CASE("basis tags") {
  CHECK(parse_boundary_condition("zero") == BoundaryCondition::Zero);
  CHECK_THROWS(parse_boundary_condition("none"));
  const SimplicialComplex cx(generate_mesh(MeshGenerator::TwoSimplex, 2));
  const CrBasis basis = build_basis(cx, 3, BoundaryCondition::Full);
  for (std::size_t i = 0; i < basis.members.size(); ++i)
    CHECK(basis.index_of(basis.members[i].tag) == static_cast<int>(i));
  CHECK(basis.index_of(BasisTag::nc_simplex(2, 7)) == -1);
}
