#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crfe/complex.hpp"
#include "crfe/errors.hpp"
#include "crfe/fe_function.hpp"
#include "crfe/mesh.hpp"

using namespace crfe;

namespace {

int interior_count(const SimplicialComplex& cx, int l) { return cx.num_faces(l) - [&] {
    int b = 0;
    for (const Face& f : cx.faces(l)) b += f.on_boundary;
    return b;
  }(); }

MeshError::Kind mesh_error_kind(const std::string& text) {
  try {
    parse_mesh(text);
  } catch (const MeshError& e) {
    return e.kind();
  }
  FAIL("mesh was accepted");
  return MeshError::Kind::Malformed;
}

}  // namespace

TEST_CASE("generators") {
  const Mesh ref = generate_mesh(MeshGenerator::Reference, 3);
  CHECK(ref.vertices.size() == 4);
  CHECK(ref.simplices.size() == 1);

  const Mesh two = generate_mesh(MeshGenerator::TwoSimplex, 3);
  CHECK(two.vertices.size() == 5);
  CHECK(two.simplices.size() == 2);

  const Mesh kuhn = generate_mesh(MeshGenerator::KuhnCube, 3);
  CHECK(kuhn.vertices.size() == 8);
  CHECK(kuhn.simplices.size() == 6);

  const Mesh grid = generate_mesh(MeshGenerator::Grid2d, 2, 2);
  CHECK(grid.vertices.size() == 9);
  CHECK(grid.simplices.size() == 8);

  CHECK(parse_generator("kuhn-cube") == MeshGenerator::KuhnCube);
  CHECK_THROWS_AS(parse_generator("cube"), ParseError);
}

TEST_CASE("face enumeration and Euler characteristic") {
  const SimplicialComplex kuhn(generate_mesh(MeshGenerator::KuhnCube, 3));
  CHECK(kuhn.num_faces(0) == 8);
  CHECK(kuhn.num_faces(1) == 19);
  CHECK(kuhn.num_faces(2) == 18);
  CHECK(kuhn.num_faces(3) == 6);
  CHECK(interior_count(kuhn, 2) == 6);
  CHECK(interior_count(kuhn, 0) == 0);
  Rational total = 0;
  for (int K = 0; K < kuhn.num_simplices(); ++K) total += kuhn.volume(K);
  CHECK(total == 1);

  const SimplicialComplex grid(generate_mesh(MeshGenerator::Grid2d, 2, 2));
  CHECK(grid.num_faces(1) == 16);
  CHECK(interior_count(grid, 1) == 8);
  CHECK(interior_count(grid, 0) == 1);
  CHECK(grid.num_interior_faces(1) == 8);

  // Faces are listed in lexicographic order of their vertex lists.
  for (int l = 0; l <= 3; ++l)
    for (int i = 1; i < kuhn.num_faces(l); ++i) CHECK(kuhn.face(l, i - 1).vertices < kuhn.face(l, i).vertices);
}

TEST_CASE("mesh text round trip") {
  const Mesh m = generate_mesh(MeshGenerator::KuhnCube, 3);
  const Mesh back = parse_mesh(format_mesh(m));
  CHECK(back.dim == m.dim);
  CHECK(back.vertices == m.vertices);
  CHECK(back.simplices == m.simplices);

  const Mesh p = parse_mesh("# two triangles\ndim 2\nvertices 4\n0 0\n1 0\n0 1\n1/2 3/2\nsimplices 2\n0 1 2\n1 3 2\n");
  CHECK(p.vertices[3][0] == Rational(1, 2));
  CHECK(p.simplices[1] == std::vector<int>{1, 2, 3});
}

TEST_CASE("mesh validation errors") {
  CHECK(mesh_error_kind("dim 2\nvertices 3\n0 0\n1 1\n2 2\nsimplices 1\n0 1 2\n") == MeshError::Kind::Degenerate);
  // Hanging node on the diagonal.
  CHECK(mesh_error_kind("dim 2\nvertices 5\n0 0\n2 0\n0 2\n2 2\n1 1\nsimplices 3\n0 1 2\n1 3 4\n4 3 2\n") ==
        MeshError::Kind::NonConforming);
  // Overlapping triangles.
  CHECK(mesh_error_kind("dim 2\nvertices 4\n0 0\n2 0\n0 2\n1 1/2\nsimplices 2\n0 1 2\n0 1 3\n") ==
        MeshError::Kind::NonConforming);
  // Touching at a single vertex only.
  CHECK(mesh_error_kind("dim 2\nvertices 5\n0 0\n1 0\n0 1\n-1 0\n0 -1\nsimplices 2\n0 1 2\n0 3 4\n") ==
        MeshError::Kind::Disconnected);
  CHECK(mesh_error_kind("dim 2\nvertices 4\n0 0\n1 0\n0 1\n5 5\nsimplices 1\n0 1 2\n") == MeshError::Kind::Malformed);
  CHECK(mesh_error_kind("dim 2\nvertices 3\n0 0\n1 0\n0 1\nsimplices 1\n0 1 7\n") == MeshError::Kind::Malformed);
  CHECK_THROWS_AS(parse_mesh("dim 2\nvertices 3\n0 0\n1 0\nsimplices 1\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_mesh("dim 2\nvertices 3\n0 0\n1 x\n0 1\nsimplices 1\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_mesh("dimension 2\n"), ParseError);
}

TEST_CASE("barycentric and Cartesian forms agree") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::KuhnCube, 3));
  const Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1), z = Polynomial::variable(3, 2);
  const Polynomial p = x * y * Rational(3) - z.pow(2) + Polynomial::constant(3, Rational(1, 7));
  for (int K = 0; K < cx.num_simplices(); ++K) {
    const BaryPoly b = cx.from_cartesian(K, p);
    CHECK(cx.to_cartesian(K, b) == p);
    // Values at the vertices agree with the Cartesian polynomial.
    for (int v : cx.simplex(K)) {
      const auto& pt = cx.mesh().vertices[v];
      CHECK(bary_vertex_value(b, cx.local_index(K, v)) == p.evaluate(std::span<const Rational>(pt)));
    }
    const Rational mid[] = {Rational(1, 3), Rational(1, 5), Rational(1, 7)};
    const auto lam = cx.to_barycentric(K, mid);
    Rational sum = 0;
    for (const auto& l : lam) sum += l;
    CHECK(sum == 1);
  }
}

TEST_CASE("traces of a continuous function agree on shared facets") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::KuhnCube, 3));
  const Polynomial p = Polynomial::variable(3, 0).pow(2) - Polynomial::variable(3, 2) * Rational(2, 3);
  for (const Face& F : cx.faces(2)) {
    if (F.on_boundary) continue;
    const int K1 = F.patch[0], K2 = F.patch[1];
    CHECK(bary_equal(cx.trace(K1, cx.from_cartesian(K1, p), F), cx.trace(K2, cx.from_cartesian(K2, p), F)));
  }
}

TEST_CASE("reference maps") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::Grid2d, 2, 2));
  for (const Face& E : cx.faces(1))
    for (int K : E.patch) {
      const RefMap r = cx.ref_map(K, 1, E.id);
      CHECK(r.vertex_order[0] == E.vertices[0]);
      CHECK(r.vertex_order[1] == E.vertices[1]);
      const Rational e1[] = {Rational(1), Rational(0)};
      CHECK(r.apply(e1) == cx.mesh().vertices[E.vertices[1]]);
    }
  CHECK_THROWS(cx.ref_map(0, 1, cx.num_faces(1) - 1));
}

TEST_CASE("piecewise functions") {
  const SimplicialComplex cx(generate_mesh(MeshGenerator::TwoSimplex, 2));
  FeFunction f;
  f.set(0, Polynomial::variable(3, 1));
  FeFunction g;
  g.set(0, Polynomial::constant(3, 1) - Polynomial::variable(3, 0) - Polynomial::variable(3, 2));
  CHECK(f.equals(g));
  CHECK((f - g).canonical().pieces().empty());
  CHECK(f.support() == std::vector<int>{0});
  CHECK(f.value_at_vertex(cx, 0, cx.simplex(0)[1]) == 1);
}
