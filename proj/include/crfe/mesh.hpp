#pragma once

#include "crfe/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace crfe {

using Point = std::vector<Rational>;

// A conforming simplicial mesh. Simplex vertex lists are stored ascending,
// which fixes the local numbering of every simplex.
struct Mesh {
  int dim = 0;
  std::vector<Point> vertices;
  std::vector<std::vector<int>> simplices;
};

// Text format:
//   dim d
//   vertices n      followed by n lines of d rationals
//   simplices m     followed by m lines of d+1 zero-based vertex indices
// '#' starts a comment. The result is validated.
Mesh parse_mesh(std::string_view text);
Mesh load_mesh_file(const std::string& path);
std::string format_mesh(const Mesh& mesh);

// Throws MeshError for degenerate simplices, non-conforming pairs, unused or
// duplicated vertices and meshes whose simplices are not facet-connected.
// Sorts simplex vertex lists.
void validate_mesh(Mesh& mesh);

// Signed volume times d!, i.e. det(A_1 - A_0, ..., A_d - A_0).
Rational signed_volume_factor(const Mesh& mesh, int simplex);

enum class MeshGenerator { Reference, TwoSimplex, KuhnCube, Grid2d };

MeshGenerator parse_generator(std::string_view name);
std::string generator_name(MeshGenerator g);
// n is used by Grid2d only (n x n squares, 2 n^2 triangles).
Mesh generate_mesh(MeshGenerator g, int dim, int n = 2);

}  // namespace crfe
