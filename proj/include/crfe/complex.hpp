#pragma once

#include "crfe/linalg.hpp"
#include "crfe/mesh.hpp"
#include "crfe/polynomial.hpp"

#include <map>
#include <span>
#include <vector>

namespace crfe {

// An l-face. Its vertex list is ascending, so vertices[j] is the numbered
// vertex A_j of the face.
struct Face {
  int dim = 0;
  int id = 0;
  std::vector<int> vertices;
  bool on_boundary = false;
  // Simplices containing the face, ascending.
  std::vector<int> patch;
};

// Affine map from the reference d-simplex onto a simplex K, with the vertices
// of a chosen face tau first (ascending) and the rest of K after them.
// Restricted to the first l coordinates it maps onto tau independently of K.
struct RefMap {
  int simplex = 0;
  Point origin;
  RationalMatrix jacobian;  // d x d, column j = A_{j+1} - A_0
  std::vector<int> vertex_order;

  Point apply(std::span<const Rational> xhat) const;
  // The map restricted to the reference l-simplex (first l columns).
  RationalMatrix face_jacobian(int l) const { return jacobian.leftCols(l); }
};

class SimplicialComplex {
 public:
  explicit SimplicialComplex(Mesh mesh);

  const Mesh& mesh() const { return mesh_; }
  int dim() const { return mesh_.dim; }
  int num_vertices() const { return static_cast<int>(mesh_.vertices.size()); }
  int num_simplices() const { return static_cast<int>(mesh_.simplices.size()); }
  const std::vector<int>& simplex(int K) const { return mesh_.simplices.at(K); }
  const Rational& volume(int K) const { return volumes_.at(K); }

  // Faces of dimension l in lexicographic order of their vertex lists.
  const std::vector<Face>& faces(int l) const { return faces_.at(l); }
  const Face& face(int l, int id) const { return faces_.at(l).at(id); }
  int num_faces(int l) const { return static_cast<int>(faces_.at(l).size()); }
  int num_interior_faces(int l) const;
  // Face id of a sorted vertex list, -1 if absent.
  int find_face(const std::vector<int>& vertices) const;

  // Position of a global vertex inside simplex K, -1 if absent.
  int local_index(int K, int vertex) const;
  bool contains(int K, const Face& f) const;
  // Local variable indices of the face vertices in K.
  std::vector<int> local_indices(int K, const Face& f) const;
  // Face ids of dimension l contained in K, ascending.
  std::vector<int> faces_of(int K, int l) const;
  // Vertex of K opposite to facet F.
  int opposite_vertex(int K, int F) const;

  RefMap ref_map(int K, int l, int face_id) const;

  // lambda_{K,z} as a polynomial in the barycentric variables of K.
  BaryPoly barycentric(int K, int vertex) const;
  std::vector<Rational> to_barycentric(int K, std::span<const Rational> x) const;
  // Restriction of a polynomial on K to a face, in the face's own variables.
  BaryPoly trace(int K, const BaryPoly& p, const Face& f) const;
  // Barycentric polynomial on K -> Cartesian polynomial in x_0..x_{d-1}, and back.
  Polynomial to_cartesian(int K, const BaryPoly& p) const;
  BaryPoly from_cartesian(int K, const Polynomial& cart) const;

 private:
  Mesh mesh_;
  std::vector<Rational> volumes_;
  std::vector<std::vector<Face>> faces_;
  std::map<std::vector<int>, int> face_index_;
  std::vector<RationalMatrix> inv_jacobians_;
};

}  // namespace crfe
