#include "crfe/complex.hpp"

#include "crfe/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace crfe {

Point RefMap::apply(std::span<const Rational> xhat) const {
  Point x = origin;
  for (Eigen::Index j = 0; j < jacobian.cols(); ++j)
    for (Eigen::Index i = 0; i < jacobian.rows(); ++i) x[i] += jacobian(i, j) * xhat[j];
  return x;
}

SimplicialComplex::SimplicialComplex(Mesh mesh) : mesh_(std::move(mesh)) {
  validate_mesh(mesh_);
  const int d = dim();
  for (int K = 0; K < num_simplices(); ++K)
    volumes_.push_back(abs(signed_volume_factor(mesh_, K)) / Rational(factorial(d)));

  std::vector<std::set<std::vector<int>>> sets(d + 1);
  std::map<std::vector<int>, std::vector<int>> patches;
  for (int K = 0; K < num_simplices(); ++K) {
    const auto& s = simplex(K);
    for (unsigned mask = 1; mask < (1u << (d + 1)); ++mask) {
      std::vector<int> f;
      for (int i = 0; i <= d; ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      sets[f.size() - 1].insert(f);
      patches[f].push_back(K);
    }
  }
  faces_.resize(d + 1);
  for (int l = 0; l <= d; ++l) {
    for (const auto& v : sets[l]) {
      Face f;
      f.dim = l;
      f.id = static_cast<int>(faces_[l].size());
      f.vertices = v;
      f.patch = patches[v];
      face_index_[v] = f.id;
      faces_[l].push_back(std::move(f));
    }
  }
  // Boundary: facets with one neighbour, and every face inside such a facet.
  if (d >= 1) {
    for (auto& F : faces_[d - 1]) {
      if (F.patch.size() != 1) continue;
      F.on_boundary = true;
      const int n = static_cast<int>(F.vertices.size());
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) sub.push_back(F.vertices[i]);
        faces_[sub.size() - 1][face_index_.at(sub)].on_boundary = true;
      }
    }
  }
  for (int K = 0; K < num_simplices(); ++K) {
    RationalMatrix J(d, d);
    const auto& s = simplex(K);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) J(i, j) = mesh_.vertices[s[j + 1]][i] - mesh_.vertices[s[0]][i];
    inv_jacobians_.push_back(inverse(J));
  }
}

int SimplicialComplex::num_interior_faces(int l) const {
  int n = 0;
  for (const auto& f : faces(l))
    if (!f.on_boundary) ++n;
  return n;
}

int SimplicialComplex::find_face(const std::vector<int>& vertices) const {
  auto it = face_index_.find(vertices);
  return it == face_index_.end() ? -1 : it->second;
}

int SimplicialComplex::local_index(int K, int vertex) const {
  const auto& s = simplex(K);
  auto it = std::lower_bound(s.begin(), s.end(), vertex);
  return (it != s.end() && *it == vertex) ? static_cast<int>(it - s.begin()) : -1;
}

bool SimplicialComplex::contains(int K, const Face& f) const {
  return std::includes(simplex(K).begin(), simplex(K).end(), f.vertices.begin(), f.vertices.end());
}

std::vector<int> SimplicialComplex::local_indices(int K, const Face& f) const {
  std::vector<int> out;
  for (int v : f.vertices) {
    int li = local_index(K, v);
    if (li < 0) throw Error("face is not contained in simplex " + std::to_string(K));
    out.push_back(li);
  }
  return out;
}

std::vector<int> SimplicialComplex::faces_of(int K, int l) const {
  const auto& s = simplex(K);
  const int d = dim();
  std::vector<int> out;
  for (unsigned mask = 1; mask < (1u << (d + 1)); ++mask) {
    if (std::popcount(mask) != l + 1) continue;
    std::vector<int> f;
    for (int i = 0; i <= d; ++i)
      if (mask & (1u << i)) f.push_back(s[i]);
    out.push_back(face_index_.at(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int SimplicialComplex::opposite_vertex(int K, int F) const {
  const auto& fv = face(dim() - 1, F).vertices;
  for (int v : simplex(K))
    if (!std::binary_search(fv.begin(), fv.end(), v)) return v;
  throw Error("facet is not a facet of simplex " + std::to_string(K));
}

RefMap SimplicialComplex::ref_map(int K, int l, int face_id) const {
  const Face& f = face(l, face_id);
  if (!contains(K, f)) throw Error("ref_map: face not contained in simplex");
  RefMap r;
  r.simplex = K;
  r.vertex_order = f.vertices;
  for (int v : simplex(K))
    if (!std::binary_search(f.vertices.begin(), f.vertices.end(), v)) r.vertex_order.push_back(v);
  const int d = dim();
  r.origin = mesh_.vertices[r.vertex_order[0]];
  r.jacobian.resize(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) r.jacobian(i, j) = mesh_.vertices[r.vertex_order[j + 1]][i] - r.origin[i];
  return r;
}

BaryPoly SimplicialComplex::barycentric(int K, int vertex) const {
  const int li = local_index(K, vertex);
  if (li < 0) throw Error("vertex " + std::to_string(vertex) + " is not in simplex " + std::to_string(K));
  return Polynomial::variable(dim() + 1, li);
}

std::vector<Rational> SimplicialComplex::to_barycentric(int K, std::span<const Rational> x) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d) throw DimensionMismatch("point has wrong dimension");
  const auto& A0 = mesh_.vertices[simplex(K)[0]];
  std::vector<Rational> lam(d + 1);
  Rational rest(1);
  for (int i = 0; i < d; ++i) {
    Rational s(0);
    for (int j = 0; j < d; ++j) s += inv_jacobians_[K](i, j) * (x[j] - A0[j]);
    lam[i + 1] = s;
    rest -= s;
  }
  lam[0] = rest;
  return lam;
}

BaryPoly SimplicialComplex::trace(int K, const BaryPoly& p, const Face& f) const {
  if (p.num_vars() != dim() + 1) throw DimensionMismatch("trace: polynomial is not on a simplex of this mesh");
  const auto kept = local_indices(K, f);
  return p.restrict_to(kept);
}

Polynomial SimplicialComplex::to_cartesian(int K, const BaryPoly& p) const {
  const int d = dim();
  const auto& A0 = mesh_.vertices[simplex(K)[0]];
  std::vector<Polynomial> lam(d + 1, Polynomial(d));
  Polynomial rest = Polynomial::constant(d, 1);
  for (int i = 0; i < d; ++i) {
    Polynomial li(d);
    Rational shift(0);
    for (int j = 0; j < d; ++j) {
      li += Polynomial::variable(d, j) * inv_jacobians_[K](i, j);
      shift += inv_jacobians_[K](i, j) * A0[j];
    }
    li -= Polynomial::constant(d, shift);
    rest -= li;
    lam[i + 1] = li;
  }
  lam[0] = rest;
  return p.substitute(lam);
}

BaryPoly SimplicialComplex::from_cartesian(int K, const Polynomial& cart) const {
  const int d = dim();
  if (cart.num_vars() != d) throw DimensionMismatch("Cartesian polynomial has wrong variable count");
  // x = sum_i lambda_i A_i is homogeneous of degree one in lambda.
  std::vector<Polynomial> xs(d, Polynomial(d + 1));
  const auto& s = simplex(K);
  for (int c = 0; c < d; ++c)
    for (int i = 0; i <= d; ++i) xs[c] += Polynomial::variable(d + 1, i) * mesh_.vertices[s[i]][c];
  return cart.substitute(xs);
}

}  // namespace crfe
