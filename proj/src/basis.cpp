#include "crfe/basis.hpp"

#include "crfe/errors.hpp"
#include "crfe/integration.hpp"
#include "crfe/jacobi.hpp"
#include "crfe/orthopoly.hpp"

#include <algorithm>
#include <numeric>

namespace crfe {

namespace {

void require_order(int k) {
  if (k < 1) throw Error("polynomial order k must be at least 1, got " + std::to_string(k));
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

BoundaryCondition parse_boundary_condition(std::string_view s) {
  if (s == "full") return BoundaryCondition::Full;
  if (s == "zero") return BoundaryCondition::Zero;
  throw ParseError("boundary condition must be 'full' or 'zero', got '" + std::string(s) + "'");
}

std::string to_string(BoundaryCondition bc) { return bc == BoundaryCondition::Full ? "full" : "zero"; }

std::string BasisTag::to_string() const {
  switch (kind) {
    case Kind::Vertex: return "V(" + std::to_string(entity) + ")";
    case Kind::Face: return "F" + std::to_string(dim) + "(" + std::to_string(entity) + ";" + join(alpha) + ")";
    case Kind::NcFacet: return "NcF(" + std::to_string(entity) + ")";
    case Kind::NcSimplex: return "NcK(" + std::to_string(entity) + ")";
    case Kind::EdgeMode: return "E(" + std::to_string(entity) + ";" + join(alpha) + ")";
  }
  return "?";
}

std::vector<FeFunction> CrBasis::functions() const {
  std::vector<FeFunction> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.function);
  return out;
}

int CrBasis::index_of(const BasisTag& tag) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i].tag == tag) return static_cast<int>(i);
  return -1;
}

FeFunction hat_function(const SimplicialComplex& cx, int z) {
  if (z < 0 || z >= cx.num_vertices()) throw Error("vertex index out of range");
  FeFunction f;
  for (int K : cx.face(0, z).patch) f.set(K, cx.barycentric(K, z));
  return f;
}

FeFunction face_bubble(const SimplicialComplex& cx, int l, int tau) {
  if (l < 1) throw Error("face bubbles need a face of dimension >= 1");
  const Face& face = cx.face(l, tau);
  FeFunction f;
  for (int K : face.patch) {
    Exponent e{};
    for (int li : cx.local_indices(K, face)) e[li] = 1;
    f.set(K, Polynomial::monomial(cx.dim() + 1, e));
  }
  return f;
}

FeFunction conforming_face_fn(const SimplicialComplex& cx, int l, int tau, std::span<const int> alpha, int k) {
  require_order(k);
  if (l < 0 || l > cx.dim()) throw Error("face dimension out of range");
  if (static_cast<int>(alpha.size()) != l) throw Error("multi-index length must equal the face dimension");
  const int total = std::accumulate(alpha.begin(), alpha.end(), 0);
  if (std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; }) || total > k - l - 1)
    throw Error("multi-index out of range for k=" + std::to_string(k) + " on an " + std::to_string(l) + "-face");
  if (l == 0) return hat_function(cx, cx.face(0, tau).vertices[0]);
  const Face& face = cx.face(l, tau);
  const BaryPoly P = simplex_orthopoly(alpha);
  FeFunction f;
  for (int K : face.patch) {
    const auto li = cx.local_indices(K, face);
    Exponent w{};
    for (int i : li) w[i] = 1;
    f.set(K, P.rename(cx.dim() + 1, li).shifted(w));
  }
  return f;
}

BaryPoly cr_profile(int k, int d, int num_vars, int var) {
  return Polynomial::univariate(jacobi_cr_shifted(k, d), num_vars, var);
}

namespace {

BaryPoly nc_simplex_piece(int d, int k) {
  BaryPoly p = Polynomial::constant(d + 1, -1);
  for (int i = 0; i <= d; ++i) p += cr_profile(k, d, d + 1, i);
  return bary_canonical(p * Rational(1, d));
}

}  // namespace

FeFunction nc_simplex_fn(const SimplicialComplex& cx, int K, int k) {
  require_order(k);
  if (K < 0 || K >= cx.num_simplices()) throw Error("simplex index out of range");
  FeFunction f;
  f.set(K, nc_simplex_piece(cx.dim(), k));
  return f;
}

FeFunction nc_facet_fn(const SimplicialComplex& cx, int F, int k) {
  require_order(k);
  const int d = cx.dim();
  const Face& facet = cx.face(d - 1, F);
  const BaryPoly bk = nc_simplex_piece(d, k);
  FeFunction f;
  for (int K : facet.patch) {
    const int opp = cx.local_index(K, cx.opposite_vertex(K, F));
    f.set(K, bary_canonical(cr_profile(k, d, d + 1, opp) - bk));
  }
  return f;
}

FeFunction psi_z(const SimplicialComplex& cx, int z, int k) {
  const int d = cx.dim();
  FeFunction f;
  for (const auto& F : cx.faces(d - 1))
    if (std::binary_search(F.vertices.begin(), F.vertices.end(), z)) f += nc_facet_fn(cx, F.id, k);
  return f.canonical();
}

FeFunction psi_big(const SimplicialComplex& cx, int k) {
  require_order(k);
  if (k % 2 != 0) throw Error("psi_big is defined for even k");
  FeFunction f;
  for (int K = 0; K < cx.num_simplices(); ++K) f += nc_simplex_fn(cx, K, k);
  return f.canonical();
}

CrBasis build_basis(const SimplicialComplex& cx, int k, BoundaryCondition bc) {
  require_order(k);
  const int d = cx.dim();
  if (d < 2) throw UnsupportedError("the nonconforming spaces need dimension d >= 2");
  const bool even = k % 2 == 0;
  const bool zero = bc == BoundaryCondition::Zero;
  CrBasis basis;
  basis.k = k;
  basis.bc = bc;
  for (int l = even ? 0 : 1; l <= std::min(k - 1, d); ++l) {
    const auto alphas = multi_indices(l, k - l - 1);
    for (const auto& face : cx.faces(l)) {
      if (zero && face.on_boundary) continue;
      for (const auto& a : alphas) {
        BasisTag tag = l == 0 ? BasisTag::vertex(face.vertices[0]) : BasisTag::face(l, face.id, a);
        basis.members.push_back({tag, conforming_face_fn(cx, l, face.id, a, k).canonical()});
      }
    }
  }
  if (even) {
    int last = cx.num_simplices();
    if (!zero) {
      last -= 1;
      basis.dropped_simplex = last;
    }
    for (int K = 0; K < last; ++K) basis.members.push_back({BasisTag::nc_simplex(d, K), nc_simplex_fn(cx, K, k)});
  } else {
    for (const auto& F : cx.faces(d - 1)) {
      if (zero && F.on_boundary) continue;
      basis.members.push_back({BasisTag::nc_facet(d, F.id), nc_facet_fn(cx, F.id, k)});
    }
  }
  return basis;
}

long dim_formula(const SimplicialComplex& cx, int k, BoundaryCondition bc) {
  require_order(k);
  const int d = cx.dim();
  const bool even = k % 2 == 0;
  const bool zero = bc == BoundaryCondition::Zero;
  long n = 0;
  for (int l = even ? 0 : 1; l <= std::min(k - 1, d); ++l) {
    const long faces = zero ? cx.num_interior_faces(l) : cx.num_faces(l);
    n += faces * binomial(k - 1, l).convert_to<long>();
  }
  if (even)
    n += cx.num_simplices() - (zero ? 0 : 1);
  else
    n += zero ? cx.num_interior_faces(d - 1) : cx.num_faces(d - 1);
  return n;
}

BaryPoly jump(const SimplicialComplex& cx, const FeFunction& v, int F) {
  const int d = cx.dim();
  const Face& facet = cx.face(d - 1, F);
  if (facet.patch.size() != 2) throw Error("jump: facet " + std::to_string(F) + " is on the boundary");
  const int K1 = facet.patch.front(), K2 = facet.patch.back();
  BaryPoly j = cx.trace(K1, v.piece_or_zero(K1, d + 1), facet);
  j -= cx.trace(K2, v.piece_or_zero(K2, d + 1), facet);
  return bary_canonical(j);
}

BaryPoly boundary_trace(const SimplicialComplex& cx, const FeFunction& v, int F) {
  const int d = cx.dim();
  const Face& facet = cx.face(d - 1, F);
  if (facet.patch.size() != 1) throw Error("boundary_trace: facet " + std::to_string(F) + " is interior");
  const int K = facet.patch.front();
  return bary_canonical(cx.trace(K, v.piece_or_zero(K, d + 1), facet));
}

}  // namespace crfe
