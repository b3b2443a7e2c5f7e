#include "crfe/gram.hpp"

#include "crfe/errors.hpp"

#include <map>

namespace crfe {

RationalVector poly_coordinates(const BaryPoly& p, const MonomialIndex& index) {
  RationalVector c = RationalVector::Zero(index.size());
  const BaryPoly canon = bary_canonical(p);
  for (const auto& [e, v] : canon.terms()) {
    const int i = index.find(e);
    if (i < 0) throw Error("polynomial degree exceeds the coordinate space");
    c(i) = v;
  }
  return c;
}

BaryPoly poly_from_coordinates(const RationalVector& c, const MonomialIndex& index) {
  Polynomial p(index.dim() + 1);
  for (int i = 0; i < index.size(); ++i) p.add_term(index[i], c(i));
  return p;
}

RationalMatrix monomial_mass_matrix(const MonomialIndex& index, const Rational& volume) {
  const int n = index.size();
  RationalMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Exponent e;
      for (int v = 0; v < kMaxVars; ++v) e[v] = static_cast<std::uint8_t>(index[i][v] + index[j][v]);
      M(i, j) = M(j, i) = integrate_monomial(e, index.dim() + 1, volume);
    }
  return M;
}

const MonomialIndex& monomial_index(int dim, int degree) {
  static std::map<std::pair<int, int>, MonomialIndex> cache;
  auto key = std::make_pair(dim, degree);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, MonomialIndex(dim, degree)).first;
  return it->second;
}

const RationalMatrix& average_mass_matrix(int dim, int degree) {
  static std::map<std::pair<int, int>, RationalMatrix> cache;
  auto key = std::make_pair(dim, degree);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, monomial_mass_matrix(monomial_index(dim, degree), Rational(1))).first;
  return it->second;
}

RationalMatrix coefficient_matrix(const SimplicialComplex& cx, std::span<const FeFunction> fns, int degree) {
  const MonomialIndex index(cx.dim(), degree);
  const int nloc = index.size();
  RationalMatrix C = RationalMatrix::Zero(static_cast<Eigen::Index>(cx.num_simplices()) * nloc,
                                          static_cast<Eigen::Index>(fns.size()));
  for (std::size_t j = 0; j < fns.size(); ++j)
    for (const auto& [K, p] : fns[j].pieces()) C.block(K * nloc, j, nloc, 1) = poly_coordinates(p, index);
  return C;
}

RationalMatrix gram_matrix(const SimplicialComplex& cx, std::span<const FeFunction> fns, int degree) {
  const MonomialIndex index(cx.dim(), degree);
  const int nloc = index.size();
  const RationalMatrix C = coefficient_matrix(cx, fns, degree);
  const Rational ref_volume = Rational(1, Integer(factorial(cx.dim())));
  const RationalMatrix Mref = monomial_mass_matrix(index, ref_volume);
  const Eigen::Index n = C.cols();
  RationalMatrix G = RationalMatrix::Zero(n, n);
  for (int K = 0; K < cx.num_simplices(); ++K) {
    const RationalMatrix CK = C.block(K * nloc, 0, nloc, n);
    // Skip functions without a piece on K.
    std::vector<Eigen::Index> active;
    for (Eigen::Index j = 0; j < n; ++j)
      for (int i = 0; i < nloc; ++i)
        if (CK(i, j) != 0) {
          active.push_back(j);
          break;
        }
    if (active.empty()) continue;
    const Rational scale = cx.volume(K) / ref_volume;
    RationalMatrix A(nloc, static_cast<Eigen::Index>(active.size()));
    for (std::size_t a = 0; a < active.size(); ++a) A.col(a) = CK.col(active[a]);
    const RationalMatrix MA = Mref * A;
    for (std::size_t a = 0; a < active.size(); ++a)
      for (std::size_t b = a; b < active.size(); ++b) {
        Rational s = A.col(a).dot(MA.col(b)) * scale;
        G(active[a], active[b]) += s;
        if (a != b) G(active[b], active[a]) += s;
      }
  }
  return G;
}

long family_rank(const SimplicialComplex& cx, std::span<const FeFunction> fns, int degree) {
  return static_cast<long>(exact_rank(coefficient_matrix(cx, fns, degree)));
}

}  // namespace crfe
