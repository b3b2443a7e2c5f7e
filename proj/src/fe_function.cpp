#include "crfe/fe_function.hpp"

#include "crfe/errors.hpp"

namespace crfe {

void FeFunction::set(int K, BaryPoly p) { pieces_.insert_or_assign(K, std::move(p)); }

void FeFunction::add(int K, const BaryPoly& p) {
  auto it = pieces_.find(K);
  if (it == pieces_.end())
    pieces_.emplace(K, p);
  else
    it->second += p;
}

const BaryPoly* FeFunction::piece(int K) const {
  auto it = pieces_.find(K);
  return it == pieces_.end() ? nullptr : &it->second;
}

BaryPoly FeFunction::piece_or_zero(int K, int num_vars) const {
  const BaryPoly* p = piece(K);
  return p ? *p : Polynomial(num_vars);
}

std::vector<int> FeFunction::support() const {
  std::vector<int> out;
  for (const auto& [K, p] : pieces_)
    if (!bary_canonical(p).is_zero()) out.push_back(K);
  return out;
}

FeFunction& FeFunction::operator+=(const FeFunction& o) {
  for (const auto& [K, p] : o.pieces_) add(K, p);
  return *this;
}

FeFunction& FeFunction::operator-=(const FeFunction& o) {
  for (const auto& [K, p] : o.pieces_) add(K, -p);
  return *this;
}

FeFunction& FeFunction::operator*=(const Rational& s) {
  for (auto& [K, p] : pieces_) p *= s;
  return *this;
}

bool FeFunction::equals(const FeFunction& o) const {
  FeFunction diff = *this - o;
  for (const auto& [K, p] : diff.pieces_)
    if (!bary_canonical(p).is_zero()) return false;
  return true;
}

FeFunction FeFunction::canonical() const {
  FeFunction out;
  for (const auto& [K, p] : pieces_) {
    BaryPoly c = bary_canonical(p);
    if (!c.is_zero()) out.set(K, std::move(c));
  }
  return out;
}

int FeFunction::degree() const {
  int d = -1;
  for (const auto& [K, p] : pieces_) d = std::max(d, bary_degree(p));
  return d;
}

Rational FeFunction::value_at_vertex(const SimplicialComplex& cx, int K, int vertex) const {
  const int li = cx.local_index(K, vertex);
  if (li < 0) throw Error("vertex not in simplex");
  const BaryPoly* p = piece(K);
  return p ? bary_vertex_value(*p, li) : Rational(0);
}

Rational FeFunction::value_at(const SimplicialComplex& cx, int K, std::span<const Rational> x) const {
  const BaryPoly* p = piece(K);
  if (!p) return Rational(0);
  auto lam = cx.to_barycentric(K, x);
  return p->evaluate(lam);
}

}  // namespace crfe
