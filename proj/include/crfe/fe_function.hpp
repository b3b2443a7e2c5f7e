#pragma once

#include "crfe/complex.hpp"
#include "crfe/polynomial.hpp"

#include <map>
#include <vector>

namespace crfe {

// Piecewise polynomial: one barycentric polynomial per simplex of support.
// Simplices without a piece carry the zero polynomial.
class FeFunction {
 public:
  FeFunction() = default;

  void set(int K, BaryPoly p);
  void add(int K, const BaryPoly& p);
  const BaryPoly* piece(int K) const;
  BaryPoly piece_or_zero(int K, int num_vars) const;
  const std::map<int, BaryPoly>& pieces() const { return pieces_; }
  // Simplices carrying a polynomial that is nonzero as a function.
  std::vector<int> support() const;

  FeFunction& operator+=(const FeFunction& o);
  FeFunction& operator-=(const FeFunction& o);
  FeFunction& operator*=(const Rational& s);
  friend FeFunction operator+(FeFunction a, const FeFunction& b) { return a += b; }
  friend FeFunction operator-(FeFunction a, const FeFunction& b) { return a -= b; }
  friend FeFunction operator*(const Rational& s, FeFunction a) { return a *= s; }

  // Equality as functions (piecewise, modulo sum(lambda) = 1).
  bool equals(const FeFunction& o) const;
  // Canonical per-simplex form with zero pieces dropped.
  FeFunction canonical() const;
  int degree() const;

  Rational value_at_vertex(const SimplicialComplex& cx, int K, int vertex) const;
  // Exact value at a point of simplex K.
  Rational value_at(const SimplicialComplex& cx, int K, std::span<const Rational> x) const;

 private:
  std::map<int, BaryPoly> pieces_;
};

}  // namespace crfe
