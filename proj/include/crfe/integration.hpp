#pragma once

#include "crfe/polynomial.hpp"
#include "crfe/rational.hpp"

#include <map>
#include <vector>

namespace crfe {

// Exact integral of a barycentric polynomial over an l-simplex of the given volume:
//   int lambda^beta = l! |tau| beta! / (|beta| + l)!
Rational integrate_simplex(const BaryPoly& p, const Rational& volume, int dim);

// Integral of the single monomial lambda^beta.
Rational integrate_monomial(const Exponent& beta, int num_vars, const Rational& volume);

// Multi-indices in N^n with |alpha| <= max_total, lexicographic.
std::vector<std::vector<int>> multi_indices(int n, int max_total);

// Index of the canonical monomials lambda_1^b1 ... lambda_l^bl (lambda_0 eliminated)
// of degree <= k on an l-simplex.
class MonomialIndex {
 public:
  MonomialIndex(int dim, int degree);
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(list_.size()); }
  const Exponent& operator[](int i) const { return list_[i]; }
  // -1 if e is not a canonical monomial of degree <= k.
  int find(const Exponent& e) const;

 private:
  int dim_, degree_;
  std::vector<Exponent> list_;
  std::map<Exponent, int> index_;
};

}  // namespace crfe
