#pragma once

#include "crfe/errors.hpp"
#include "crfe/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <vector>

namespace crfe {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

namespace detail {

// Fraction-free forward elimination in place. Pivot is the first nonzero
// entry at or below the current row (lowest row index wins). Returns the
// pivot columns; the sign of the row permutation goes to *sign.
template <class Scalar>
std::vector<Eigen::Index> bareiss_eliminate(Matrix<Scalar>& m, Eigen::Index ncols, int* sign) {
  std::vector<Eigen::Index> pivots;
  Scalar prev(1);
  Eigen::Index row = 0;
  if (sign) *sign = 1;
  for (Eigen::Index col = 0; col < ncols && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      m.row(p).swap(m.row(row));
      if (sign) *sign = -*sign;
    }
    const Scalar piv = m(row, col);
    for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
      const Scalar f = m(i, col);
      for (Eigen::Index j = col + 1; j < m.cols(); ++j) m(i, j) = (piv * m(i, j) - f * m(row, j)) / prev;
      m(i, col) = Scalar(0);
    }
    // Rows above the pivot row keep their scale; rows below are scaled by piv/prev.
    prev = piv;
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Scale each row of a rational matrix to integers.
inline Matrix<Integer> clear_denominators(const RationalMatrix& m, std::vector<Integer>* scales = nullptr) {
  Matrix<Integer> out(m.rows(), m.cols());
  if (scales) scales->assign(m.rows(), Integer(1));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
    if (scales) (*scales)[i] = l;
  }
  return out;
}

}  // namespace detail

// Exact rank by fraction-free elimination.
template <class Scalar>
Eigen::Index bareiss_rank(Matrix<Scalar> m) {
  return static_cast<Eigen::Index>(detail::bareiss_eliminate(m, m.cols(), nullptr).size());
}

// Rank by rational elimination that skips zero multipliers. On the sparse
// coefficient matrices used here this keeps fill-in far below Bareiss.
inline Eigen::Index exact_rank(const RationalMatrix& input) {
  RationalMatrix m = input.rows() > input.cols() ? RationalMatrix(input.transpose()) : input;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) * inv;
      for (Eigen::Index j = col + 1; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
      m(i, col) = 0;
    }
    ++row;
  }
  return row;
}

template <class Scalar>
Scalar bareiss_determinant(Matrix<Scalar> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  int sign = 1;
  auto piv = detail::bareiss_eliminate(m, m.cols(), &sign);
  if (static_cast<Eigen::Index>(piv.size()) < m.rows()) return Scalar(0);
  return sign < 0 ? Scalar(-m(m.rows() - 1, m.cols() - 1)) : m(m.rows() - 1, m.cols() - 1);
}

inline Rational exact_determinant(const RationalMatrix& m) {
  std::vector<Integer> scales;
  Integer det = bareiss_determinant(detail::clear_denominators(m, &scales));
  Integer s(1);
  for (const auto& v : scales) s *= v;
  return Rational(det, s);
}

// Solves m x = rhs exactly for square nonsingular m. Throws SingularMatrixError.
inline RationalMatrix gram_solve(const RationalMatrix& m, const RationalMatrix& rhs) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n || rhs.rows() != n) throw DimensionMismatch("gram_solve: incompatible shapes");
  RationalMatrix aug(n, n + rhs.cols());
  aug << m, rhs;
  Matrix<Integer> z = detail::clear_denominators(aug);
  auto piv = detail::bareiss_eliminate(z, n, nullptr);
  if (static_cast<Eigen::Index>(piv.size()) < n) throw SingularMatrixError(static_cast<long>(piv.size()), n);
  RationalMatrix x(n, rhs.cols());
  for (Eigen::Index c = 0; c < rhs.cols(); ++c)
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      Rational s(z(i, n + c));
      for (Eigen::Index j = i + 1; j < n; ++j) s -= Rational(z(i, j)) * x(j, c);
      x(i, c) = s / Rational(z(i, i));
    }
  return x;
}

inline RationalMatrix inverse(const RationalMatrix& m) {
  return gram_solve(m, RationalMatrix::Identity(m.rows(), m.rows()));
}

// Basis of the right null space, one column per free variable, from the
// reduced row echelon form.
inline RationalMatrix null_space(const RationalMatrix& m) {
  RationalMatrix r = m;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Eigen::Index p = row;
    while (p < r.rows() && r(p, col) == 0) ++p;
    if (p == r.rows()) continue;
    r.row(p).swap(r.row(row));
    const Rational inv = Rational(1) / r(row, col);
    for (Eigen::Index j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      const Rational f = r(i, col);
      for (Eigen::Index j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(r.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < r.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  RationalMatrix ns = RationalMatrix::Zero(r.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    ns(free[f], f) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) ns(pivots[p], f) = -r(p, free[f]);
  }
  return ns;
}

}  // namespace crfe
