#pragma once

#include "crfe/linalg.hpp"

namespace crfe {

// d x d matrix with -s on the diagonal and 1 elsewhere.
template <class Scalar>
Matrix<Scalar> q_matrix(int d, const Scalar& s) {
  Matrix<Scalar> m = Matrix<Scalar>::Constant(d, d, Scalar(1));
  for (int i = 0; i < d; ++i) m(i, i) = -s;
  return m;
}

// q_matrix with its first row replaced by ones.
template <class Scalar>
Matrix<Scalar> r_matrix(int d, const Scalar& s) {
  Matrix<Scalar> m = q_matrix(d, s);
  m.row(0).setConstant(Scalar(1));
  return m;
}

// Closed forms of the two determinants.
Rational det_q_closed_form(int d, const Rational& s);
Rational det_r_closed_form(int d, const Rational& s);

}  // namespace crfe
