#include "crfe/determinants.hpp"

namespace crfe {

namespace {

Rational rpow(const Rational& b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Rational det_q_closed_form(int d, const Rational& s) {
  return sign_power(d + 1) * rpow(1 + s, d - 1) * (Rational(d - 1) - s);
}

Rational det_r_closed_form(int d, const Rational& s) { return rpow(-1 - s, d - 1); }

}  // namespace crfe
