#include "gamma4/heegaard.hpp"

#include "gamma4/error.hpp"

namespace gamma4 {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Int floor_div(Int a, Int b) {
  if (b <= 0) throw Error(Errc::OutOfRange, "floor_div expects a positive divisor");
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

Int t0(Int p, Int q) { return torsion_coefficient(alexander(p, q)); }

ZeroSurgeryD d_zero_surgery(Int p, Int q) {
  const Int t = t0(p, q);
  return {Rational(-1, 2), Rational(1, 2) - Rational(2 * t)};
}

PlusMinusOneD d_pm1(const TorusKnotClass& k) {
  if (k.is_unknot()) return {0, 0};
  const ZeroSurgeryD zero = d_zero_surgery(k.p, k.q);
  const Rational minus1 = zero.d_minus_half + Rational(1, 2);
  const Rational plus1 = zero.d_plus_half - Rational(1, 2);
  ensure(minus1.denominator() == 1 && plus1.denominator() == 1,
         "d_pm1: surgery correction term is not an integer");
  const Int dm = minus1.numerator();
  const Int dp = plus1.numerator();
  ensure(dm % 2 == 0 && dp % 2 == 0, "d_pm1: surgery correction term is not even");
  // Mirroring swaps the surgery coefficient and negates the correction term.
  if (k.hand == Hand::Right) return {dm, dp};
  return {-dp, -dm};
}

Int d_minus1_alternating(Int sigma) {
  if (sigma % 2 != 0) {
    throw Error(Errc::OddSignature, "signature " + std::to_string(sigma) + " is odd");
  }
  const Int d = 2 * ceil_div(sigma, 4);
  return d > 0 ? d : 0;
}

Rational d_b_circle_bundle(Int g, Int n) {
  if (g < 0 || n <= 2 * g) {
    throw Error(Errc::OutOfRange, "d_b formula needs n > 2g >= 0, got g=" + std::to_string(g) +
                                      " n=" + std::to_string(n));
  }
  return Rational(1, 4) - Rational(g * g, n) - Rational(n, 4);
}

}  // namespace gamma4
