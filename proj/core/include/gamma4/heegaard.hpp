#pragma once

#include <string>

#include <boost/rational.hpp>

#include "gamma4/numtheory.hpp"
#include "gamma4/torus.hpp"

namespace gamma4 {

/// Exact rational, always reduced with a positive denominator.
using Rational = boost::rational<Int>;

/// "num/den" in lowest terms, or just "num" for integers.
std::string to_string(const Rational& r);

/// Torsion coefficient of T(p,q) read from its Alexander polynomial;
/// 0 for unknots.
Int t0(Int p, Int q);

struct ZeroSurgeryD {
  Rational d_minus_half;
  Rational d_plus_half;
};

/// Correction terms of 0-surgery on the positive torus knot T(p,q), from the
/// positive lens space surgery formula: (-1/2, 1/2 - 2 t0).
ZeroSurgeryD d_zero_surgery(Int p, Int q);

struct PlusMinusOneD {
  Int d_minus1;  // d(S^3_{-1}(K))
  Int d_plus1;   // d(S^3_{+1}(K))

  friend bool operator==(const PlusMinusOneD&, const PlusMinusOneD&) = default;
};

/// Correction terms of -1 and +1 surgery. Right-handed T(p,q) gives
/// (0, -2 t0), the mirror gives (2 t0, 0), the unknot gives (0, 0).
PlusMinusOneD d_pm1(const TorusKnotClass& k);

/// max(0, 2 ceil(sigma / 4)): d(S^3_{-1}) of an alternating knot with
/// signature sigma. Throws Errc::OddSignature for odd sigma.
Int d_minus1_alternating(Int sigma);

/// Bottom correction term 1/4 - g^2/n - n/4 of the circle bundle Y_{g,-n}
/// over a genus g surface. Valid only for n > 2g; Errc::OutOfRange otherwise.
Rational d_b_circle_bundle(Int g, Int n);

/// Floor and ceiling division on exact integers (divisor > 0).
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

}  // namespace gamma4
