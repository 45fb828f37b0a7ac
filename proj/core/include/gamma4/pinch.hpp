#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gamma4/torus.hpp"

namespace gamma4 {

/// One band move joining two adjacent parallel strands of T(p,q) on the
/// torus. The result is again a torus curve, of class
/// (p - 2t, q - 2h) with t = -q^{-1} mod p and h = p^{-1} mod q.
struct PinchStep {
  TorusKnotClass from;
  Int t = 0;
  Int h = 0;
  std::pair<Int, Int> raw_to;  // (r, s) before normalization
  TorusKnotClass to;           // standard form of raw_to; T(n,1) is kept
  bool mirrored = false;       // exactly one of r, s was negative
};

enum class PinchMode {
  Gamma4,  // stop at the first unknot, then cap with a disk in B^4
  Gamma3,  // continue T(n,1) -> T(n-2,1) -> ... until a coordinate is 0
};

struct PinchSequence {
  TorusKnotClass start;
  std::vector<PinchStep> steps;
  PinchMode mode = PinchMode::Gamma4;
  std::pair<Int, Int> terminal;  // raw class after the last step

  std::size_t length() const noexcept { return steps.size(); }
};

/// Requires p > q >= 1 and gcd(p, q) = 1. Throws Errc::InvalidForm for
/// p <= q and Errc::NotCoprime for non-coprime input.
PinchStep pinch_step(Int p, Int q, Hand hand = Hand::Right);

/// Iterates pinch_step from `k` (taken in standard form). Gamma3 mode needs
/// p*q even (Errc::ParityError otherwise). Every step is checked for parity
/// conservation, primitivity and strict decrease; a run longer than p steps
/// is reported as Errc::Internal.
PinchSequence pinch_sequence(const TorusKnotClass& k, PinchMode mode);

/// b1 of the pinch surface F_{p,q} in B^4; 1 for the unknot (Mobius band).
Int gamma4_upper(const TorusKnotClass& k);

/// b1 of the pinch surface pushed into S^3; needs p*q even. At least 1.
Int gamma3_upper(const TorusKnotClass& k);

/// "(4,3) --t=1,h=1--> (2,1)"
std::string to_string(const PinchStep& step);

}  // namespace gamma4
