#include "gamma4/pinch.hpp"

#include <algorithm>
#include <string>

#include "gamma4/error.hpp"
#include "gamma4/numtheory.hpp"

namespace gamma4 {

PinchStep pinch_step(Int p, Int q, Hand hand) {
  if (p <= q || q < 1) {
    throw Error(Errc::InvalidForm, "pinch_step needs p > q >= 1, got (" + std::to_string(p) +
                                       "," + std::to_string(q) + ")");
  }
  if (gcd(p, q) != 1) {
    throw Error(Errc::NotCoprime,
                "(" + std::to_string(p) + "," + std::to_string(q) + ") is not a coprime pair");
  }
  PinchStep step;
  step.from = {p, q, hand};
  step.t = min_nonneg_rep(-mod_inverse(q, p), p);
  step.h = mod_inverse(p, q);
  const Int r = p - 2 * step.t;
  const Int s = q - 2 * step.h;
  step.raw_to = {r, s};
  const StandardForm next = standard_form(r, s, hand);
  step.to = next.knot;
  step.mirrored = next.mirrored;
  return step;
}

PinchSequence pinch_sequence(const TorusKnotClass& k, PinchMode mode) {
  const Int p0 = k.p;
  const Int q0 = k.q;
  if (mode == PinchMode::Gamma3 && (p0 * q0) % 2 != 0) {
    throw Error(Errc::ParityError,
                "the S^3 continuation needs p*q even, got (" + std::to_string(p0) + "," +
                    std::to_string(q0) + ")");
  }
  PinchSequence seq;
  seq.start = standard_form(p0, q0, k.hand).knot;
  seq.mode = mode;
  seq.terminal = {seq.start.p, seq.start.q};

  TorusKnotClass cur = seq.start;
  const auto done = [&](const TorusKnotClass& c) {
    if (mode == PinchMode::Gamma4) return c.is_unknot();
    return seq.terminal.first == 0 || seq.terminal.second == 0;
  };
  while (!done(cur)) {
    ensure(static_cast<Int>(seq.steps.size()) < seq.start.p,
           "pinch sequence did not terminate within p steps");
    PinchStep step = pinch_step(cur.p, cur.q, cur.hand);
    const auto [r, s] = step.raw_to;
    ensure(((r - cur.p) % 2 == 0) && ((s - cur.q) % 2 == 0), "pinch step broke parity");
    ensure(gcd(r, s) == 1, "pinch step produced a non-primitive class");
    ensure(std::max(abs_int(r), abs_int(s)) < cur.p, "pinch step did not decrease p");
    seq.terminal = step.raw_to;
    cur = step.to;
    seq.steps.push_back(step);
  }
  return seq;
}

Int gamma4_upper(const TorusKnotClass& k) {
  if (k.is_unknot()) return 1;
  return static_cast<Int>(pinch_sequence(k, PinchMode::Gamma4).length());
}

Int gamma3_upper(const TorusKnotClass& k) {
  const Int len = static_cast<Int>(pinch_sequence(k, PinchMode::Gamma3).length());
  return std::max<Int>(1, len);
}

std::string to_string(const PinchStep& step) {
  return "(" + std::to_string(step.from.p) + "," + std::to_string(step.from.q) +
         ") --t=" + std::to_string(step.t) + ",h=" + std::to_string(step.h) + "--> (" +
         std::to_string(step.raw_to.first) + "," + std::to_string(step.raw_to.second) + ")";
}

}  // namespace gamma4
