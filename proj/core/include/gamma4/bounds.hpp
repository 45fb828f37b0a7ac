#pragma once

#include <vector>

#include "gamma4/heegaard.hpp"
#include "gamma4/torus.hpp"

namespace gamma4 {

/// Lower bounds on the framed genus gamma4(K, n), where n = e(F)/2.
struct FramedRow {
  Int n = 0;
  Int sig_bound = 0;  // |sigma(K) - n|
  Int d_bound = 0;    // n - 2 d(S^3_{-1}(K)), may be negative
  Int combined = 0;   // max(sig_bound, d_bound, 0)

  friend bool operator==(const FramedRow&, const FramedRow&) = default;
};

struct FramedProfile {
  TorusKnotClass knot;
  std::vector<FramedRow> rows;  // contiguous, increasing n
};

FramedRow framed_row(const TorusKnotClass& k, Int n);

/// max(|sigma(K) - n|, n - 2 d(S^3_{-1}(K)), 0).
Int framed_lower(const TorusKnotClass& k, Int n);

/// Rows for every n in [n_lo, n_hi]. Throws Errc::OutOfRange if n_lo > n_hi.
FramedProfile framed_profile(const TorusKnotClass& k, Int n_lo, Int n_hi);

/// Signature / d-invariant lower bound on the nonorientable four-ball genus:
/// the larger of sigma/2 - d(S^3_{-1}) over K and its mirror, floored at 1.
Int gamma4_lower(const TorusKnotClass& k);

/// Brute-force counterpart of gamma4_lower: for each chirality, minimize
/// framed_lower over the window, floor at 1, and take the max.
Int minmax_over_framings(const TorusKnotClass& k, Int n_lo, Int n_hi);

/// Replay of the closed-surface argument that yields
/// e(F)/2 <= 2 d(S^3_{-1}(K)) + b1(F), for a closed genus g surface in the
/// class (1, 2, m) with self-intersection n = 4m - 1.
struct AuditRecord {
  Int g = 0;
  Int m = 0;
  Int n = 0;
  Int d = 0;
  Int a = 0;     // Spin^c parameter, PD(c1) = (sign, 2, 2a)
  Int sign = 0;  // the +-1 choice that makes a integral
  Int q_c1 = 0;  // Q(c1, c1) on the closed-up manifold
  Rational c1sq_direct;   // Q(c1) - <c1,[S]>^2 / n
  Rational c1sq_reduced;  // -2 + 2 sign - 4 g^2 / n
  Int pairing = 0;        // <c1, [S]>, equals n - 2g
  Rational d_b;           // bottom correction term of Y_{g,-n}
  Rational prop_lhs;      // c1^2 + b2^-
  Rational prop_rhs;      // 4 d_b + 4 d + 2 b1(Y) + 2 b1(S^3_{-1})
  Rational eq2_lhs;       // e(F)/2 = (n - 1)/2
  Rational eq2_rhs;       // 2 d + b1(F) = 2d + 2g + 1
  bool consistent = false;  // eq2_lhs <= eq2_rhs
};

/// Throws Errc::OutOfRange unless g >= 0, m >= 1, d >= 0 and 4m - 1 > 2g.
/// Any failed internal identity throws Errc::Internal.
AuditRecord obstruction_audit(Int g, Int m, Int d);

}  // namespace gamma4
