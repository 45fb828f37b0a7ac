#include "gamma4/bounds.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "gamma4/error.hpp"

namespace gamma4 {

namespace {

// sigma/2 - d(S^3_{-1}) for one chirality.
Int gap(const TorusKnotClass& k) {
  const Int sigma = signature(k);
  ensure(sigma % 2 == 0, "signature is odd");
  return ceil_div(sigma, 2) - d_pm1(k).d_minus1;
}

}  // namespace

FramedRow framed_row(const TorusKnotClass& k, Int n) {
  const Int sigma = signature(k);
  const Int dm = d_pm1(k).d_minus1;
  FramedRow row;
  row.n = n;
  row.sig_bound = abs_int(sigma - n);
  row.d_bound = n - 2 * dm;
  row.combined = std::max({row.sig_bound, row.d_bound, Int{0}});
  return row;
}

Int framed_lower(const TorusKnotClass& k, Int n) { return framed_row(k, n).combined; }

FramedProfile framed_profile(const TorusKnotClass& k, Int n_lo, Int n_hi) {
  if (n_lo > n_hi) throw Error(Errc::OutOfRange, "empty framing window");
  FramedProfile profile{k, {}};
  const Int sigma = signature(k);
  const Int dm = d_pm1(k).d_minus1;
  profile.rows.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (Int n = n_lo; n <= n_hi; ++n) {
    FramedRow row{n, abs_int(sigma - n), n - 2 * dm, 0};
    row.combined = std::max({row.sig_bound, row.d_bound, Int{0}});
    profile.rows.push_back(row);
  }
  return profile;
}

Int gamma4_lower(const TorusKnotClass& k) {
  return std::max({Int{1}, gap(k), gap(mirror(k))});
}

Int minmax_over_framings(const TorusKnotClass& k, Int n_lo, Int n_hi) {
  if (n_lo > n_hi) throw Error(Errc::OutOfRange, "empty framing window");
  Int best = 1;
  for (const TorusKnotClass& kk : std::array{k, mirror(k)}) {
    Int lowest = std::numeric_limits<Int>::max();
    for (const FramedRow& row : framed_profile(kk, n_lo, n_hi).rows)
      lowest = std::min(lowest, row.combined);
    best = std::max(best, lowest);
  }
  return best;
}

AuditRecord obstruction_audit(Int g, Int m, Int d) {
  if (g < 0 || m < 1 || d < 0) {
    throw Error(Errc::OutOfRange, "audit expects g >= 0, m >= 1, d >= 0");
  }
  AuditRecord rec;
  rec.g = g;
  rec.m = m;
  rec.d = d;
  rec.n = 4 * m - 1;
  if (rec.n <= 2 * g) {
    throw Error(Errc::OutOfRange, "audit needs n = 4m-1 > 2g, got n=" + std::to_string(rec.n) +
                                      " g=" + std::to_string(g));
  }
  const Int n = rec.n;

  // a = (2(m-g) - 1 +- 1) / 4; the odd numerator 2(m-g)-1 plus one of +-1
  // is divisible by 4 and the other is not.
  const Int base = 2 * (m - g) - 1;
  const bool plus_ok = (base + 1) % 4 == 0;
  const bool minus_ok = (base - 1) % 4 == 0;
  ensure(plus_ok != minus_ok, "audit: exactly one sign must make a integral");
  rec.sign = plus_ok ? 1 : -1;
  rec.a = (base + rec.sign) / 4;

  // Q = (-1) + hyperbolic on H2 = Z^3; PD(c1) = (sign, 2, 2a), [S] = (1, 2, m).
  const std::array<Int, 3> c1{rec.sign, 2, 2 * rec.a};
  const std::array<Int, 3> surface{1, 2, m};
  const auto form = [](const std::array<Int, 3>& x, const std::array<Int, 3>& y) {
    return -x[0] * y[0] + x[1] * y[2] + x[2] * y[1];
  };
  ensure(form(surface, surface) == n, "audit: [S]^2 must equal 4m - 1");
  rec.q_c1 = form(c1, c1);
  rec.pairing = form(c1, surface);
  ensure(rec.pairing == n - 2 * g, "audit: <c1,[S]> must equal n - 2g");
  ensure(rec.q_c1 == -1 + 8 * rec.a, "audit: Q(c1) must equal -1 + 8a");

  rec.c1sq_direct = Rational(rec.q_c1) - Rational(rec.pairing * rec.pairing, n);
  rec.c1sq_reduced = Rational(-2 + 2 * rec.sign) - Rational(4 * g * g, n);
  ensure(rec.c1sq_direct == rec.c1sq_reduced, "audit: the two c1^2 expressions disagree");

  rec.d_b = d_b_circle_bundle(g, n);
  const Int b2_minus = 2;
  const Int b1_bundle = 2 * g;
  rec.prop_lhs = rec.c1sq_direct + Rational(b2_minus);
  rec.prop_rhs = Rational(4) * rec.d_b + Rational(4 * d + 2 * b1_bundle);

  rec.eq2_lhs = Rational(n - 1, 2);
  rec.eq2_rhs = Rational(2 * d + 2 * g + 1);
  rec.consistent = rec.eq2_lhs <= rec.eq2_rhs;

  // With the unfavorable sign (-1) the slack is exactly twice that of
  // e/2 <= 2d + b1; the other sign tightens it by 4.
  const Rational prop_slack = rec.prop_rhs - rec.prop_lhs;
  const Rational eq2_slack = rec.eq2_rhs - rec.eq2_lhs;
  ensure(prop_slack == Rational(2) * eq2_slack - Rational(2 + 2 * rec.sign),
         "audit: inequality does not reduce to e/2 <= 2d + b1");
  return rec;
}

}  // namespace gamma4
