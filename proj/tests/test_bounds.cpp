#include <doctest.h>

#include "gamma4/bounds.hpp"
#include "gamma4/error.hpp"
#include "oracles.hpp"

using namespace gamma4;

TEST_CASE("framed lower bound examples") {
  // Mobius band for the right trefoil: e = -6, n = -3, b1 = 1.
  CHECK(framed_lower({3, 2, Hand::Right}, -3) == 1);
  CHECK(framed_lower({4, 3, Hand::Left}, 4) == 2);
  const FramedRow row = framed_row({4, 3, Hand::Left}, 4);
  CHECK(row.sig_bound == 2);
  CHECK(row.d_bound == 0);

  for (const auto& [p, q] : oracle::coprime_pairs(25)) {
    for (Hand h : {Hand::Right, Hand::Left}) {
      const TorusKnotClass k{p, q, h};
      const Int s = signature(k);
      const Int d = d_pm1(k).d_minus1;
      REQUIRE(framed_lower(k, s) == std::max<Int>(0, s - 2 * d));
    }
  }
}

TEST_CASE("profile rows are contiguous and consistent") {
  const TorusKnotClass k{6, 5, Hand::Left};
  const FramedProfile prof = framed_profile(k, -10, 30);
  REQUIRE(prof.rows.size() == 41);
  for (std::size_t i = 0; i < prof.rows.size(); ++i) {
    const FramedRow& r = prof.rows[i];
    CHECK(r.n == -10 + static_cast<Int>(i));
    CHECK(r.sig_bound == abs_int(16 - r.n));
    CHECK(r.combined == std::max({r.sig_bound, r.d_bound, Int{0}}));
    CHECK(r == framed_row(k, r.n));
  }
  CHECK_THROWS_AS(framed_profile(k, 3, 2), Error);
}

TEST_CASE("mirror reflects the profile") {
  for (const auto& [p, q] : oracle::coprime_pairs(20)) {
    const TorusKnotClass k{p, q, Hand::Right};
    const TorusKnotClass m = mirror(k);
    const Int dk = d_pm1(k).d_minus1;
    const Int dm = d_pm1(m).d_minus1;
    for (Int n = -30; n <= 30; ++n) {
      const FramedRow a = framed_row(k, n);
      const FramedRow b = framed_row(m, -n);
      REQUIRE(a.sig_bound == b.sig_bound);
      REQUIRE(a.d_bound + 2 * dk == n);
      REQUIRE(b.d_bound + 2 * dm == -n);
    }
  }
}

TEST_CASE("gamma4 lower bound examples") {
  CHECK(gamma4_lower({4, 3, Hand::Right}) == 1);
  CHECK(gamma4_lower({4, 3, Hand::Left}) == 1);
  CHECK(gamma4_lower({6, 5, Hand::Right}) == 2);
  CHECK(gamma4_lower({8, 7, Hand::Left}) == 3);
  CHECK(gamma4_lower({3, 2, Hand::Right}) == 1);
  CHECK(gamma4_lower(TorusKnotClass{}) == 1);
  for (Int k = 2; k <= 25; ++k) REQUIRE(gamma4_lower({2 * k, 2 * k - 1, Hand::Right}) == k - 1);
}

TEST_CASE("closed form agrees with brute-force min-max") {
  CHECK(minmax_over_framings({6, 5, Hand::Right}, -100, 100) == 2);
  CHECK(minmax_over_framings({3, 2, Hand::Right}, -20, 20) == 1);
  CHECK(minmax_over_framings({6, 5, Hand::Right}, 50, 60) > 2);

  for (const auto& [p, q] : oracle::coprime_pairs(30)) {
    const Int B = (p - 1) * (q - 1);
    for (Hand h : {Hand::Right, Hand::Left}) {
      const TorusKnotClass k{p, q, h};
      const Int s = signature(k);
      const Int mm = minmax_over_framings(k, s - 4 * B, s + 4 * B);
      REQUIRE(mm == gamma4_lower(k));
      // independent scan over the same window
      Int expect = 1;
      for (const TorusKnotClass& kk : {k, mirror(k)})
        expect = std::max(expect, oracle::min_framed(signature(kk), d_pm1(kk).d_minus1,
                                                      s - 4 * B, s + 4 * B));
      REQUIRE(mm == expect);
    }
  }
}

TEST_CASE("audit examples") {
  const AuditRecord a = obstruction_audit(0, 1, 0);
  CHECK(a.n == 3);
  CHECK(a.sign == -1);
  CHECK(a.a == 0);
  CHECK(a.c1sq_direct == Rational(-4));
  CHECK(a.c1sq_reduced == Rational(-4));
  CHECK(a.pairing == 3);
  CHECK(a.eq2_lhs == Rational(1));
  CHECK(a.eq2_rhs == Rational(1));
  CHECK(a.consistent);

  const AuditRecord b = obstruction_audit(1, 2, 0);
  CHECK(b.n == 7);
  CHECK(b.sign == -1);
  CHECK(b.a == 0);
  CHECK(b.c1sq_direct == Rational(-32, 7));
  CHECK(b.pairing == 5);
  CHECK(b.eq2_lhs == Rational(3));
  CHECK(b.eq2_rhs == Rational(3));
  CHECK(b.consistent);

  // n = 4m - 1 must exceed 2g: (1,1) gives 3 > 2 and is admissible, (2,1) is not.
  const AuditRecord c = obstruction_audit(1, 1, 0);
  CHECK(c.sign == 1);
  CHECK(c.pairing == 1);
  CHECK(c.c1sq_direct == Rational(-4, 3));
  try {
    obstruction_audit(2, 1, 0);
    FAIL("expected OutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OutOfRange);
  }
  CHECK_THROWS_AS(obstruction_audit(0, 0, 0), Error);
  CHECK_THROWS_AS(obstruction_audit(0, 1, -1), Error);
}

TEST_CASE("audit identities hold on the whole admissible grid") {
  int seen_plus = 0;
  for (Int g = 0; g <= 20; ++g) {
    for (Int m = 1; m <= 40; ++m) {
      if (4 * m - 1 <= 2 * g) continue;
      for (Int d : {0, 1, 5}) {
        const AuditRecord r = obstruction_audit(g, m, d);
        REQUIRE(r.pairing == r.n - 2 * g);
        REQUIRE(r.c1sq_direct == r.c1sq_reduced);
        REQUIRE(4 * r.a == 2 * (m - g) - 1 + r.sign);
        REQUIRE(r.consistent == (2 * m - 1 <= 2 * d + 2 * g + 1));
        seen_plus += r.sign > 0;
      }
    }
  }
  CHECK(seen_plus > 0);  // both branches of the sign choice occur
}
