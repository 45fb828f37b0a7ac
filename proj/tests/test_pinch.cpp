#include <doctest.h>

#include "gamma4/bounds.hpp"
#include "gamma4/error.hpp"
#include "gamma4/pinch.hpp"
#include "oracles.hpp"

using namespace gamma4;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

std::vector<std::pair<Int, Int>> trace(const PinchSequence& seq) {
  std::vector<std::pair<Int, Int>> out{{seq.start.p, seq.start.q}};
  for (const auto& s : seq.steps) out.emplace_back(s.to.p, s.to.q);
  return out;
}

}  // namespace

TEST_CASE("single pinch steps") {
  const PinchStep a = pinch_step(4, 3);
  CHECK(a.t == 1);
  CHECK(a.h == 1);
  CHECK(a.raw_to == std::pair<Int, Int>{2, 1});
  CHECK(a.to == TorusKnotClass{2, 1, Hand::Right});

  const PinchStep b = pinch_step(5, 3);
  CHECK(b.t == 3);
  CHECK(b.h == 2);
  CHECK(b.raw_to == std::pair<Int, Int>{-1, -1});
  CHECK(b.to.is_unknot());
  CHECK_FALSE(b.mirrored);

  const PinchStep c = pinch_step(2, 1);
  CHECK(c.t == 1);
  CHECK(c.h == 0);
  CHECK(c.raw_to == std::pair<Int, Int>{0, 1});

  const PinchStep d = pinch_step(7, 4);
  CHECK(d.raw_to == std::pair<Int, Int>{-3, -2});
  CHECK(d.to == TorusKnotClass{3, 2, Hand::Right});

  const PinchStep e = pinch_step(6, 1, Hand::Right);
  CHECK(e.raw_to == std::pair<Int, Int>{-4, 1});
  CHECK(e.mirrored);

  CHECK(to_string(a) == "(4,3) --t=1,h=1--> (2,1)");
  CHECK(code_of([] { pinch_step(3, 4); }) == Errc::InvalidForm);
  CHECK(code_of([] { pinch_step(9, 6); }) == Errc::NotCoprime);
}

TEST_CASE("gamma4 sequences") {
  const PinchSequence s87 = pinch_sequence({8, 7, Hand::Right}, PinchMode::Gamma4);
  CHECK(s87.length() == 3);
  CHECK(trace(s87) == std::vector<std::pair<Int, Int>>{{8, 7}, {6, 5}, {4, 3}, {2, 1}});

  const PinchSequence s53 = pinch_sequence({5, 3, Hand::Right}, PinchMode::Gamma4);
  CHECK(s53.length() == 1);
  CHECK(s53.steps.back().to.is_unknot());

  CHECK(pinch_sequence(TorusKnotClass{}, PinchMode::Gamma4).length() == 0);
}

TEST_CASE("gamma3 sequences") {
  const PinchSequence s43 = pinch_sequence({4, 3, Hand::Right}, PinchMode::Gamma3);
  CHECK(s43.length() == 2);
  CHECK(s43.terminal == std::pair<Int, Int>{0, 1});
  CHECK(trace(s43) == std::vector<std::pair<Int, Int>>{{4, 3}, {2, 1}, {1, 0}});

  CHECK(code_of([] { pinch_sequence({7, 3, Hand::Right}, PinchMode::Gamma3); }) ==
        Errc::ParityError);
}

TEST_CASE("upper bounds") {
  CHECK(gamma4_upper({8, 7, Hand::Right}) == 3);
  CHECK(gamma4_upper({8, 7, Hand::Left}) == 3);
  CHECK(gamma4_upper({7, 4, Hand::Right}) == 2);
  CHECK(gamma4_upper(TorusKnotClass{}) == 1);
  for (Int k = 1; k <= 50; ++k) REQUIRE(gamma4_upper({2 * k + 1, 2, Hand::Right}) == 1);

  CHECK(gamma3_upper({3, 2, Hand::Right}) == 1);
  CHECK(gamma3_upper({4, 3, Hand::Right}) == 2);
  CHECK(gamma3_upper(TorusKnotClass{}) == 1);
  for (Int k = 2; k <= 25; ++k) REQUIRE(gamma3_upper({2 * k, 2 * k - 1, Hand::Right}) == k);
  CHECK(code_of([] { gamma3_upper({7, 3, Hand::Right}); }) == Errc::ParityError);
}

TEST_CASE("every step conserves parity, stays primitive and decreases") {
  for (const auto& [p, q] : oracle::coprime_pairs(120)) {
    for (PinchMode mode : {PinchMode::Gamma4, PinchMode::Gamma3}) {
      if (mode == PinchMode::Gamma3 && (p * q) % 2 != 0) continue;
      const PinchSequence seq = pinch_sequence({p, q, Hand::Right}, mode);
      REQUIRE(static_cast<Int>(seq.length()) < p);
      for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const PinchStep& s = seq.steps[i];
        const auto [r, sv] = s.raw_to;
        REQUIRE(s.t >= 1);
        REQUIRE(s.t < s.from.p);
        REQUIRE(s.h >= 0);
        REQUIRE(s.h < std::max<Int>(1, s.from.q));
        REQUIRE(oracle::gcd(r, sv) == 1);
        REQUIRE((r - s.from.p) % 2 == 0);
        REQUIRE((sv - s.from.q) % 2 == 0);
        REQUIRE(std::max(abs_int(r), abs_int(sv)) < s.from.p);
        if (i + 1 < seq.steps.size()) REQUIRE(seq.steps[i + 1].from == s.to);
      }
    }
  }
}

TEST_CASE("pinch surfaces never beat the lower bound") {
  for (const auto& [p, q] : oracle::coprime_pairs(60)) {
    const TorusKnotClass k{p, q, Hand::Right};
    REQUIRE(gamma4_upper(k) >= gamma4_lower(k));
  }
}
