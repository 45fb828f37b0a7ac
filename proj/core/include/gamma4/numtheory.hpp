#pragma once

#include <cstdint>

namespace gamma4 {

using Int = std::int64_t;

struct GcdResult {
  Int g;  // always >= 0
  Int x;
  Int y;
};

/// Extended Euclid: g = gcd(|a|, |b|) and a*x + b*y = g. gcd(0, 0) = 0.
GcdResult ext_gcd(Int a, Int b) noexcept;

Int gcd(Int a, Int b) noexcept;

/// Representative of x modulo m in [0, m). Requires m >= 1.
Int min_nonneg_rep(Int x, Int m);

/// Inverse of a modulo m in [0, m). Every residue is 0 mod 1, so the
/// inverse modulo 1 is 0. Throws Errc::NotInvertible when gcd(a, m) != 1.
Int mod_inverse(Int a, Int m);

inline constexpr Int abs_int(Int x) noexcept { return x < 0 ? -x : x; }

}  // namespace gamma4
