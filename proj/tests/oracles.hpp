#pragma once

// Brute-force reference computations used only by the tests. None of these
// go through the library code paths they are compared against.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

/// Inverse modulo m by linear search; m = 1 gives 0.
inline Int inverse_by_search(Int a, Int m) {
  if (m == 1) return 0;
  const Int r = ((a % m) + m) % m;
  for (Int x = 0; x < m; ++x)
    if ((r * x) % m == 1) return x;
  return -1;
}

/// Symmetrized Alexander polynomial of T(p,q) from the semigroup
/// S = <p, q>: T^g Delta(T) = (1 - T) sum_{s in S, s <= 2g} T^s mod T^{2g+1}.
/// Returns exponent -> coefficient with zeros dropped.
inline std::map<Int, Int> alexander_semigroup(Int p, Int q) {
  std::map<Int, Int> out;
  if (p <= 1 || q <= 1) {
    out[0] = 1;
    return out;
  }
  const Int g = (p - 1) * (q - 1) / 2;
  std::vector<char> in_s(static_cast<std::size_t>(2 * g + 1), 0);
  for (Int a = 0; a * p <= 2 * g; ++a)
    for (Int b = 0; a * p + b * q <= 2 * g; ++b) in_s[static_cast<std::size_t>(a * p + b * q)] = 1;
  for (Int e = 0; e <= 2 * g; ++e) {
    const Int v = in_s[static_cast<std::size_t>(e)] - (e > 0 ? in_s[static_cast<std::size_t>(e - 1)] : 0);
    if (v != 0) out[e - g] = v;
  }
  return out;
}

inline Int t0_semigroup(Int p, Int q) {
  Int t = 0;
  for (const auto& [e, c] : alexander_semigroup(p, q))
    if (e > 0) t += e * c;
  return t;
}

/// min over n in [lo, hi] of max(|sigma - n|, n - 2d, 0), written as a plain
/// scan without reference to the library's profile rows.
inline Int min_framed(Int sigma, Int d, Int lo, Int hi) {
  Int best = -1;
  for (Int n = lo; n <= hi; ++n) {
    Int v = sigma - n;
    if (v < 0) v = -v;
    if (n - 2 * d > v) v = n - 2 * d;
    if (best < 0 || v < best) best = v;
  }
  return best;
}

/// All coprime pairs 1 <= q < p <= max_p with q >= min_q.
inline std::vector<std::pair<Int, Int>> coprime_pairs(Int max_p, Int min_q = 2) {
  std::vector<std::pair<Int, Int>> out;
  for (Int p = 2; p <= max_p; ++p)
    for (Int q = min_q; q < p; ++q)
      if (gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

/// Seeded generator for property tests; fixed seeds keep runs reproducible.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng_); }

  std::pair<Int, Int> coprime_pair(Int lo, Int hi) {
    for (;;) {
      const Int a = uniform(lo, hi);
      const Int b = uniform(lo, hi);
      if (a != b && gcd(a, b) == 1) return {a, b};
    }
  }

  /// Random sparse (exponent, coefficient) list.
  std::vector<std::pair<Int, Int>> terms(int max_terms, Int exp_range, Int coeff_range) {
    std::vector<std::pair<Int, Int>> out;
    const int n = static_cast<int>(uniform(0, max_terms));
    for (int i = 0; i < n; ++i)
      out.emplace_back(uniform(-exp_range, exp_range), uniform(-coeff_range, coeff_range));
    return out;
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
