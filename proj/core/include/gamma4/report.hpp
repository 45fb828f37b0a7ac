#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamma4/numtheory.hpp"

namespace gamma4 {

/// Certificate for one torus knot, covering both chiralities.
struct BoundReport {
  Int p = 1;
  Int q = 0;
  Int sigma_right = 0;
  Int sigma_left = 0;
  Int t0 = 0;
  Int d_minus1_right = 0;
  Int d_minus1_left = 0;
  Int gamma4_lower = 1;
  Int gamma4_upper = 1;
  bool exact = true;
  std::optional<Int> gamma3_upper;  // present iff p*q is even
  std::vector<std::pair<Int, Int>> pinch_trace;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Needs p, q >= 1 (Errc::OutOfRange) and gcd(p, q) = 1 (Errc::NotCoprime).
/// The pair is canonicalized, so p >= q and unknots report as (1, 0).
BoundReport report(Int p, Int q);

/// Reports for T(2k, 2k-1), k = 2..k_max.
std::vector<BoundReport> family_table(Int k_max);

/// Reports for all coprime 2 <= q < p <= max_p, ordered by p then q.
std::vector<BoundReport> scan(Int max_p);

/// Number of rows with gamma4_lower == gamma4_upper.
std::size_t count_exact(const std::vector<BoundReport>& rows) noexcept;

inline constexpr const char* kCsvHeader =
    "p,q,sigma_right,sigma_left,t0,d_minus1_right,d_minus1_left,gamma4_lower,gamma4_upper,"
    "exact,gamma3_upper";

/// Pretty-printed JSON object with the BoundReport field names, in
/// declaration order; an absent gamma3_upper is null. Ends with a newline.
std::string emit_json(const BoundReport& r);
std::string emit_json(const std::vector<BoundReport>& rows);

/// Header line plus one row per report. Omits pinch_trace.
std::string emit_csv(const std::vector<BoundReport>& rows);
std::string csv_row(const BoundReport& r);

}  // namespace gamma4
