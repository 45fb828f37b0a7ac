#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gamma4/numtheory.hpp"

namespace gamma4 {

/// Sparse integer Laurent polynomial in one variable T.
///
/// Terms are (exponent, coefficient) pairs sorted by increasing exponent.
/// Zero coefficients are never stored, so the zero polynomial has no terms
/// and equality is structural.
class LaurentPoly {
public:
  using Term = std::pair<Int, Int>;
  using Terms = std::vector<Term>;

  LaurentPoly() = default;
  explicit LaurentPoly(Int constant);
  /// From (exponent, coefficient) pairs; repeated exponents accumulate.
  LaurentPoly(std::initializer_list<std::pair<Int, Int>> terms);

  static LaurentPoly monomial(Int coeff, Int exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Int coeff(Int exponent) const noexcept;

  /// Requires a nonzero polynomial.
  Int min_exponent() const;
  Int max_exponent() const;

  /// O(term_count) for an exponent in the middle; prefer building from
  /// sorted data or with the arithmetic operators.
  void add_term(Int exponent, Int coeff);
  LaurentPoly shifted(Int by) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  friend LaurentPoly exact_div(const LaurentPoly&, const LaurentPoly&);
  /// Takes terms that are already sorted, merged and nonzero.
  static LaurentPoly from_sorted(Terms terms);

  Terms terms_;
};

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

/// Exact quotient num / den. Both are shifted to ordinary polynomials and
/// divided from the top degree. The leading coefficient of `den` must divide
/// every leading coefficient met along the way (always true when it is
/// +-1). Throws Errc::InexactDivision on a nonzero remainder or a
/// non-integral step, and Errc::OutOfRange for den == 0.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

struct SymmetricCoeffs {
  Int a0 = 0;
  std::vector<Int> a;  // a[j-1] is the coefficient of T^j and T^-j

  friend bool operator==(const SymmetricCoeffs&, const SymmetricCoeffs&) = default;
};

/// Writes p = a0 + sum_j a_j (T^j + T^-j). Throws Errc::NotSymmetric when
/// p(T) != p(1/T).
SymmetricCoeffs symmetric_coeffs(const LaurentPoly& p);

/// Inverse of symmetric_coeffs.
LaurentPoly from_symmetric(const SymmetricCoeffs& c);

/// Torsion coefficient sum_j j * a_j of a symmetric polynomial.
Int torsion_coefficient(const LaurentPoly& p);

/// Value at T = 1, i.e. the coefficient sum.
Int eval_at_one(const LaurentPoly& p) noexcept;

/// Terms by decreasing exponent, e.g. "T^3 - T^2 + 1 - T^-2 + T^-3".
/// Unit coefficients are dropped except on the constant term, and the
/// exponent suffix is dropped for exponents 1 and 0. Zero renders as "0".
std::string to_string(const LaurentPoly& p);

}  // namespace gamma4
