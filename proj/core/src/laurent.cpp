#include "gamma4/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gamma4/error.hpp"

namespace gamma4 {

namespace {

using Term = LaurentPoly::Term;

bool exponent_less(const Term& t, Int e) { return t.first < e; }

// Merges two sorted term lists, scaling the second by `sign`.
LaurentPoly::Terms merge(const LaurentPoly::Terms& a, const LaurentPoly::Terms& b, Int sign) {
  LaurentPoly::Terms out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign * j->second);
      ++j;
    } else {
      const Int c = i->second + sign * j->second;
      if (c != 0) out.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(Int constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Int, Int>> terms) {
  std::map<Int, Int> acc;
  for (const auto& [exponent, coeff] : terms) acc[exponent] += coeff;
  for (const auto& [e, c] : acc)
    if (c != 0) terms_.emplace_back(e, c);
}

LaurentPoly LaurentPoly::from_sorted(Terms terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::monomial(Int coeff, Int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

Int LaurentPoly::coeff(Int exponent) const noexcept {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent, exponent_less);
  return (it != terms_.end() && it->first == exponent) ? it->second : 0;
}

Int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(Errc::OutOfRange, "zero polynomial has no degree");
  return terms_.front().first;
}

Int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(Errc::OutOfRange, "zero polynomial has no degree");
  return terms_.back().first;
}

void LaurentPoly::add_term(Int exponent, Int coeff) {
  if (coeff == 0) return;
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent, exponent_less);
  if (it == terms_.end() || it->first != exponent) {
    terms_.insert(it, {exponent, coeff});
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::shifted(Int by) const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) e += by;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  terms_ = merge(terms_, rhs.terms_, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }

LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  std::map<Int, Int> acc;
  for (const auto& [e1, c1] : lhs.terms())
    for (const auto& [e2, c2] : rhs.terms()) acc[e1 + e2] += c1 * c2;
  LaurentPoly out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.add_term(e, c);
  return out;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(Errc::OutOfRange, "division by the zero polynomial");
  if (num.is_zero()) return {};

  // Shift both to ordinary polynomials and divide from the top degree. Only
  // the running remainder lives in a map; for the sparse divisors used here
  // it stays about as small as the dividend. Quotient terms come out in
  // decreasing order.
  const Int num_shift = num.min_exponent();
  const Int den_shift = den.min_exponent();
  std::map<Int, Int> rem;
  for (const auto& [e, c] : num.terms()) rem.emplace_hint(rem.end(), e - num_shift, c);
  const LaurentPoly divisor = den.shifted(-den_shift);
  const Int den_deg = divisor.max_exponent();
  const Int den_lead = divisor.terms().back().second;

  const auto accumulate = [&rem](Int e, Int c) {
    auto [it, inserted] = rem.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) rem.erase(it);
  };

  LaurentPoly::Terms quot;
  while (!rem.empty() && rem.rbegin()->first >= den_deg) {
    const auto [top, lead] = *rem.rbegin();
    if (lead % den_lead != 0) {
      throw Error(Errc::InexactDivision, "non-integral quotient term in exact_div");
    }
    const Int factor = lead / den_lead;
    const Int step = top - den_deg;
    quot.emplace_back(step + num_shift - den_shift, factor);
    for (const auto& [e, c] : divisor.terms()) accumulate(e + step, -factor * c);
  }
  if (!rem.empty()) {
    LaurentPoly left;
    for (const auto& [e, c] : rem) left.terms_.emplace_back(e + num_shift, c);
    throw Error(Errc::InexactDivision, "nonzero remainder " + to_string(left) + " in exact_div");
  }
  std::reverse(quot.begin(), quot.end());
  return LaurentPoly::from_sorted(std::move(quot));
}

SymmetricCoeffs symmetric_coeffs(const LaurentPoly& p) {
  SymmetricCoeffs out;
  if (p.is_zero()) return out;
  for (const auto& [e, c] : p.terms()) {
    if (p.coeff(-e) != c) {
      throw Error(Errc::NotSymmetric, "polynomial " + to_string(p) + " is not symmetric");
    }
  }
  out.a0 = p.coeff(0);
  const Int degree = p.max_exponent();
  if (degree > 0) {
    out.a.assign(static_cast<std::size_t>(degree), 0);
    for (const auto& [e, c] : p.terms())
      if (e > 0) out.a[static_cast<std::size_t>(e - 1)] = c;
  }
  return out;
}

LaurentPoly from_symmetric(const SymmetricCoeffs& c) {
  LaurentPoly::Terms terms;
  for (std::size_t i = c.a.size(); i-- > 0;)
    if (c.a[i] != 0) terms.emplace_back(-static_cast<Int>(i) - 1, c.a[i]);
  if (c.a0 != 0) terms.emplace_back(0, c.a0);
  for (std::size_t i = 0; i < c.a.size(); ++i)
    if (c.a[i] != 0) terms.emplace_back(static_cast<Int>(i) + 1, c.a[i]);
  LaurentPoly p;
  for (const auto& [e, v] : terms) p.add_term(e, v);
  return p;
}

Int torsion_coefficient(const LaurentPoly& p) {
  const auto& t = p.terms();
  Int t0 = 0;
  for (std::size_t i = 0, j = t.size(); i < t.size(); ++i) {
    --j;
    if (t[i].first != -t[j].first || t[i].second != t[j].second) {
      throw Error(Errc::NotSymmetric, "polynomial " + to_string(p) + " is not symmetric");
    }
    if (t[i].first > 0) t0 += t[i].first * t[i].second;
  }
  return t0;
}

Int eval_at_one(const LaurentPoly& p) noexcept {
  Int sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto [e, c] = *it;
    const Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'T';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace gamma4
