#include "gamma4/torus.hpp"

#include <functional>
#include <string>
#include <vector>

#include "gamma4/error.hpp"

namespace gamma4 {

namespace {

void require_coprime(Int p, Int q) {
  if ((p == 0 && q == 0) || gcd(p, q) != 1) {
    throw Error(Errc::NotCoprime,
                "(" + std::to_string(p) + "," + std::to_string(q) + ") is not a coprime pair");
  }
}

}  // namespace

StandardForm standard_form(Int a, Int b, Hand hand) {
  if (a == 0 && b == 0) throw Error(Errc::ZeroClass, "(0,0) is not a knot class");
  if (gcd(a, b) != 1) {
    throw Error(Errc::NotPrimitive,
                "(" + std::to_string(a) + "," + std::to_string(b) + ") is not primitive");
  }
  const bool mirrored = (a < 0) != (b < 0) && a != 0 && b != 0;
  Int p = abs_int(a);
  Int q = abs_int(b);
  if (q > p) std::swap(p, q);
  return {{p, q, mirrored ? opposite(hand) : hand}, mirrored};
}

TorusKnotClass canonicalize(Int a, Int b, Hand hand) {
  const TorusKnotClass k = standard_form(a, b, hand).knot;
  if (k.is_unknot()) return {};
  return k;
}

TorusKnotClass mirror(const TorusKnotClass& k) noexcept {
  if (k.is_unknot()) return k;
  return {k.p, k.q, opposite(k.hand)};
}

std::string to_string(const TorusKnotClass& k) {
  if (k == TorusKnotClass{}) return "U";
  const Int p = k.hand == Hand::Left ? -k.p : k.p;
  return "T(" + std::to_string(p) + "," + std::to_string(k.q) + ")";
}

std::size_t SignatureMemo::PairHash::operator()(const std::pair<Int, Int>& k) const noexcept {
  const std::size_t h1 = std::hash<Int>{}(k.first);
  const std::size_t h2 = std::hash<Int>{}(k.second);
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Int SignatureMemo::sigma(Int p, Int q) {
  if (p < 0 || q < 0) {
    throw Error(Errc::OutOfRange, "sigma_rec expects nonnegative arguments");
  }
  require_coprime(p, q);

  // sigma(node) = sign * sigma(child) + offset
  struct Frame {
    std::pair<Int, Int> node;
    Int sign;
    Int offset;
  };
  std::vector<Frame> stack;

  Int value = 0;
  for (;;) {
    if (q > p) std::swap(p, q);
    if (q <= 1) {
      value = 0;
      break;
    }
    if (q == 2) {
      value = p - 1;
      break;
    }
    if (const auto it = table_.find({p, q}); it != table_.end()) {
      value = it->second;
      break;
    }
    const Int odd = q % 2;
    if (2 * q < p) {
      // Apply the 2q < p case j times in one go; p = 2q is excluded by
      // coprimality, so the remainder lands in [1, 2q).
      const Int jumps = (p - 1) / (2 * q);
      stack.push_back({{p, q}, 1, jumps * (q * q - odd)});
      p -= 2 * q * jumps;
    } else {
      ensure(q < p, "sigma_rec: p = q with q >= 2 is not coprime");
      stack.push_back({{p, q}, -1, q * q - 2 + odd});
      p = 2 * q - p;
    }
  }

  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    value = it->sign * value + it->offset;
    table_.emplace(it->node, value);
  }
  return value;
}

Int sigma_rec(Int p, Int q) {
  thread_local SignatureMemo memo;
  return memo.sigma(p, q);
}

Int sigma_lattice(Int p, Int q) {
  if (p < 1 || q < 1) throw Error(Errc::OutOfRange, "sigma_lattice expects p, q >= 1");
  require_coprime(p, q);
  const Int pq = p * q;
  Int inside = 0;
  for (Int i = 1; i < p; ++i) {
    for (Int j = 1; j < q; ++j) {
      const Int v = 2 * (i * q + j * p);
      ensure(v != pq && v != 3 * pq, "sigma_lattice: lattice point on the boundary");
      if (pq < v && v < 3 * pq) ++inside;
    }
  }
  return 2 * inside - (p - 1) * (q - 1);
}

Int signature(const TorusKnotClass& k) {
  if (k.is_unknot()) return 0;
  const Int s = sigma_rec(k.p, k.q);
  return k.hand == Hand::Right ? -s : s;
}

LaurentPoly alexander(Int p, Int q) {
  if (p < 0 || q < 0) throw Error(Errc::OutOfRange, "alexander expects nonnegative arguments");
  require_coprime(p, q);
  if (q > p) std::swap(p, q);
  if (q <= 1) return LaurentPoly(1);

  const LaurentPoly one(1);
  const LaurentPoly num = (one - LaurentPoly::monomial(1, 1)) * (one - LaurentPoly::monomial(1, p * q));
  LaurentPoly delta = exact_div(num, one - LaurentPoly::monomial(1, p));
  delta = exact_div(delta, one - LaurentPoly::monomial(1, q));
  return delta.shifted(-seifert_genus(p, q));
}

LaurentPoly alexander_family(Int k) {
  if (k < 2) throw Error(Errc::OutOfRange, "alexander_family expects k >= 2");
  LaurentPoly delta(1);
  for (Int j = 1; j < k; ++j) {
    const Int e = j * (2 * k - 1);
    const Int gap = k - j;
    delta.add_term(e, 1);
    delta.add_term(e - gap, -1);
    delta.add_term(-e, 1);
    delta.add_term(-e + gap, -1);
  }
  return delta;
}

Int seifert_genus(Int p, Int q) {
  require_coprime(p, q);
  if (p == 0 || q == 0) return 0;
  return (abs_int(p) - 1) * (abs_int(q) - 1) / 2;
}

}  // namespace gamma4
