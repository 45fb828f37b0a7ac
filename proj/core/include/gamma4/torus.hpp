#pragma once

#include <string>
#include <unordered_map>
#include <utility>

#include "gamma4/laurent.hpp"
#include "gamma4/numtheory.hpp"

namespace gamma4 {

enum class Hand { Right, Left };

constexpr Hand opposite(Hand h) noexcept { return h == Hand::Right ? Hand::Left : Hand::Right; }

/// A torus knot T(p,q) or its mirror.
///
/// Stored with p >= q >= 0 and gcd(p, q) = 1. Right is the positive torus
/// knot (negative signature) and Left is its mirror T(-p,q). Any class with
/// q <= 1 is an unknot; canonicalize() collapses those to (1, 0, Right),
/// while standard_form() keeps T(n,1) visible for pinch traces.
struct TorusKnotClass {
  Int p = 1;
  Int q = 0;
  Hand hand = Hand::Right;

  bool is_unknot() const noexcept { return q <= 1; }

  friend bool operator==(const TorusKnotClass&, const TorusKnotClass&) = default;
};

struct StandardForm {
  TorusKnotClass knot;
  /// True when exactly one coordinate changed sign, which mirrors the knot.
  bool mirrored = false;
};

/// Normalizes a primitive class (a, b) on the torus by orientation reversal
/// (a,b) ~ (-a,-b), the torus swap (a,b) ~ (b,a), and the mirror
/// T(a,-b) = mirror T(a,b). Unknots are not collapsed.
///
/// Throws Errc::ZeroClass for (0, 0) and Errc::NotPrimitive when
/// gcd(|a|, |b|) != 1.
StandardForm standard_form(Int a, Int b, Hand hand = Hand::Right);

/// standard_form followed by collapsing every unknot to (1, 0, Right).
TorusKnotClass canonicalize(Int a, Int b, Hand hand = Hand::Right);

TorusKnotClass mirror(const TorusKnotClass& k) noexcept;

/// "T(4,3)" for Right, "T(-4,3)" for Left, "U" for the canonical unknot.
std::string to_string(const TorusKnotClass& k);

/// Memo table for the signature recursion. Not thread-safe; sigma_rec()
/// keeps one per thread.
class SignatureMemo {
public:
  /// sigma(p, q) := signature of the left-handed T(p,q), which is >= 0.
  /// Evaluated iteratively with an explicit stack, so call depth is constant.
  Int sigma(Int p, Int q);

  std::size_t size() const noexcept { return table_.size(); }
  void clear() noexcept { table_.clear(); }

private:
  struct PairHash {
    std::size_t operator()(const std::pair<Int, Int>& k) const noexcept;
  };
  std::unordered_map<std::pair<Int, Int>, Int, PairHash> table_;
};

/// Signature of the left-handed T(p,q) by the Murasugi recursion
///   sigma(p,q) = sigma(q,p)                              if q > p
///   sigma(p,q) = sigma(p-2q, q) + q^2 - [q odd]           if 2q < p
///   sigma(p,q) = -sigma(2q-p, q) + q^2 - 2 + [q odd]      if q < p < 2q
/// with sigma(p,2) = p-1 and sigma(p,1) = sigma(p,0) = 0.
/// Requires p, q >= 0, not both zero; throws Errc::NotCoprime otherwise.
Int sigma_rec(Int p, Int q);

/// Independent lattice-count evaluation of the same quantity:
/// 2 * #{(i,j) : 0 < i < p, 0 < j < q, pq < 2(iq + jp) < 3pq} - (p-1)(q-1).
/// Enumerates the whole (p-1)(q-1) grid; meant as an oracle.
Int sigma_lattice(Int p, Int q);

/// Murasugi signature of the knot: 0 for unknots, -sigma for Right and
/// +sigma for Left.
Int signature(const TorusKnotClass& k);

/// Symmetrized Alexander polynomial
///   T^{-(p-1)(q-1)/2} (1-T)(1-T^{pq}) / ((1-T^p)(1-T^q)),
/// computed by exact division. Returns 1 for unknots.
LaurentPoly alexander(Int p, Int q);

/// Closed form for T(2k,2k-1): 1 + sum_{j=1}^{k-1} [T^{j(2k-1)} - T^{j(2k-1)-(k-j)}
/// + T^{-j(2k-1)} - T^{-j(2k-1)+(k-j)}]. Requires k >= 2.
LaurentPoly alexander_family(Int k);

/// (p-1)(q-1)/2.
Int seifert_genus(Int p, Int q);

}  // namespace gamma4
