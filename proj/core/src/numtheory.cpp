#include "gamma4/numtheory.hpp"

#include <string>

#include "gamma4/error.hpp"

namespace gamma4 {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::ZeroClass: return "ZeroClass";
    case Errc::InvalidForm: return "InvalidForm";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::OddSignature: return "OddSignature";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::ParityError: return "ParityError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

GcdResult ext_gcd(Int a, Int b) noexcept {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
    tmp = old_t - quot * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Int gcd(Int a, Int b) noexcept {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    const Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Int min_nonneg_rep(Int x, Int m) {
  if (m < 1) throw Error(Errc::OutOfRange, "modulus must be >= 1, got " + std::to_string(m));
  const Int r = x % m;
  return r < 0 ? r + m : r;
}

Int mod_inverse(Int a, Int m) {
  if (m < 1) throw Error(Errc::OutOfRange, "modulus must be >= 1, got " + std::to_string(m));
  if (m == 1) return 0;
  const auto [g, x, y] = ext_gcd(min_nonneg_rep(a, m), m);
  (void)y;
  if (g != 1) {
    throw Error(Errc::NotInvertible,
                std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return min_nonneg_rep(x, m);
}

}  // namespace gamma4
