#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gamma4 {

enum class Errc {
  NotInvertible,
  NotCoprime,
  NotPrimitive,
  ZeroClass,
  InvalidForm,
  InexactDivision,
  NotSymmetric,
  OddSignature,
  OutOfRange,
  ParityError,
  // A computed value violated an invariant that the theory guarantees.
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

/// True for errors caused by the caller's input rather than by a broken
/// invariant inside the library.
constexpr bool is_input_error(Errc code) noexcept {
  return code != Errc::Internal && code != Errc::InexactDivision &&
         code != Errc::NotSymmetric;
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Throws Errc::Internal with `what` unless `cond` holds.
inline void ensure(bool cond, const char* what) {
  if (!cond) throw Error(Errc::Internal, what);
}

}  // namespace gamma4
