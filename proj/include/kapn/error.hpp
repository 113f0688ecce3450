#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kapn {

enum class Errc {
  InvalidField,
  DivisionByZero,
  NotInvertibleExponent,
  NotCoprime,
  InvalidU,
  DegenerateU,
  NoThreeSolutions,
  OutsideLemmaScope,
  ZeroDirection,
  HypothesisViolated,
  ParityError,
  ParityMismatch,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidField: return "InvalidField";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInvertibleExponent: return "NotInvertibleExponent";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::InvalidU: return "InvalidU";
    case Errc::DegenerateU: return "DegenerateU";
    case Errc::NoThreeSolutions: return "NoThreeSolutions";
    case Errc::OutsideLemmaScope: return "OutsideLemmaScope";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ParityError: return "ParityError";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// Domain error raised by the toolkit. The code is stable and shows up in CLI
// output; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kapn
