#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pythag {

enum class ErrorKind {
  NotPythagorean,
  ZeroLeg,
  ZeroHypotenuse,
  ZeroTriple,
  ZeroParameter,
  OutOfRegime,
  DegenerateParameter,
  DegenerateInvolution,
  PreconditionViolated,
  NoSolution,
  InvalidDifference,
  MixedDiscriminant,
  HalfIntegralUnit,
  SearchExceeded,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every domain failure in the library is reported through this type; the
/// kind is stable and the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pythag
