#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semilab {

/// Error codes raised by the library. Mathematical outcomes (false, Refuted,
/// Unknown) are never reported through these; they signal malformed input,
/// unsupported queries, or broken internal invariants.
enum class Errc {
  ZeroDenominator,
  DivisionByZero,
  MixedRings,
  RingMismatch,
  NonExactDivision,
  DimensionMismatch,
  ZeroPolynomial,
  DegreeCapExceeded,
  NotRepresentable,
  NotMember,
  AmbientMismatch,
  InstanceMismatch,
  InvalidMultiplicativeSet,
  UnsupportedElement,
  IsUnit,
  ZeroElement,
  SquareNotMember,
  UnknownTheoremId,
  UnknownInstance,
  SyntaxError,
  InvalidArgument,
  BudgetExceeded,
  IoError,
  InvariantViolation,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace semilab
