#include "semilab/error.hpp"

namespace semilab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedRings: return "MixedRings";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::NonExactDivision: return "NonExactDivision";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::NotMember: return "NotMember";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::InstanceMismatch: return "InstanceMismatch";
    case Errc::InvalidMultiplicativeSet: return "InvalidMultiplicativeSet";
    case Errc::UnsupportedElement: return "UnsupportedElement";
    case Errc::IsUnit: return "IsUnit";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::SquareNotMember: return "SquareNotMember";
    case Errc::UnknownTheoremId: return "UnknownTheoremId";
    case Errc::UnknownInstance: return "UnknownInstance";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::IoError: return "IoError";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace semilab
