#include "semilab/types.hpp"

namespace semilab {

void Bounds::validate() const {
  if (max_degree == 0 || max_height == 0 || max_length == 0 || max_candidates == 0 || chain_budget == 0) {
    raise(Errc::InvalidArgument, "every bound must be positive");
  }
}

std::string_view to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::Proved: return "Proved";
    case VerdictKind::Refuted: return "Refuted";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

Verdict Verdict::proved(std::string reason, std::vector<Poly> witness) {
  return Verdict{VerdictKind::Proved, std::move(witness), std::move(reason), std::nullopt};
}

Verdict Verdict::refuted(std::vector<Poly> witness, std::string reason) {
  return Verdict{VerdictKind::Refuted, std::move(witness), std::move(reason), std::nullopt};
}

Verdict Verdict::unknown(const Bounds& b, std::string reason) {
  return Verdict{VerdictKind::Unknown, {}, std::move(reason), b};
}

}  // namespace semilab
