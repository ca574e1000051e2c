#pragma once

// Bounded consistency checks of the structure theorems relating a
// semidomain S to its domain of differences G(S). Each check evaluates both
// sides on a finite corpus. A Counterexample always indicates a bug in this
// library, since the statements themselves are proved.

#include <string>
#include <string_view>
#include <vector>

#include "semilab/registry.hpp"
#include "semilab/types.hpp"

namespace semilab {

enum class Overall { Consistent, Counterexample, Inconclusive };
std::string_view to_string(Overall o) noexcept;

struct ConsistencyReport {
  std::string theorem;
  std::string instance;
  std::string corpus;
  std::size_t checked = 0;
  Overall overall = Overall::Inconclusive;
  /// Classification reached, e.g. "UFS", "not UFS", "HFS", "not HFS".
  std::string outcome;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
};

/// T2.5 localization, T3.1 units, T3.3 atoms, T3.4 Furstenberg, T4.2
/// atomicity, T4.5.1 ACCP, T4.5.2 bounded factorization, T4.5.3 finite
/// factorization, T5.1 primes, T5.2 unique and T5.4 half factorization.
const std::vector<std::string>& theorem_ids();

/// Throws UnknownTheoremId, or UnsupportedElement when the instance has no
/// model the check can run on.
ConsistencyReport verify_theorem(std::string_view id, const AnyInstance& inst, const Bounds& bounds);

}  // namespace semilab
