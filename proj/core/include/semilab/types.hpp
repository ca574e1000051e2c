#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "semilab/sparse_poly.hpp"

namespace semilab {

/// Budgets for every bounded search.
struct Bounds {
  std::size_t max_degree = 3;
  std::size_t max_height = 5;
  std::size_t max_length = 8;
  std::size_t max_candidates = 5000;
  std::size_t chain_budget = 20;

  /// Throws InvalidArgument unless every budget is positive.
  void validate() const;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

enum class VerdictKind { Proved, Refuted, Unknown };
std::string_view to_string(VerdictKind kind) noexcept;

/// Three-valued answer. Refuted carries a witness that can be re-checked;
/// Unknown carries the bounds that were exhausted.
struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::vector<Poly> witness;
  std::string reason;
  std::optional<Bounds> bounds;

  static Verdict proved(std::string reason, std::vector<Poly> witness = {});
  static Verdict refuted(std::vector<Poly> witness, std::string reason);
  static Verdict unknown(const Bounds& b, std::string reason);

  bool is_proved() const noexcept { return kind == VerdictKind::Proved; }
  bool is_refuted() const noexcept { return kind == VerdictKind::Refuted; }
  bool is_unknown() const noexcept { return kind == VerdictKind::Unknown; }
};

struct LengthSet {
  std::set<std::size_t> lengths;
  bool complete = false;
};

}  // namespace semilab
