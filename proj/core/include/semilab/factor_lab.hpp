#pragma once

// Divisors, atoms, primes, factorizations and length sets inside a
// semidomain instance, plus ACCP probes and length-function checks.
// Every semi-decidable query answers with a Verdict or a completeness flag.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semilab/semidomain.hpp"
#include "semilab/types.hpp"

namespace semilab {

/// Divisors of s in S, one canonical representative per associate class,
/// sorted canonically.
struct DivisorSet {
  std::vector<Poly> divisors;
  bool complete = false;
};

/// Throws NotMember, ZeroElement, or UnsupportedElement outside the
/// analyzed fragment (non-monomials of monoid-algebra instances).
DivisorSet divisors_in_S(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds);

struct AtomOptions {
  /// Prove atoms irreducible in Z or Z[x] without scanning divisors.
  bool ambient_fast_path = true;
};

/// Refuted carries a nonunit pair (d, s/d). Throws NotMember, ZeroElement, IsUnit.
Verdict is_atom_in_S(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds, AtomOptions opts = {});
/// Refuted carries (s1, s2) with p | s1 s2, p not dividing either.
Verdict is_prime_in_S(const SemidomainInstance& inst, const Poly& p, const Bounds& bounds);

struct FactorizationZ {
  Poly target;
  std::vector<Poly> factors;  // canonical atoms, sorted

  friend bool operator==(const FactorizationZ& a, const FactorizationZ& b) { return a.factors == b.factors; }
  friend auto operator<=>(const FactorizationZ& a, const FactorizationZ& b) { return a.factors <=> b.factors; }
};

struct Factorizations {
  std::vector<FactorizationZ> items;  // sorted by length, then factors
  bool complete = false;
  bool truncated = false;
};

/// Throws NotMember, ZeroElement, IsUnit; InvariantViolation when a
/// complete search misses the sign-flip transfer of the ambient factorization.
Factorizations factorizations_in_S(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds);
LengthSet length_set(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds);

/// Proved with the unit s/t as witness, or Refuted with (s, t).
Verdict associates(const SemidomainInstance& inst, const Poly& s, const Poly& t);

/// Proved with an atom dividing s; Refuted when the divisor scan was
/// complete and no divisor is an atom.
Verdict furstenberg_witness(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds);

enum class ChainStrategy { Halving, ExhaustiveDescent };
std::string_view to_string(ChainStrategy s) noexcept;

struct ChainReport {
  ChainStrategy strategy;
  std::vector<Poly> chain;  // each entry a proper divisor of the previous one
  std::size_t steps = 0;    // links in the chain
  bool budget_reached = false;
  bool stabilized = false;
  bool complete = true;
};

/// Halving follows s, s/2, s/4, ... while members; exhaustive descent finds
/// the longest chain of proper nonunit divisors, up to bounds.chain_budget.
ChainReport accp_chain_probe(const SemidomainInstance& inst, ChainStrategy strategy, const Poly& seed,
                             const Bounds& bounds);

/// A candidate length function. eval returns nullopt where undefined.
struct LengthFn {
  std::string name;
  std::function<std::optional<std::size_t>(const Poly&)> eval;
};

/// "degree" (integral exponents in dimension 1), "omega" (number of
/// irreducible factors in Z or Z[x]) or "ell2-of:<base>".
LengthFn make_length_fn(const SemidomainInstance& inst, const std::string& name);
/// g -> l(g^2) on the domain of differences. Evaluation throws
/// SquareNotMember if g^2 is not in S.
LengthFn ell_squared(const SemidomainInstance& inst, const LengthFn& l);

struct LengthFnReport {
  std::string function;
  bool pass = true;
  std::size_t points_checked = 0;
  std::size_t pairs_checked = 0;
  std::string failed_axiom;  // "", "unit", "superadditive" or "undefined"
  std::vector<Poly> witnesses;
  std::string detail;
};

/// Checks l(u) = 0 iff u is a unit on every corpus member of `inst`, and
/// l(bc) >= l(b) + l(c) on all pairs of an initial segment plus seeded
/// random pairs. Non-members of the corpus are skipped.
LengthFnReport verify_length_function(const SemidomainInstance& inst, const LengthFn& l,
                                      const std::vector<Poly>& corpus, std::uint64_t seed = 1);

}  // namespace semilab
