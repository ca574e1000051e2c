#pragma once

// Finitely generated exponent monoids: M = <1/p : p in P> for a finite prime
// set P, and M = <g_1, ..., g_k> inside N_0^d with every generator having a
// positive first coordinate. Both are finite truncations of infinitely
// generated monoids, so every derived report is flagged as truncated.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "semilab/types.hpp"

namespace semilab {

enum class MonoidKind { RecipPrimes, FinRank };

class MonoidSpec {
 public:
  static MonoidSpec recip_primes(std::vector<long> primes);
  static MonoidSpec fin_rank(std::vector<Exp> generators);
  /// <(1,1), ..., (1,n)>.
  static MonoidSpec fin_rank_n(unsigned n);
  /// "recip-primes:2,3,5", "finrank:(1,1),(1,2),(1,3)" or "finrank:3".
  static MonoidSpec parse(std::string_view text);

  MonoidKind kind() const noexcept;
  std::size_t dim() const noexcept;
  const std::vector<long>& primes() const noexcept;
  /// The generating set as exponents (1/p for RecipPrimes).
  const std::vector<Exp>& generators() const noexcept;
  bool truncated() const noexcept { return true; }
  std::string to_string() const;

  bool contains(const Exp& q) const;
  /// All q' in M with q - q' in M, ascending lex. Requires q in M.
  std::vector<Exp> splits(const Exp& q) const;
  bool is_atom(const Exp& q) const;
  /// Minimal generators in lex order; these are exactly the atoms.
  const std::vector<Exp>& atoms() const noexcept;
  /// The `count` smallest members in lex order, starting with 0.
  std::vector<Exp> smallest_members(std::size_t count) const;
  /// Upper bound on the length of any factorization of q.
  std::size_t max_factorization_length(const Exp& q) const;

  struct Data;  // opaque; defined in exp_monoid.cpp

 private:
  explicit MonoidSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

struct MonoidFactorization {
  std::vector<Exp> parts;  // ascending lex
  friend bool operator==(const MonoidFactorization&, const MonoidFactorization&) = default;
  friend auto operator<=>(const MonoidFactorization& a, const MonoidFactorization& b) { return a.parts <=> b.parts; }
};

struct MonoidFactorizations {
  std::vector<MonoidFactorization> items;
  bool complete = true;
  bool truncated = true;
};

bool monoid_contains(const MonoidSpec& m, const Exp& q);
/// Atoms of M. M is finitely generated, so the bound never cuts the set.
std::vector<Exp> monoid_atoms(const MonoidSpec& m, const Bounds& bounds);
/// Throws NotMember unless q is in M.
MonoidFactorizations monoid_factorizations(const MonoidSpec& m, const Exp& q, const Bounds& bounds);
LengthSet monoid_length_set(const MonoidSpec& m, const Exp& q, const Bounds& bounds);

}  // namespace semilab
