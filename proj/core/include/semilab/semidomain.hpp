#pragma once

// The built-in semidomain catalog. Every instance S is described inside a
// concrete domain of differences G(S): a membership predicate, the unit group
// of G(S), and enough structure for the factorization engine.

#include <optional>
#include <string>
#include <vector>

#include "semilab/exp_monoid.hpp"
#include "semilab/types.hpp"

namespace semilab {

enum class InstanceKind {
  Nat,        // N_0 inside Z
  SignC0C1,   // c0 > 0, or c0 = 0 and c1 >= 0, inside Z[x]
  NatQ,       // N_0 + xQ[x] inside Z + xQ[x]
  NatZ,       // N_0 + xZ[x] inside Z[x]
  PosQGauss,  // Q_{>=0} + xQ(i)[x] inside Q + xQ(i)[x]
  PosMonAlg,  // f(0) >= 0 inside Q[M_P]
  HfsBase,    // f(0,0) >= 0 inside Z[M_N]
  HfsLoc,     // numerators f/1 of the localization of HfsBase at f(0,0) > 0
};

enum class AmbientKind {
  Integers,
  IntPoly,
  IntPlusXRatPoly,
  RatPlusXGaussPoly,
  RatMonoidAlgebra,
  IntMonoidAlgebra,
  LocalizedIntMonoidAlgebra,
};

/// Unit groups that occur, used to pick canonical associate representatives.
enum class UnitGroup {
  Trivial,               // {1}
  Signs,                 // {1, -1}
  PositiveRationals,     // Q_{>0} constants
  NonzeroRationals,      // Q^x constants
  PositiveConstantTerm,  // f/g with f(0,0) > 0
  NonzeroConstantTerm,   // f/g with f(0,0) != 0
};

/// Shape of U(S), the additive units: {0}, all of S, or strictly between.
enum class AdditiveUnits { Zero, All, Proper };

std::string_view to_string(InstanceKind kind) noexcept;
std::string_view to_string(AmbientKind kind) noexcept;

class SemidomainInstance {
 public:
  static SemidomainInstance nat();
  static SemidomainInstance sign_c0c1();
  static SemidomainInstance natq();
  static SemidomainInstance natz();
  static SemidomainInstance posq_gauss();
  static SemidomainInstance posmonalg(std::vector<long> primes);
  static SemidomainInstance hfs_base(unsigned n);
  static SemidomainInstance hfs_loc(unsigned n);

  /// G(S) itself, viewed as the semidomain S = G(S).
  SemidomainInstance ambient() const;
  bool is_ambient_view() const noexcept { return ambient_view_; }

  const std::string& id() const noexcept { return id_; }
  InstanceKind kind() const noexcept { return kind_; }
  AmbientKind ambient_kind() const noexcept;
  Ring ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::optional<MonoidSpec>& monoid() const noexcept { return monoid_; }
  bool truncated() const noexcept;
  std::string description() const;

  UnitGroup unit_group() const noexcept;
  UnitGroup ambient_unit_group() const noexcept;
  /// Known shape of U(S) for this instance.
  AdditiveUnits additive_units() const noexcept;
  /// Whether G(S) is a UFD / HFD, when the catalog knows.
  std::optional<bool> ambient_is_ufd() const noexcept;
  std::optional<bool> ambient_is_hfd() const noexcept;
  /// True when G(S) is Z or Z[x], where Kronecker factorization is complete.
  bool zx_ambient() const noexcept;

  /// Throws AmbientMismatch when g has the wrong coefficient ring or dimension.
  void check_representation(const Poly& g) const;
  bool in_ambient(const Poly& g) const;
  /// Exact membership; false for elements outside G(S).
  bool contains(const Poly& g) const;
  bool is_ambient_unit(const Poly& g) const;

  /// Canonical representative of the associate class of s under S^x.
  Poly canonical(const Poly& s) const;
  /// Canonical representative under G(S)^x.
  Poly ambient_canonical(const Poly& s) const;

  Poly zero() const { return Poly(ring_, dim_); }
  Poly one() const { return Poly::constant(Coeff::one(ring_), dim_); }
  Poly constant(const Rat& c) const;

 private:
  SemidomainInstance(std::string id, InstanceKind kind, Ring ring, std::size_t dim);

  std::string id_;
  InstanceKind kind_;
  Ring ring_;
  std::size_t dim_;
  std::optional<MonoidSpec> monoid_;
  bool ambient_view_ = false;
};

bool contains(const SemidomainInstance& inst, const Poly& g);
/// contains(g) or contains(-g); AmbientMismatch for g outside G(S).
bool semisubtractive_check(const SemidomainInstance& inst, const Poly& g);
/// Decided as membership plus ambient unit (S^x = S cap G(S)^x); the witness
/// of Proved is the inverse when it is a polynomial.
Verdict is_unit(const SemidomainInstance& inst, const Poly& s);
/// s in U(S), i.e. -s in S as well. NotMember unless s in S.
bool is_additive_invertible(const SemidomainInstance& inst, const Poly& s);
/// An inverse of s inside S found by direct search, independent of the unit
/// characterization. Nullopt when none exists. Not available for HfsLoc.
std::optional<Poly> inverse_in_S(const SemidomainInstance& inst, const Poly& s);
/// s / d as an element of G(S), or nullopt if d does not divide s in G(S).
std::optional<Poly> ambient_quotient(const SemidomainInstance& inst, const Poly& s, const Poly& d);
/// d |_S s: the quotient exists and lies in S.
bool divides_in_S(const SemidomainInstance& inst, const Poly& d, const Poly& s);

}  // namespace semilab
