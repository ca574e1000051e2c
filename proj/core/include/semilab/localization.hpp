#pragma once

// Localization D^-1 S of a semidomain at a multiplicative subset D of S.
// Fractions are pairs (s, d) with d in D; (s, d) ~ (s', d') iff s d' = d s'.

#include <functional>
#include <string>
#include <vector>

#include "semilab/semidomain.hpp"

namespace semilab {

struct Fraction {
  Poly num;
  Poly den;
};

/// A multiplicative subset given by a predicate, plus sample elements used
/// to spot-check closure and to build corpora.
struct MultiplicativeSet {
  std::string name;
  std::function<bool(const Poly&)> predicate;
  std::vector<Poly> samples;
};

class LocalizedSemidomain {
 public:
  /// Throws InvalidMultiplicativeSet when 1 is not in D, 0 is in D, a sample
  /// lies outside S, or a sampled product leaves D.
  static LocalizedSemidomain localize(SemidomainInstance base, MultiplicativeSet dset);
  /// N_0 localized at the powers of 2.
  static LocalizedSemidomain nat_dyadic();
  /// {f in Z[M_N] : f(0,0) >= 0} localized at f(0,0) > 0.
  static LocalizedSemidomain hfs_loc(unsigned n);

  const std::string& id() const noexcept { return id_; }
  const SemidomainInstance& base() const noexcept { return base_; }
  const MultiplicativeSet& dset() const noexcept { return dset_; }
  bool is_hfs_loc() const noexcept { return base_.kind() == InstanceKind::HfsBase; }

  /// s / d with d in D. Throws InstanceMismatch otherwise.
  Fraction make(Poly num, Poly den) const;
  Fraction make(Poly num) const { return make(std::move(num), base_.one()); }
  /// Throws InstanceMismatch unless f is a fraction of the ambient D^-1 G(S).
  void check(const Fraction& f) const;
  /// s/d is in D^-1 S iff s e is in S for some e in D. Exact for the
  /// built-ins, whose D only contains elements with positive sign.
  bool contains(const Fraction& f) const;

  bool eq(const Fraction& a, const Fraction& b) const;
  Fraction add(const Fraction& a, const Fraction& b) const;
  Fraction mul(const Fraction& a, const Fraction& b) const;
  Fraction neg(const Fraction& a) const;

 private:
  LocalizedSemidomain(std::string id, SemidomainInstance base, MultiplicativeSet dset)
      : id_(std::move(id)), base_(std::move(base)), dset_(std::move(dset)) {}

  std::string id_;
  SemidomainInstance base_;
  MultiplicativeSet dset_;
};

bool frac_eq(const Fraction& a, const Fraction& b);
Fraction frac_add(const Fraction& a, const Fraction& b);
Fraction frac_mul(const Fraction& a, const Fraction& b);
Fraction frac_neg(const Fraction& a);
std::string to_string(const Fraction& f);

/// Unit test for the localized instance: f/g is a unit iff f(0,0) != 0.
/// The inverse fraction g/f is the witness of Proved. NotMember for
/// nonmembers; UnsupportedElement for other localized instances.
Verdict i6_monomial_unit(const LocalizedSemidomain& loc, const Fraction& f);

/// Ambient fractions for corpus sweeps: corpus numerators over D samples.
std::vector<Fraction> fraction_corpus(const LocalizedSemidomain& loc, const Bounds& bounds);

}  // namespace semilab
