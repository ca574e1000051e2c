#include "semilab/localization.hpp"

#include "semilab/corpus.hpp"

namespace semilab {

bool frac_eq(const Fraction& a, const Fraction& b) { return a.num * b.den == a.den * b.num; }
Fraction frac_add(const Fraction& a, const Fraction& b) { return {a.num * b.den + a.den * b.num, a.den * b.den}; }
Fraction frac_mul(const Fraction& a, const Fraction& b) { return {a.num * b.num, a.den * b.den}; }
Fraction frac_neg(const Fraction& a) { return {-a.num, a.den}; }

std::string to_string(const Fraction& f) {
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(f.num) + "/" + wrap(f.den);
}

LocalizedSemidomain LocalizedSemidomain::localize(SemidomainInstance base, MultiplicativeSet dset) {
  if (!dset.predicate(base.one())) raise(Errc::InvalidMultiplicativeSet, dset.name + " does not contain 1");
  if (dset.predicate(base.zero())) raise(Errc::InvalidMultiplicativeSet, dset.name + " contains 0");
  for (const auto& d : dset.samples) {
    if (!dset.predicate(d) || !base.contains(d)) {
      raise(Errc::InvalidMultiplicativeSet, "sample " + d.to_string() + " is not in " + dset.name);
    }
  }
  for (const auto& a : dset.samples) {
    for (const auto& b : dset.samples) {
      if (!dset.predicate(a * b)) {
        raise(Errc::InvalidMultiplicativeSet,
              dset.name + " is not closed: " + a.to_string() + " * " + b.to_string());
      }
    }
  }
  std::string id = base.id() + "[" + dset.name + "^-1]";
  return LocalizedSemidomain(std::move(id), std::move(base), std::move(dset));
}

LocalizedSemidomain LocalizedSemidomain::nat_dyadic() {
  MultiplicativeSet d;
  d.name = "powers of 2";
  d.predicate = [](const Poly& f) {
    if (!f.is_constant() || f.is_zero()) return false;
    Int c = f.constant_term().as_int();
    if (c.sign() <= 0) return false;
    while (divides(Int(2), c) && !c.is_one()) c = divexact(c, Int(2));
    return c.is_one();
  };
  for (long k = 1; k <= 64; k *= 2) d.samples.push_back(Poly::constant(Coeff(Int(k))));
  auto loc = localize(SemidomainInstance::nat(), std::move(d));
  loc.id_ = "nat-dyadic";
  return loc;
}

LocalizedSemidomain LocalizedSemidomain::hfs_loc(unsigned n) {
  auto base = SemidomainInstance::hfs_base(n);
  MultiplicativeSet d;
  d.name = "f(0,0) > 0";
  d.predicate = [base](const Poly& f) {
    return base.in_ambient(f) && base.contains(f) && f.constant_term().as_int().sign() > 0;
  };
  Bounds b;
  b.max_degree = 2;
  b.max_height = 2;
  b.max_candidates = 400;
  for (const auto& f : member_corpus(base, b)) {
    if (f.constant_term().as_int().sign() > 0) d.samples.push_back(f);
    if (d.samples.size() == 12) break;
  }
  auto loc = localize(std::move(base), std::move(d));
  loc.id_ = "hfs-loc(" + std::to_string(n) + ")";
  return loc;
}

void LocalizedSemidomain::check(const Fraction& f) const {
  auto fits = [&](const Poly& p) { return p.ring() == base_.ring() && p.dim() == base_.dim() && base_.in_ambient(p); };
  if (!fits(f.num) || !fits(f.den) || !dset_.predicate(f.den)) {
    raise(Errc::InstanceMismatch, to_string(f) + " is not a fraction of " + id_);
  }
}

Fraction LocalizedSemidomain::make(Poly num, Poly den) const {
  Fraction f{std::move(num), std::move(den)};
  check(f);
  return f;
}

bool LocalizedSemidomain::contains(const Fraction& f) const {
  check(f);
  if (base_.contains(f.num)) return true;
  for (const auto& e : dset_.samples) {
    if (base_.contains(f.num * e)) return true;
  }
  return false;
}

bool LocalizedSemidomain::eq(const Fraction& a, const Fraction& b) const {
  check(a);
  check(b);
  return frac_eq(a, b);
}

Fraction LocalizedSemidomain::add(const Fraction& a, const Fraction& b) const {
  check(a);
  check(b);
  return frac_add(a, b);
}

Fraction LocalizedSemidomain::mul(const Fraction& a, const Fraction& b) const {
  check(a);
  check(b);
  return frac_mul(a, b);
}

Fraction LocalizedSemidomain::neg(const Fraction& a) const {
  check(a);
  return frac_neg(a);
}

Verdict i6_monomial_unit(const LocalizedSemidomain& loc, const Fraction& f) {
  if (!loc.is_hfs_loc()) raise(Errc::UnsupportedElement, "the constant-term unit rule applies to hfs-loc only");
  if (!loc.contains(f)) raise(Errc::NotMember, to_string(f) + " is not in " + loc.id());
  if (f.num.is_zero()) return Verdict::refuted({f.num, f.den}, "0 is never a unit");
  // Members have f(0,0) >= 0. A positive constant term puts f in D, so g/f
  // is an inverse; a zero one survives in the trailing term of every product.
  if (f.num.constant_term().is_zero()) {
    return Verdict::refuted({f.num, f.den}, "constant term of the numerator is 0");
  }
  return Verdict::proved("constant term of the numerator is nonzero", {f.den, f.num});
}

std::vector<Fraction> fraction_corpus(const LocalizedSemidomain& loc, const Bounds& bounds) {
  const auto& dens = loc.dset().samples;
  Bounds b = bounds;
  b.max_candidates = std::max<std::size_t>(1, bounds.max_candidates / std::max<std::size_t>(1, dens.size()));
  std::vector<Fraction> out;
  for (const auto& num : ambient_corpus(loc.base(), b)) {
    for (const auto& den : dens) out.push_back(Fraction{num, den});
  }
  return out;
}

}  // namespace semilab
