#include "semilab/semidomain.hpp"

namespace semilab {

std::string_view to_string(InstanceKind kind) noexcept {
  switch (kind) {
    case InstanceKind::Nat: return "nat";
    case InstanceKind::SignC0C1: return "sign-c0c1";
    case InstanceKind::NatQ: return "natq";
    case InstanceKind::NatZ: return "natz";
    case InstanceKind::PosQGauss: return "posq-gauss";
    case InstanceKind::PosMonAlg: return "posmonalg";
    case InstanceKind::HfsBase: return "hfs-base";
    case InstanceKind::HfsLoc: return "hfs-loc";
  }
  return "?";
}

std::string_view to_string(AmbientKind kind) noexcept {
  switch (kind) {
    case AmbientKind::Integers: return "Z";
    case AmbientKind::IntPoly: return "Z[x]";
    case AmbientKind::IntPlusXRatPoly: return "Z + xQ[x]";
    case AmbientKind::RatPlusXGaussPoly: return "Q + xQ(i)[x]";
    case AmbientKind::RatMonoidAlgebra: return "Q[M]";
    case AmbientKind::IntMonoidAlgebra: return "Z[M]";
    case AmbientKind::LocalizedIntMonoidAlgebra: return "D^-1 Z[M]";
  }
  return "?";
}

SemidomainInstance::SemidomainInstance(std::string id, InstanceKind kind, Ring ring, std::size_t dim)
    : id_(std::move(id)), kind_(kind), ring_(ring), dim_(dim) {}

SemidomainInstance SemidomainInstance::nat() { return {"nat", InstanceKind::Nat, Ring::Int, 1}; }
SemidomainInstance SemidomainInstance::sign_c0c1() { return {"sign-c0c1", InstanceKind::SignC0C1, Ring::Int, 1}; }
SemidomainInstance SemidomainInstance::natq() { return {"natq", InstanceKind::NatQ, Ring::Rat, 1}; }
SemidomainInstance SemidomainInstance::natz() { return {"natz", InstanceKind::NatZ, Ring::Int, 1}; }
SemidomainInstance SemidomainInstance::posq_gauss() { return {"posq-gauss", InstanceKind::PosQGauss, Ring::Gauss, 1}; }

SemidomainInstance SemidomainInstance::posmonalg(std::vector<long> primes) {
  SemidomainInstance s("posmonalg", InstanceKind::PosMonAlg, Ring::Rat, 1);
  s.monoid_ = MonoidSpec::recip_primes(std::move(primes));
  s.id_ = "posmonalg(" + s.monoid_->to_string().substr(std::string("recip-primes:").size()) + ")";
  return s;
}

SemidomainInstance SemidomainInstance::hfs_base(unsigned n) {
  SemidomainInstance s("hfs-base(" + std::to_string(n) + ")", InstanceKind::HfsBase, Ring::Int, 2);
  s.monoid_ = MonoidSpec::fin_rank_n(n);
  return s;
}

SemidomainInstance SemidomainInstance::hfs_loc(unsigned n) {
  SemidomainInstance s("hfs-loc(" + std::to_string(n) + ")", InstanceKind::HfsLoc, Ring::Int, 2);
  s.monoid_ = MonoidSpec::fin_rank_n(n);
  return s;
}

SemidomainInstance SemidomainInstance::ambient() const {
  SemidomainInstance g = *this;
  g.ambient_view_ = true;
  g.id_ = "G(" + id_ + ")";
  return g;
}

AmbientKind SemidomainInstance::ambient_kind() const noexcept {
  switch (kind_) {
    case InstanceKind::Nat: return AmbientKind::Integers;
    case InstanceKind::SignC0C1:
    case InstanceKind::NatZ: return AmbientKind::IntPoly;
    case InstanceKind::NatQ: return AmbientKind::IntPlusXRatPoly;
    case InstanceKind::PosQGauss: return AmbientKind::RatPlusXGaussPoly;
    case InstanceKind::PosMonAlg: return AmbientKind::RatMonoidAlgebra;
    case InstanceKind::HfsBase: return AmbientKind::IntMonoidAlgebra;
    case InstanceKind::HfsLoc: return AmbientKind::LocalizedIntMonoidAlgebra;
  }
  return AmbientKind::Integers;
}

bool SemidomainInstance::truncated() const noexcept {
  switch (kind_) {
    case InstanceKind::PosQGauss:
    case InstanceKind::PosMonAlg:
    case InstanceKind::HfsBase:
    case InstanceKind::HfsLoc: return true;
    default: return false;
  }
}

std::string SemidomainInstance::description() const {
  std::string s;
  switch (kind_) {
    case InstanceKind::Nat: s = "N_0 inside Z"; break;
    case InstanceKind::SignC0C1: s = "{f in Z[x] : c0 > 0, or c0 = 0 and c1 >= 0}"; break;
    case InstanceKind::NatQ: s = "N_0 + xQ[x] inside Z + xQ[x]"; break;
    case InstanceKind::NatZ: s = "N_0 + xZ[x] inside Z[x]"; break;
    case InstanceKind::PosQGauss: s = "Q_{>=0} + xQ(i)[x] inside Q + xQ(i)[x]"; break;
    case InstanceKind::PosMonAlg: s = "{f in Q[M] : f(0) >= 0}, M = <" + monoid_->to_string() + ">"; break;
    case InstanceKind::HfsBase: s = "{f in Z[M] : f(0,0) >= 0}, M = <" + monoid_->to_string() + ">"; break;
    case InstanceKind::HfsLoc:
      s = "localization of {f in Z[M] : f(0,0) >= 0} at f(0,0) > 0, M = <" + monoid_->to_string() + ">";
      break;
  }
  if (ambient_view_) s = "domain of differences of " + s;
  return s;
}

UnitGroup SemidomainInstance::ambient_unit_group() const noexcept {
  switch (ambient_kind()) {
    case AmbientKind::RatPlusXGaussPoly:
    case AmbientKind::RatMonoidAlgebra: return UnitGroup::NonzeroRationals;
    case AmbientKind::LocalizedIntMonoidAlgebra: return UnitGroup::NonzeroConstantTerm;
    default: return UnitGroup::Signs;
  }
}

UnitGroup SemidomainInstance::unit_group() const noexcept {
  if (ambient_view_) return ambient_unit_group();
  switch (kind_) {
    case InstanceKind::PosQGauss:
    case InstanceKind::PosMonAlg: return UnitGroup::PositiveRationals;
    case InstanceKind::HfsLoc: return UnitGroup::PositiveConstantTerm;
    default: return UnitGroup::Trivial;
  }
}

AdditiveUnits SemidomainInstance::additive_units() const noexcept {
  if (ambient_view_) return AdditiveUnits::All;
  return kind_ == InstanceKind::Nat ? AdditiveUnits::Zero : AdditiveUnits::Proper;
}

std::optional<bool> SemidomainInstance::ambient_is_ufd() const noexcept {
  switch (ambient_kind()) {
    case AmbientKind::Integers:
    case AmbientKind::IntPoly: return true;
    default: return false;
  }
}

std::optional<bool> SemidomainInstance::ambient_is_hfd() const noexcept {
  switch (ambient_kind()) {
    case AmbientKind::Integers:
    case AmbientKind::IntPoly: return true;
    case AmbientKind::IntPlusXRatPoly:
    case AmbientKind::RatMonoidAlgebra: return false;
    default: return std::nullopt;
  }
}

bool SemidomainInstance::zx_ambient() const noexcept {
  auto a = ambient_kind();
  return a == AmbientKind::Integers || a == AmbientKind::IntPoly;
}

void SemidomainInstance::check_representation(const Poly& g) const {
  if (g.ring() != ring_ || g.dim() != dim_) {
    raise(Errc::AmbientMismatch, g.to_string() + " (" + std::string(to_string(g.ring())) + ", dim " +
                                     std::to_string(g.dim()) + ") is not in the ambient of " + id_);
  }
}

namespace {
bool integral_exponents(const Poly& g) {
  for (const auto& t : g.terms()) {
    if (!t.exp[0].is_integer()) return false;
  }
  return true;
}

bool exponents_in(const MonoidSpec& m, const Poly& g) {
  for (const auto& t : g.terms()) {
    if (!m.contains(t.exp)) return false;
  }
  return true;
}

bool nonnegative_constant(const Poly& g) {
  auto s = g.constant_term().real_sign();
  return s && *s >= 0;
}
}  // namespace

bool SemidomainInstance::in_ambient(const Poly& g) const {
  check_representation(g);
  switch (kind_) {
    case InstanceKind::Nat: return g.is_constant();
    case InstanceKind::SignC0C1:
    case InstanceKind::NatZ: return integral_exponents(g);
    case InstanceKind::NatQ: return integral_exponents(g) && g.constant_term().as_rat().is_integer();
    case InstanceKind::PosQGauss: return integral_exponents(g) && g.constant_term().as_gauss().is_real();
    case InstanceKind::PosMonAlg:
    case InstanceKind::HfsBase:
    case InstanceKind::HfsLoc: return exponents_in(*monoid_, g);
  }
  return false;
}

bool SemidomainInstance::contains(const Poly& g) const {
  if (!in_ambient(g)) return false;
  if (ambient_view_) return true;
  if (kind_ == InstanceKind::SignC0C1) {
    int c0 = g.constant_term().as_int().sign();
    if (c0 != 0) return c0 > 0;
    return g.coeff_at(Exp{Rat(1)}).as_int().sign() >= 0;
  }
  return nonnegative_constant(g);
}

bool SemidomainInstance::is_ambient_unit(const Poly& g) const {
  if (!in_ambient(g) || g.is_zero()) return false;
  switch (ambient_unit_group()) {
    case UnitGroup::Signs: return g.is_constant() && abs(*g.constant_term().to_rat()).is_one();
    case UnitGroup::NonzeroRationals: return g.is_constant() && g.constant_term().to_rat().has_value();
    case UnitGroup::NonzeroConstantTerm: return !g.constant_term().is_zero();
    default: return false;
  }
}

namespace {
// The real scalar that identifies the associate class of a leading
// coefficient: the first nonzero rational component.
Rat leading_component(const Coeff& c) {
  if (auto r = c.to_rat()) return *r;
  const auto& g = c.as_gauss();
  return g.re().is_zero() ? g.im() : g.re();
}

Poly divide_by_rational(const Poly& s, const Rat& r) {
  Rat inv = Rat(1) / r;
  switch (s.ring()) {
    case Ring::Int: return s.converted(Ring::Rat).scaled(Coeff(inv)).converted(Ring::Int);
    case Ring::Rat: return s.scaled(Coeff(inv));
    case Ring::Gauss: return s.scaled(Coeff(GaussRat(inv)));
  }
  return s;
}

Poly canonical_for(UnitGroup group, const Poly& s) {
  if (s.is_zero()) return s;
  switch (group) {
    case UnitGroup::Trivial: return s;
    case UnitGroup::Signs: return leading_component(s.leading_term().coeff).sign() < 0 ? -s : s;
    case UnitGroup::PositiveRationals: return divide_by_rational(s, abs(leading_component(s.leading_term().coeff)));
    case UnitGroup::NonzeroRationals: return divide_by_rational(s, leading_component(s.leading_term().coeff));
    case UnitGroup::PositiveConstantTerm:
    case UnitGroup::NonzeroConstantTerm: {
      // Only monomials have a simple normal form; positive integers are
      // units, so c x^m reduces to sign(c) x^m (or x^m up to G-units).
      if (!s.is_monomial()) return s;
      const Term& t = s.leading_term();
      int sign = group == UnitGroup::NonzeroConstantTerm ? 1 : t.coeff.as_int().sign();
      if (t.exp.is_zero()) return Poly::constant(Coeff(Int(1)), s.dim());
      return Poly::monomial(Coeff(Int(sign)), t.exp);
    }
  }
  return s;
}
}  // namespace

Poly SemidomainInstance::canonical(const Poly& s) const { return canonical_for(unit_group(), s); }
Poly SemidomainInstance::ambient_canonical(const Poly& s) const { return canonical_for(ambient_unit_group(), s); }

Poly SemidomainInstance::constant(const Rat& c) const {
  return Poly::constant(convert(Coeff(c), ring_), dim_);
}

bool contains(const SemidomainInstance& inst, const Poly& g) { return inst.contains(g); }

bool semisubtractive_check(const SemidomainInstance& inst, const Poly& g) {
  if (!inst.in_ambient(g)) raise(Errc::AmbientMismatch, g.to_string() + " is not in G(" + inst.id() + ")");
  return inst.contains(g) || inst.contains(-g);
}

Verdict is_unit(const SemidomainInstance& inst, const Poly& s) {
  if (!inst.contains(s)) raise(Errc::NotMember, s.to_string() + " is not in " + inst.id());
  if (s.is_zero()) return Verdict::refuted({s}, "0 is never a unit");
  if (!inst.is_ambient_unit(s)) return Verdict::refuted({s}, "not a unit of the domain of differences");
  if (inst.unit_group() == UnitGroup::PositiveConstantTerm || inst.unit_group() == UnitGroup::NonzeroConstantTerm) {
    if (!inst.is_ambient_view() && s.constant_term().as_int().sign() <= 0) {
      return Verdict::refuted({s}, "constant term is not positive");
    }
    return Verdict::proved("constant term is nonzero; the inverse is the fraction 1/s");
  }
  Poly inv = inst.constant(Rat(1) / *s.constant_term().to_rat());
  return Verdict::proved("member and unit of the domain of differences", {inv});
}

bool is_additive_invertible(const SemidomainInstance& inst, const Poly& s) {
  if (!inst.contains(s)) raise(Errc::NotMember, s.to_string() + " is not in " + inst.id());
  return inst.contains(-s);
}

std::optional<Poly> inverse_in_S(const SemidomainInstance& inst, const Poly& s) {
  if (inst.kind() == InstanceKind::HfsLoc) {
    raise(Errc::UnsupportedElement, "inverses in a localization are fractions");
  }
  inst.check_representation(s);
  // Lex leading exponents add under multiplication, so s * t = 1 forces
  // both factors to be constants.
  if (s.is_zero() || !s.is_constant()) return std::nullopt;
  Coeff c = s.constant_term();
  Coeff inv;
  if (c.ring() == Ring::Int) {
    if (!abs(c.as_int()).is_one()) return std::nullopt;
    inv = c;
  } else {
    inv = exact_div(Coeff::one(c.ring()), c);
  }
  Poly t = Poly::constant(inv, s.dim());
  if (!inst.contains(t)) return std::nullopt;
  return t;
}

std::optional<Poly> ambient_quotient(const SemidomainInstance& inst, const Poly& s, const Poly& d) {
  inst.check_representation(s);
  inst.check_representation(d);
  if (d.is_zero()) raise(Errc::DivisionByZero, "division by zero in " + inst.id());
  if (inst.kind() == InstanceKind::HfsLoc && s.is_monomial() && d.is_monomial()) {
    // Nonzero integers are units of the localized ambient, so monomial
    // quotients are computed up to a positive rational unit.
    auto e = s.leading_term().exp.checked_sub(d.leading_term().exp);
    if (!e || !inst.monoid()->contains(*e)) return std::nullopt;
    int sign = s.leading_term().coeff.as_int().sign() * d.leading_term().coeff.as_int().sign();
    return Poly::monomial(Coeff(Int(sign)), *e);
  }
  if (s.is_zero()) return s;
  auto q = s.exact_quotient(d);
  if (!q) {
    if (inst.kind() == InstanceKind::HfsLoc) {
      raise(Errc::UnsupportedElement, "division of non-monomial fractions in " + inst.id());
    }
    return std::nullopt;
  }
  if (!inst.in_ambient(*q)) return std::nullopt;
  return q;
}

bool divides_in_S(const SemidomainInstance& inst, const Poly& d, const Poly& s) {
  auto q = ambient_quotient(inst, s, d);
  return q && inst.contains(*q);
}

}  // namespace semilab
