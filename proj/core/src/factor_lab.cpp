#include "semilab/factor_lab.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "semilab/corpus.hpp"
#include "semilab/zx_factor.hpp"

namespace semilab {

namespace {

Factorizer& zx_cache() {
  thread_local Factorizer f;
  return f;
}

void require_member(const SemidomainInstance& inst, const Poly& s) {
  if (!inst.contains(s)) raise(Errc::NotMember, s.to_string() + " is not in " + inst.id());
  if (s.is_zero()) raise(Errc::ZeroElement, "0 has no divisors or factorizations to report");
}

bool unit_in(const SemidomainInstance& inst, const Poly& s) { return is_unit(inst, s).is_proved(); }

void require_nonunit(const SemidomainInstance& inst, const Poly& s) {
  require_member(inst, s);
  if (unit_in(inst, s)) raise(Errc::IsUnit, s.to_string() + " is a unit of " + inst.id());
}

class DivisorCollector {
 public:
  DivisorCollector(const SemidomainInstance& inst, const Poly& s) : inst_(inst), s_(s) {}

  void offer(const Poly& d) {
    if (d.is_zero() || !inst_.contains(d)) return;
    auto t = ambient_quotient(inst_, s_, d);
    if (!t || !inst_.contains(*t)) return;
    found_.insert(inst_.canonical(d));
  }

  DivisorSet finish(bool complete) && { return DivisorSet{{found_.begin(), found_.end()}, complete}; }

 private:
  const SemidomainInstance& inst_;
  const Poly& s_;
  std::set<Poly> found_;
};

DivisorSet zx_divisors(const SemidomainInstance& inst, const Poly& s) {
  DivisorCollector out(inst, s);
  for (const auto& d : zx_cache().divisors(s)) out.offer(d);
  return std::move(out).finish(true);
}

// Z + xQ[x]: over Q[x] every divisor is q * b_T for a sub-multiset T of the
// irreducible factors. A nonzero constant term pins q to finitely many
// values; otherwise q ranges over Q^x and only a height slice is scanned.
DivisorSet natq_divisors(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds) {
  Int lcm(1);
  for (const auto& t : s.terms()) {
    const Int& den = t.coeff.as_rat().den();
    lcm = divexact(lcm * den, gcd(lcm, den));
  }
  Poly cleared = s.scaled(Coeff(Rat(lcm))).converted(Ring::Int);
  const auto& fz = zx_cache().factor(cleared);
  std::vector<std::pair<Poly, unsigned>> bases;
  for (const auto& f : fz.factors) {
    if (f.is_constant()) continue;
    if (!bases.empty() && bases.back().first == f) {
      ++bases.back().second;
    } else {
      bases.emplace_back(f, 1);
    }
  }

  const Rat s0 = s.constant_term().as_rat();
  const bool complete = !s0.is_zero();
  const long H = static_cast<long>(bounds.max_height);
  std::vector<Rat> slice;
  if (!complete) {
    for (const auto& c : coefficient_alphabet(Ring::Rat, bounds.max_height)) {
      if (!c.is_zero()) slice.push_back(c.as_rat());
    }
  }

  DivisorCollector out(inst, s);
  std::vector<unsigned> e(bases.size(), 0);
  while (true) {
    Poly b = Poly::constant(Coeff(Int(1)));
    for (std::size_t i = 0; i < bases.size(); ++i) b = b * bases[i].first.pow(e[i]);
    b = b.converted(Ring::Rat);
    const Rat b0 = b.constant_term().as_rat();
    std::set<Rat> qs;
    if (complete) {
      for (const auto& k : positive_divisors(s0.num())) {
        qs.insert(Rat(k) / b0);
        qs.insert(-Rat(k) / b0);
      }
    } else {
      qs.insert(slice.begin(), slice.end());
      Rat anchor = b0;
      if (b0.is_zero()) {
        auto rest = s.exact_quotient(b);
        anchor = rest ? rest->constant_term().as_rat() : Rat(0);
      }
      for (long k = 1; !anchor.is_zero() && k <= H; ++k) {
        Rat q = b0.is_zero() ? anchor / Rat(k) : Rat(k) / anchor;
        qs.insert(q);
        qs.insert(-q);
      }
    }
    for (const auto& q : qs) out.offer(b.scaled(Coeff(q)));

    std::size_t i = 0;
    while (i < e.size() && ++e[i] > bases[i].second) e[i++] = 0;
    if (i == e.size()) break;
  }
  return std::move(out).finish(complete);
}

// Monomials c x^m: every divisor is u x^m' with m' a split of m.
DivisorSet monomial_divisors(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds) {
  const Term& lt = s.leading_term();
  std::vector<Exp> exps;
  if (inst.monoid()) {
    exps = inst.monoid()->splits(lt.exp);
  } else {
    auto k = lt.exp[0].num().to_int64().value_or(0);
    for (long j = 0; j <= k; ++j) exps.push_back(Exp{Rat(j)});
  }

  std::vector<Coeff> units{Coeff::one(s.ring()), -Coeff::one(s.ring()), lt.coeff, -lt.coeff};
  bool complete = true;
  if (s.ring() == Ring::Int) {
    for (const auto& k : positive_divisors(abs(lt.coeff.as_int()))) {
      units.emplace_back(k);
      units.emplace_back(-k);
    }
  } else if (s.ring() == Ring::Gauss) {
    // Middle exponents admit any scalar in Q(i)^x, infinitely many classes.
    complete = exps.size() <= 2;
    if (!complete) {
      for (const auto& c : coefficient_alphabet(Ring::Gauss, bounds.max_height)) {
        if (!c.is_zero()) units.push_back(c);
      }
    }
  }

  DivisorCollector out(inst, s);
  for (const auto& m : exps) {
    for (const auto& u : units) out.offer(Poly::monomial(u, m));
  }
  return std::move(out).finish(complete);
}

bool dominates(const Poly& a, const Poly& b) {
  // Sort key for "small first": leading exponent, height, canonical order.
  const Exp& ea = a.leading_term().exp;
  const Exp& eb = b.leading_term().exp;
  if (ea != eb) return ea < eb;
  Int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

DivisorSet divisors_in_S(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds) {
  require_member(inst, s);
  if (inst.zx_ambient()) return zx_divisors(inst, s);
  switch (inst.kind()) {
    case InstanceKind::NatQ: return natq_divisors(inst, s, bounds);
    case InstanceKind::PosQGauss:
      if (s.is_monomial()) return monomial_divisors(inst, s, bounds);
      if (s.degree() == Rat(1)) {
        DivisorCollector out(inst, s);
        out.offer(inst.one());
        out.offer(s);
        return std::move(out).finish(true);
      }
      break;
    case InstanceKind::PosMonAlg:
    case InstanceKind::HfsBase:
    case InstanceKind::HfsLoc:
      if (s.is_monomial()) return monomial_divisors(inst, s, bounds);
      break;
    default: break;
  }
  raise(Errc::UnsupportedElement, "divisors of " + s.to_string() + " in " + inst.id() +
                                      " are outside the analyzed fragment");
}

Verdict is_atom_in_S(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds, AtomOptions opts) {
  require_nonunit(inst, s);
  if (opts.ambient_fast_path && inst.zx_ambient() && zx_cache().is_irreducible(s)) {
    return Verdict::proved("irreducible in the domain of differences", {s});
  }
  auto ds = divisors_in_S(inst, s, bounds);
  for (const auto& d : ds.divisors) {
    if (unit_in(inst, d)) continue;
    Poly t = *ambient_quotient(inst, s, d);
    if (unit_in(inst, t)) continue;
    return Verdict::refuted({d, t}, "product of two nonunits");
  }
  if (ds.complete) return Verdict::proved("complete divisor scan found only unit cofactors");
  return Verdict::unknown(bounds, "no nonunit split within the height bound");
}

Verdict is_prime_in_S(const SemidomainInstance& inst, const Poly& p, const Bounds& bounds) {
  require_nonunit(inst, p);
  const auto shape = inst.additive_units();
  if (inst.zx_ambient() && shape != AdditiveUnits::Proper && zx_cache().is_irreducible(p)) {
    return Verdict::proved("prime in the domain of differences and U(S) is {0} or S", {p});
  }
  auto atom = is_atom_in_S(inst, p, bounds);
  if (atom.is_refuted()) return Verdict::refuted(atom.witness, "not an atom: p divides the product of its factors");

  Bounds pool_bounds = bounds;
  pool_bounds.max_degree = std::min<std::size_t>(bounds.max_degree, 3);
  pool_bounds.max_height = std::min<std::size_t>(bounds.max_height, 2);
  pool_bounds.max_candidates = 60;
  const bool monomials_only = inst.kind() == InstanceKind::PosMonAlg || inst.kind() == InstanceKind::HfsBase ||
                              inst.kind() == InstanceKind::HfsLoc;
  std::vector<Poly> pool;
  for (auto& g : member_corpus(inst, pool_bounds)) {
    if (!monomials_only || g.is_monomial()) pool.push_back(std::move(g));
  }
  auto divides = [&](const Poly& s) { return divides_in_S(inst, p, s); };
  auto witness = [&](const Poly& a, const Poly& b) { return divides(a * b) && !divides(a) && !divides(b); };
  for (const auto& a : pool) {
    if (witness(a, a)) return Verdict::refuted({a, a}, "p divides a*a but not a");
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (witness(pool[i], pool[j])) return Verdict::refuted({pool[i], pool[j]}, "p divides a*b but neither factor");
    }
  }
  return Verdict::unknown(bounds, "no witness pair among " + std::to_string(pool.size()) + " small members");
}

namespace {

class FactorSearch {
 public:
  FactorSearch(const SemidomainInstance& inst, const Bounds& bounds) : inst_(inst), bounds_(bounds) {}

  using Multiset = std::vector<Poly>;

  const std::set<Multiset>& run(const Poly& t, std::size_t budget) {
    auto key = std::make_pair(t, budget);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<Multiset> result;
    for (const auto& d : divisors(t)) {
      if (unit(d)) continue;
      auto kind = atom_kind(d);
      if (kind == VerdictKind::Unknown) complete_ = false;
      if (kind != VerdictKind::Proved) continue;
      Poly r = inst_.canonical(*ambient_quotient(inst_, t, d));
      if (unit(r)) {
        result.insert({d});
        continue;
      }
      if (budget <= 1) {
        complete_ = false;
        continue;
      }
      for (const auto& f : run(r, budget - 1)) {
        Multiset g = f;
        g.insert(std::upper_bound(g.begin(), g.end(), d), d);
        result.insert(std::move(g));
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  bool complete() const noexcept { return complete_; }

 private:
  const std::vector<Poly>& divisors(const Poly& t) {
    auto it = divisors_.find(t);
    if (it == divisors_.end()) {
      auto ds = divisors_in_S(inst_, t, bounds_);
      if (!ds.complete) complete_ = false;
      it = divisors_.emplace(t, std::move(ds.divisors)).first;
    }
    return it->second;
  }

  bool unit(const Poly& d) {
    auto it = units_.find(d);
    if (it == units_.end()) it = units_.emplace(d, unit_in(inst_, d)).first;
    return it->second;
  }

  VerdictKind atom_kind(const Poly& d) {
    auto it = atoms_.find(d);
    if (it == atoms_.end()) it = atoms_.emplace(d, is_atom_in_S(inst_, d, bounds_).kind).first;
    return it->second;
  }

  const SemidomainInstance& inst_;
  const Bounds& bounds_;
  bool complete_ = true;
  std::map<std::pair<Poly, std::size_t>, std::set<Multiset>> memo_;
  std::map<Poly, std::vector<Poly>> divisors_;
  std::map<Poly, bool> units_;
  std::map<Poly, VerdictKind> atoms_;
};

// Factor s in Z[x] and flip signs so every factor lands in S. Factors that
// lie in S together with their negatives absorb a parity mismatch.
std::optional<std::vector<Poly>> sign_flip_transfer(const SemidomainInstance& inst, const Poly& s) {
  const auto& fz = zx_cache().factor(s);
  std::vector<Poly> out;
  int sign = fz.unit;
  std::optional<std::size_t> flexible;
  for (const auto& p : fz.factors) {
    if (inst.contains(p)) {
      out.push_back(p);
      if (!flexible && inst.contains(-p)) flexible = out.size() - 1;
    } else {
      out.push_back(-p);
      sign = -sign;
    }
  }
  if (sign != 1) {
    if (inst.is_ambient_view()) sign = 1;
    else if (flexible) out[*flexible] = -out[*flexible];
    else return std::nullopt;
  }
  for (auto& p : out) p = inst.canonical(p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Factorizations factorizations_in_S(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds) {
  bounds.validate();
  require_nonunit(inst, s);
  FactorSearch search(inst, bounds);
  const Poly target = inst.canonical(s);
  std::set<std::vector<Poly>> found = search.run(target, bounds.max_length);
  bool complete = search.complete();

  if (inst.zx_ambient()) {
    auto transfer = sign_flip_transfer(inst, s);
    if (transfer && transfer->size() <= bounds.max_length && !found.count(*transfer)) {
      if (complete) {
        raise(Errc::InvariantViolation, "complete search for " + s.to_string() +
                                            " missed the sign-flip transfer of its ambient factorization");
      }
      found.insert(*transfer);
    }
  }

  Factorizations out;
  out.complete = complete;
  out.truncated = inst.truncated();
  for (const auto& f : found) out.items.push_back(FactorizationZ{s, f});
  std::stable_sort(out.items.begin(), out.items.end(), [](const FactorizationZ& a, const FactorizationZ& b) {
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    return a.factors < b.factors;
  });
  return out;
}

LengthSet length_set(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds) {
  auto fs = factorizations_in_S(inst, s, bounds);
  LengthSet out;
  out.complete = fs.complete;
  for (const auto& f : fs.items) out.lengths.insert(f.factors.size());
  return out;
}

Verdict associates(const SemidomainInstance& inst, const Poly& s, const Poly& t) {
  require_member(inst, s);
  require_member(inst, t);
  auto q = ambient_quotient(inst, s, t);
  if (q && inst.contains(*q) && unit_in(inst, *q)) return Verdict::proved("s = u * t for the unit u", {*q});
  return Verdict::refuted({s, t}, "s / t is not a unit of S");
}

Verdict furstenberg_witness(const SemidomainInstance& inst, const Poly& s, const Bounds& bounds) {
  require_nonunit(inst, s);
  auto ds = divisors_in_S(inst, s, bounds);
  std::sort(ds.divisors.begin(), ds.divisors.end(), dominates);
  bool decisive = ds.complete;
  for (const auto& d : ds.divisors) {
    if (unit_in(inst, d)) continue;
    auto v = is_atom_in_S(inst, d, bounds);
    if (v.is_proved()) return Verdict::proved("atom divisor", {d});
    if (v.is_unknown()) decisive = false;
  }
  if (decisive) return Verdict::refuted({s}, "no divisor of s is an atom");
  return Verdict::unknown(bounds, "no atom divisor within bounds");
}

std::string_view to_string(ChainStrategy s) noexcept {
  return s == ChainStrategy::Halving ? "halving" : "exhaustive-descent";
}

namespace {

class Descent {
 public:
  Descent(const SemidomainInstance& inst, const Bounds& bounds) : inst_(inst), bounds_(bounds) {}

  // Longest chain of proper nonunit divisors below t, capped at `cap` links.
  std::size_t depth(const Poly& t, std::size_t cap) {
    if (auto it = memo_.find(t); it != memo_.end()) {
      if (!it->second.capped || it->second.depth >= cap) return std::min(it->second.depth, cap);
    }
    std::size_t best = 0;
    std::optional<Poly> next;
    bool capped = false;
    if (cap > 0) {
      auto ds = divisors_in_S(inst_, t, bounds_);
      if (!ds.complete) complete_ = false;
      std::sort(ds.divisors.begin(), ds.divisors.end(), dominates);
      for (const auto& d : ds.divisors) {
        if (unit_in(inst_, d) || unit_in(inst_, *ambient_quotient(inst_, t, d))) continue;
        std::size_t k = 1 + depth(d, cap - 1);
        if (k > best) {
          best = k;
          next = d;
        }
        if (best == cap) {
          capped = true;
          break;
        }
      }
    } else {
      capped = true;
    }
    memo_[t] = Entry{best, capped, next};
    return best;
  }

  std::vector<Poly> chain_from(const Poly& t) const {
    std::vector<Poly> out{t};
    for (auto it = memo_.find(t); it != memo_.end() && it->second.next; it = memo_.find(*it->second.next)) {
      out.push_back(*it->second.next);
    }
    return out;
  }

  bool complete() const noexcept { return complete_; }

 private:
  struct Entry {
    std::size_t depth;
    bool capped;
    std::optional<Poly> next;
  };
  const SemidomainInstance& inst_;
  const Bounds& bounds_;
  bool complete_ = true;
  std::map<Poly, Entry> memo_;
};

}  // namespace

ChainReport accp_chain_probe(const SemidomainInstance& inst, ChainStrategy strategy, const Poly& seed,
                             const Bounds& bounds) {
  bounds.validate();
  require_member(inst, seed);
  ChainReport out;
  out.strategy = strategy;
  const std::size_t budget = bounds.chain_budget;
  if (strategy == ChainStrategy::Halving) {
    out.chain.push_back(seed);
    const Poly two = inst.constant(Rat(2));
    while (out.steps < budget) {
      const Poly& cur = out.chain.back();
      auto q = ambient_quotient(inst, cur, two);
      if (!q || !inst.contains(*q) || associates(inst, cur, *q).is_proved()) break;
      out.chain.push_back(*q);
      ++out.steps;
    }
  } else {
    Descent descent(inst, bounds);
    Poly start = inst.canonical(seed);
    out.steps = descent.depth(start, budget);
    out.chain = descent.chain_from(start);
    out.chain.resize(std::min(out.chain.size(), out.steps + 1), start);
    out.complete = descent.complete();
  }
  out.budget_reached = out.steps >= budget;
  out.stabilized = !out.budget_reached && out.complete;
  return out;
}

LengthFn make_length_fn(const SemidomainInstance& inst, const std::string& name) {
  if (name == "degree") {
    if (inst.dim() != 1) raise(Errc::InvalidArgument, "degree needs one-dimensional exponents");
    return {name, [](const Poly& g) -> std::optional<std::size_t> {
              if (g.is_zero()) return std::nullopt;
              Rat d = g.degree();
              if (!d.is_integer()) return std::nullopt;
              return static_cast<std::size_t>(*d.num().to_int64());
            }};
  }
  if (name == "omega") {
    if (!inst.zx_ambient()) raise(Errc::InvalidArgument, "omega needs Z or Z[x] as the domain of differences");
    return {name, [](const Poly& g) -> std::optional<std::size_t> {
              if (g.is_zero()) return std::nullopt;
              return zx_cache().factor(g).factors.size();
            }};
  }
  const std::string prefix = "ell2-of:";
  if (name.rfind(prefix, 0) == 0) return ell_squared(inst, make_length_fn(inst, name.substr(prefix.size())));
  raise(Errc::InvalidArgument, "unknown length function '" + name + "'");
}

LengthFn ell_squared(const SemidomainInstance& inst, const LengthFn& l) {
  return {"ell2-of:" + l.name, [inst, l](const Poly& g) -> std::optional<std::size_t> {
            Poly sq = g * g;
            if (!inst.contains(sq)) raise(Errc::SquareNotMember, "(" + g.to_string() + ")^2 is not in " + inst.id());
            return l.eval(sq);
          }};
}

LengthFnReport verify_length_function(const SemidomainInstance& inst, const LengthFn& l,
                                      const std::vector<Poly>& corpus, std::uint64_t seed) {
  LengthFnReport rep;
  rep.function = l.name;
  std::vector<Poly> members;
  std::vector<std::size_t> values;
  auto fail = [&](std::string axiom, std::vector<Poly> w, std::string detail) {
    rep.pass = false;
    rep.failed_axiom = std::move(axiom);
    rep.witnesses = std::move(w);
    rep.detail = std::move(detail);
    return rep;
  };

  for (const auto& g : corpus) {
    if (g.is_zero() || !inst.contains(g)) continue;
    auto v = l.eval(g);
    ++rep.points_checked;
    if (!v) return fail("undefined", {g}, l.name + " is undefined at " + g.to_string());
    bool unit = unit_in(inst, g);
    if ((*v == 0) != unit) {
      return fail("unit", {g}, l.name + "(" + g.to_string() + ") = " + std::to_string(*v) +
                                   (unit ? " at a unit" : " at a nonunit"));
    }
    members.push_back(g);
    values.push_back(*v);
  }

  auto check_pair = [&](std::size_t i, std::size_t j) -> bool {
    ++rep.pairs_checked;
    Poly p = members[i] * members[j];
    auto v = l.eval(p);
    if (!v) {
      fail("undefined", {members[i], members[j]}, l.name + " is undefined at " + p.to_string());
      return false;
    }
    if (*v < values[i] + values[j]) {
      fail("superadditive", {members[i], members[j]},
           l.name + "(bc) = " + std::to_string(*v) + " < " + std::to_string(values[i] + values[j]));
      return false;
    }
    return true;
  };

  const std::size_t head = std::min<std::size_t>(members.size(), 120);
  for (std::size_t i = 0; i < head; ++i) {
    for (std::size_t j = i; j < head; ++j) {
      if (!check_pair(i, j)) return rep;
    }
  }
  if (!members.empty()) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int k = 0; k < 2000; ++k) {
      if (!check_pair(pick(rng), pick(rng))) return rep;
    }
  }
  return rep;
}

}  // namespace semilab
