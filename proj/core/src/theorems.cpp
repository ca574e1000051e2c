#include "semilab/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "semilab/corpus.hpp"
#include "semilab/factor_lab.hpp"
#include "semilab/zx_factor.hpp"

namespace semilab {

std::string_view to_string(Overall o) noexcept {
  switch (o) {
    case Overall::Consistent: return "Consistent";
    case Overall::Counterexample: return "Counterexample";
    case Overall::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"T2.5",   "T3.1",   "T3.3", "T3.4", "T4.2", "T4.5.1",
                                            "T4.5.2", "T4.5.3", "T5.1", "T5.2", "T5.4"};
  return ids;
}

namespace {

// Per-element work limits; the expensive checks run on a corpus prefix.
constexpr std::size_t kHeavyCap = 400;
constexpr std::size_t kProbeCap = 50;

enum class Side { Holds, Fails, Unknown };

class Run {
 public:
  Run(std::string_view id, std::string instance, std::string corpus) {
    rep_.theorem = std::string(id);
    rep_.instance = std::move(instance);
    rep_.corpus = std::move(corpus);
  }

  void count(std::size_t n = 1) { rep_.checked += n; }
  void conflict(const std::string& w) {
    counter_ = true;
    if (rep_.witnesses.size() < 20) rep_.witnesses.push_back(w);
  }
  void witness(const std::string& w) {
    if (std::find(rep_.witnesses.begin(), rep_.witnesses.end(), w) == rep_.witnesses.end() &&
        rep_.witnesses.size() < 20) {
      rep_.witnesses.push_back(w);
    }
  }
  void unknown(const std::string& why) {
    inconclusive_ = true;
    note(why);
  }
  void note(const std::string& n) {
    if (std::find(rep_.notes.begin(), rep_.notes.end(), n) == rep_.notes.end()) rep_.notes.push_back(n);
  }
  void skip() { ++skipped_; }
  void outcome(std::string o) { rep_.outcome = std::move(o); }

  ConsistencyReport finish() && {
    if (skipped_ > 0) note(std::to_string(skipped_) + " elements outside the analyzed fragment were skipped");
    rep_.overall = counter_ ? Overall::Counterexample : inconclusive_ ? Overall::Inconclusive : Overall::Consistent;
    return std::move(rep_);
  }

 private:
  ConsistencyReport rep_;
  bool counter_ = false;
  bool inconclusive_ = false;
  std::size_t skipped_ = 0;
};

bool is_unit_in(const SemidomainInstance& inst, const Poly& s) { return is_unit(inst, s).is_proved(); }

std::vector<Poly> nonunits(const SemidomainInstance& inst, const std::vector<Poly>& corpus, std::size_t cap) {
  std::vector<Poly> out;
  for (const auto& g : corpus) {
    if (out.size() >= cap) break;
    if (!g.is_zero() && inst.contains(g) && !is_unit_in(inst, g)) out.push_back(g);
  }
  return out;
}

// Monoid-algebra instances are analyzed on monomials only.
std::vector<Poly> fragment_corpus(const SemidomainInstance& inst, const Bounds& b) {
  if (!inst.monoid()) return member_corpus(inst, b);
  std::vector<Poly> out;
  for (const auto& m : inst.monoid()->smallest_members(std::min<std::size_t>(b.max_candidates, 40))) {
    for (const auto& c : {Coeff::one(inst.ring()), -Coeff::one(inst.ring())}) {
      Poly g = Poly::monomial(c, m);
      if (inst.contains(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::string render(const std::vector<Poly>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += " * ";
    out += f.size() > 1 ? "(" + f.to_string() + ")" : f.to_string();
  }
  return out.empty() ? "1" : out;
}

template <class F>
bool guarded(Run& run, F&& f) {
  try {
    f();
    return true;
  } catch (const Error& e) {
    if (e.code() != Errc::UnsupportedElement) throw;
    run.skip();
    return false;
  }
}

void require_zx(const SemidomainInstance& inst, std::string_view id) {
  if (!inst.zx_ambient()) {
    raise(Errc::UnsupportedElement, std::string(id) + " needs Z or Z[x] as the domain of differences of " + inst.id());
  }
}

ConsistencyReport t25(const AnyInstance& any, const Bounds& b) {
  const auto& loc = any.require_loc();
  Run run("T2.5", loc.id(), "fractions over " + corpus_descriptor(loc.base(), b));
  for (const auto& g : ambient_corpus(loc.base(), b)) {
    run.count();
    if (!semisubtractive_check(loc.base(), g)) run.conflict("base not semisubtractive at " + g.to_string());
  }
  for (const auto& f : fraction_corpus(loc, b)) {
    run.count();
    if (!loc.contains(f) && !loc.contains(loc.neg(f))) run.conflict("neither side contains " + to_string(f));
  }
  run.outcome("semisubtractive");
  return std::move(run).finish();
}

ConsistencyReport t31(const SemidomainInstance& S, const Bounds& b) {
  Run run("T3.1", S.id(), corpus_descriptor(S, b));
  std::vector<std::string> units;
  for (const auto& s : member_corpus(S, b)) {
    run.count();
    bool direct = inverse_in_S(S, s).has_value();
    bool characterized = S.contains(s) && S.is_ambient_unit(s);
    if (direct != characterized) {
      run.conflict(s.to_string() + (direct ? " has an inverse in S" : " is a unit of G(S) in S without inverse"));
    }
    if (direct && units.size() < 10 && std::find(units.begin(), units.end(), s.to_string()) == units.end()) {
      units.push_back(s.to_string());
    }
  }
  std::string list;
  for (const auto& u : units) list += (list.empty() ? "" : ", ") + u;
  run.outcome("units in corpus: {" + list + (units.size() == 10 ? ", ..." : "") + "}");
  return std::move(run).finish();
}

ConsistencyReport t33(const SemidomainInstance& S, const Bounds& b) {
  require_zx(S, "T3.3");
  Run run("T3.3", S.id(), corpus_descriptor(S, b));
  AtomOptions scan{false};
  std::size_t strict = 0;
  for (const auto& s : nonunits(S, member_corpus(S, b), b.max_candidates)) {
    run.count();
    const bool irreducible = is_irreducible_zx(s);
    auto v = is_atom_in_S(S, s, b, scan);
    if (v.is_unknown()) {
      run.unknown("atom scan inconclusive at " + s.to_string());
      continue;
    }
    if (irreducible && !v.is_proved()) run.conflict(s.to_string() + " is irreducible in G(S) but not an atom of S");
    if (!irreducible && v.is_proved()) {
      ++strict;
      Poly neg = -s;
      if (!S.contains(neg) || is_unit_in(S, neg) || !is_atom_in_S(S, neg, b, scan).is_refuted()) {
        run.conflict("-(" + s.to_string() + ") is not a non-atom nonunit of S");
      } else {
        run.witness(s.to_string() + " in A(S) \\ A(G), " + neg.to_string() + " not an atom");
      }
    }
  }
  run.outcome(std::to_string(strict) + " atoms outside A(G(S))");
  return std::move(run).finish();
}

Side furstenberg_side(Run& run, const SemidomainInstance& inst, const std::vector<Poly>& corpus, const Bounds& b,
                      const std::string& label) {
  Side side = Side::Holds;
  for (const auto& s : nonunits(inst, corpus, kHeavyCap)) {
    guarded(run, [&] {
      run.count();
      auto v = furstenberg_witness(inst, s, b);
      if (v.is_refuted()) {
        side = Side::Fails;
        run.witness(label + ": no atom divides " + s.to_string());
      } else if (v.is_unknown() && side == Side::Holds) {
        side = Side::Unknown;
      }
    });
  }
  return side;
}

void compare_sides(Run& run, Side s, Side g, const std::string& property) {
  if (s == Side::Unknown || g == Side::Unknown) {
    run.unknown("one side is undecided at these bounds");
    run.outcome(property + " undecided");
    return;
  }
  if (s != g) {
    run.conflict("S " + std::string(s == Side::Holds ? "satisfies" : "violates") + " " + property + ", G(S) " +
                 (g == Side::Holds ? "satisfies" : "violates") + " it");
  }
  run.outcome(s == Side::Holds ? property : "not " + property);
}

ConsistencyReport t34(const SemidomainInstance& S, const Bounds& b) {
  Run run("T3.4", S.id(), corpus_descriptor(S, b));
  const auto G = S.ambient();
  Side s = furstenberg_side(run, S, member_corpus(S, b), b, "S");
  Side g = furstenberg_side(run, G, ambient_corpus(S, b), b, "G(S)");
  compare_sides(run, s, g, "Furstenberg");
  return std::move(run).finish();
}

ConsistencyReport t42(const SemidomainInstance& S, const Bounds& b) {
  Run run("T4.2", S.id(), corpus_descriptor(S, b));
  std::size_t factored = 0;
  for (const auto& s : nonunits(S, fragment_corpus(S, b), kHeavyCap)) {
    if (!is_additive_invertible(S, s) || is_unit_in(S, -s)) continue;
    guarded(run, [&] {
      run.count();
      auto fs = factorizations_in_S(S, s, b);
      if (fs.items.empty()) return;
      ++factored;
      auto neg = factorizations_in_S(S, -s, b);
      if (!neg.items.empty()) {
        run.witness(s.to_string() + " = " + render(fs.items.front().factors) + "; " + (-s).to_string() + " = " +
                    render(neg.items.front().factors));
      } else if (neg.complete) {
        run.conflict(s.to_string() + " factors but " + (-s).to_string() + " does not");
      } else {
        run.unknown("no factorization of " + (-s).to_string() + " within bounds");
      }
    });
  }
  run.outcome(std::to_string(factored) + " factored elements of U(S)");
  return std::move(run).finish();
}

Side accp_side(Run& run, const SemidomainInstance& inst, const std::vector<Poly>& corpus, const Bounds& b,
               const std::string& label) {
  Side side = Side::Holds;
  const bool descent = inst.zx_ambient() || inst.monoid().has_value();
  for (const auto& s : nonunits(inst, corpus, kProbeCap)) {
    guarded(run, [&] {
      run.count();
      std::vector<ChainReport> probes{accp_chain_probe(inst, ChainStrategy::Halving, s, b)};
      if (descent) probes.push_back(accp_chain_probe(inst, ChainStrategy::ExhaustiveDescent, s, b));
      for (const auto& r : probes) {
        if (r.budget_reached) {
          side = Side::Fails;
          run.witness(label + ": " + std::string(to_string(r.strategy)) + " chain of " + std::to_string(r.steps) +
                      " links from " + s.to_string());
        } else if (!r.stabilized && side == Side::Holds) {
          side = Side::Unknown;
        }
      }
    });
  }
  return side;
}

ConsistencyReport t451(const SemidomainInstance& S, const Bounds& b) {
  Run run("T4.5.1", S.id(), corpus_descriptor(S, b));
  Side s = accp_side(run, S, fragment_corpus(S, b), b, "S");
  Side g = accp_side(run, S.ambient(), S.monoid() ? fragment_corpus(S.ambient(), b) : ambient_corpus(S, b), b, "G(S)");
  compare_sides(run, s, g, "ACCP");
  return std::move(run).finish();
}

ConsistencyReport t452(const SemidomainInstance& S, const Bounds& b) {
  Run run("T4.5.2", S.id(), corpus_descriptor(S, b));
  std::string name;
  if (S.zx_ambient()) name = "omega";
  else if (S.dim() == 1 && !S.monoid()) name = "degree";
  else raise(Errc::UnsupportedElement, "no built-in length function for " + S.id());
  auto l = make_length_fn(S, name);
  // omega factors (b*c)^2, so degrees are kept within the Kronecker cap.
  Bounds lb = b;
  if (name == "omega" && lb.max_degree > 2) {
    lb.max_degree = 2;
    run.note("omega checked on degree <= 2");
  }
  auto rs = verify_length_function(S, l, member_corpus(S, lb));
  auto rg = verify_length_function(S.ambient(), ell_squared(S, l), ambient_corpus(S, lb));
  run.count(rs.points_checked + rs.pairs_checked + rg.points_checked + rg.pairs_checked);
  auto describe = [](const std::string& side, const LengthFnReport& r) {
    return side + " " + r.function + ": " + (r.pass ? "PASS" : "FAIL (" + r.failed_axiom + ") " + r.detail);
  };
  run.note(describe("S", rs));
  run.note(describe("G(S)", rg));
  if (rs.pass && rg.pass) {
    run.outcome("BFS");
  } else if (rs.pass) {
    run.conflict("l is a length function on S but l^2 fails on G(S): " + rg.detail);
  } else {
    run.unknown("no length-function certificate for S");
    run.outcome("no certificate");
  }
  return std::move(run).finish();
}

Side ff_side(Run& run, const SemidomainInstance& inst, const std::vector<Poly>& corpus, const Bounds& b,
             const std::string& label) {
  Side side = Side::Holds;
  for (const auto& s : nonunits(inst, corpus, kHeavyCap)) {
    guarded(run, [&] {
      run.count();
      // Incomplete divisor sets only arise from infinite families of
      // pairwise non-associated divisors.
      if (!divisors_in_S(inst, s, b).complete) {
        side = Side::Fails;
        run.witness(label + ": infinitely many divisor classes of " + s.to_string());
      }
    });
  }
  return side;
}

ConsistencyReport t453(const SemidomainInstance& S, const Bounds& b) {
  Run run("T4.5.3", S.id(), corpus_descriptor(S, b));
  Side s = ff_side(run, S, fragment_corpus(S, b), b, "S");
  Side g = ff_side(run, S.ambient(), S.monoid() ? fragment_corpus(S.ambient(), b) : ambient_corpus(S, b), b, "G(S)");
  compare_sides(run, s, g, "FF");
  return std::move(run).finish();
}

ConsistencyReport t51(const SemidomainInstance& S, const Bounds& b) {
  require_zx(S, "T5.1");
  Run run("T5.1", S.id(), corpus_descriptor(S, b));
  const bool descends = S.additive_units() != AdditiveUnits::Proper;
  std::size_t primes = 0;
  for (const auto& p : nonunits(S, member_corpus(S, b), 150)) {
    run.count();
    const bool prime_in_g = is_irreducible_zx(p);  // Z and Z[x] are UFDs
    auto v = is_prime_in_S(S, p, b);
    if (v.is_proved()) {
      ++primes;
      if (!prime_in_g) run.conflict(p.to_string() + " is prime in S but not in G(S)");
    }
    if (descends && prime_in_g && v.is_refuted()) {
      run.conflict(p.to_string() + " is prime in G(S) but refuted in S");
    }
    if (!descends && prime_in_g && v.is_refuted()) {
      run.witness(p.to_string() + " is prime in G(S) only; witness " + render(v.witness));
    }
  }
  run.outcome(std::to_string(primes) + " primes of S found" + (descends ? "; primes descend" : ""));
  return std::move(run).finish();
}

ConsistencyReport t52(const SemidomainInstance& S, const Bounds& b) {
  Run run("T5.2", S.id(), corpus_descriptor(S, b));
  // Right side: G(S) a UFD and U(S) in {{0}, S}.
  auto ufd = S.ambient_is_ufd();
  std::optional<Poly> in_u, out_u;
  const auto corpus = fragment_corpus(S, b);
  for (const auto& s : corpus) {
    if (s.is_zero()) continue;
    if (S.contains(-s)) {
      if (!in_u) in_u = s;
    } else if (!out_u) {
      out_u = s;
    }
  }
  std::string shape = !in_u ? "{0}" : !out_u ? "S" : "proper";
  if (in_u && out_u) {
    run.witness(in_u->to_string() + " in U(S)");
    run.witness(out_u->to_string() + " not in U(S)");
  }
  run.note("U(S) = " + shape + " on the corpus; G(S) UFD: " + (ufd ? (*ufd ? "yes" : "no") : "unknown"));

  // Left side: unique factorization on the corpus. Squares of elements of
  // U(S) are added since a and -a factor differently exactly when a^2 does.
  Side left = Side::Holds;
  auto targets = nonunits(S, corpus, kHeavyCap);
  std::size_t squares = 0;
  for (const auto& s : corpus) {
    if (squares >= 20) break;
    if (!s.is_zero() && S.contains(s) && S.contains(-s) && !is_unit_in(S, s)) {
      Poly sq = s * s;
      if (std::find(targets.begin(), targets.end(), sq) == targets.end()) targets.push_back(std::move(sq));
      ++squares;
    }
  }
  for (const auto& s : targets) {
    guarded(run, [&] {
      run.count();
      auto fs = factorizations_in_S(S, s, b);
      if (fs.items.size() > 1) {
        std::string w = s.to_string();
        for (const auto& f : fs.items) w += " = " + render(f.factors);
        run.witness(w);
        left = Side::Fails;
      } else if (fs.items.empty() && fs.complete) {
        run.witness(s.to_string() + " has no factorization into atoms");
        left = Side::Fails;
      } else if (!fs.complete && left == Side::Holds) {
        left = Side::Unknown;
      }
    });
  }
  if (!ufd) {
    run.unknown("the catalog does not know whether G(S) is a UFD");
    return std::move(run).finish();
  }
  Side right = (*ufd && shape != "proper") ? Side::Holds : Side::Fails;
  if (left == Side::Unknown) {
    if (right == Side::Fails) {
      run.unknown("no decisive non-uniqueness witness at these bounds");
    } else {
      run.unknown("factorization search incomplete");
    }
    run.outcome(right == Side::Holds ? "UFS" : "not UFS");
    return std::move(run).finish();
  }
  compare_sides(run, left, right, "UFS");
  return std::move(run).finish();
}

ConsistencyReport t54(const SemidomainInstance& S, const Bounds& b) {
  require_zx(S, "T5.4");
  Run run("T5.4", S.id(), corpus_descriptor(S, b));
  auto hfd = S.ambient_is_hfd();
  AtomOptions scan{false};
  auto corpus = nonunits(S, member_corpus(S, b), kHeavyCap);
  // Right side: A(S) = S cap A(G(S)).
  bool atoms_match = true;
  std::vector<Poly> extra;
  for (const auto& s : corpus) {
    run.count();
    auto v = is_atom_in_S(S, s, b, scan);
    if (v.is_proved() && !is_irreducible_zx(s)) {
      if (atoms_match) run.witness(s.to_string() + " in A(S) \\ A(G(S))");
      atoms_match = false;
      extra.push_back(s * s);
    } else if (v.is_unknown()) {
      run.unknown("atom scan inconclusive at " + s.to_string());
    }
  }
  // Left side: every complete length set is a singleton. Squares of the
  // extra atoms are where half-factoriality breaks first.
  corpus.insert(corpus.end(), extra.begin(), extra.end());
  Side left = Side::Holds;
  for (const auto& s : corpus) {
    run.count();
    auto ls = length_set(S, s, b);
    if (ls.lengths.size() > 1) {
      if (left == Side::Holds) {
        std::string lens;
        for (auto n : ls.lengths) lens += (lens.empty() ? "" : ",") + std::to_string(n);
        run.witness("L(" + s.to_string() + ") = {" + lens + "}");
      }
      left = Side::Fails;
    } else if (!ls.complete && left == Side::Holds) {
      left = Side::Unknown;
    }
  }
  if (!hfd) {
    run.unknown("the catalog does not know whether G(S) is an HFD");
    return std::move(run).finish();
  }
  Side right = (*hfd && atoms_match) ? Side::Holds : Side::Fails;
  if (left == Side::Unknown) {
    run.unknown("length search incomplete");
    return std::move(run).finish();
  }
  compare_sides(run, left, right, "HFS");
  return std::move(run).finish();
}

}  // namespace

ConsistencyReport verify_theorem(std::string_view id, const AnyInstance& inst, const Bounds& bounds) {
  bounds.validate();
  static const std::map<std::string, std::function<ConsistencyReport(const SemidomainInstance&, const Bounds&)>,
                        std::less<>>
      poly_checks{{"T3.1", t31},   {"T3.3", t33},   {"T3.4", t34}, {"T4.2", t42}, {"T4.5.1", t451},
                  {"T4.5.2", t452}, {"T4.5.3", t453}, {"T5.1", t51}, {"T5.2", t52}, {"T5.4", t54}};
  if (id == "T2.5") return t25(inst, bounds);
  auto it = poly_checks.find(id);
  if (it == poly_checks.end()) raise(Errc::UnknownTheoremId, "unknown theorem id '" + std::string(id) + "'");
  return it->second(inst.require_poly(), bounds);
}

}  // namespace semilab
