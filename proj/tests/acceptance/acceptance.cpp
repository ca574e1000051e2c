// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monoid_oracle.hpp"
#include "semilab/cli.hpp"
#include "semilab/corpus.hpp"
#include "semilab/exp_monoid.hpp"
#include "semilab/factor_lab.hpp"
#include "semilab/localization.hpp"
#include "semilab/parse.hpp"
#include "semilab/registry.hpp"
#include "semilab/semidomain.hpp"
#include "semilab/theorems.hpp"
#include "semilab/zx_factor.hpp"
#include "zx_oracle.hpp"

using namespace semilab;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void info(std::string s) { info_ = std::move(s); }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    if (failures_.empty()) return info_;
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::string info_;
};

Poly P(std::string_view text, const SemidomainInstance& s) { return parse_element(text, s); }

std::set<std::vector<std::string>> as_strings(const Factorizations& fs) {
  std::set<std::vector<std::string>> out;
  for (const auto& f : fs.items) {
    std::vector<std::string> v;
    for (const auto& a : f.factors) v.push_back(a.to_string());
    std::sort(v.begin(), v.end());
    out.insert(v);
  }
  return out;
}

std::string join(const std::set<std::size_t>& xs) {
  std::string out;
  for (auto x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "{" + out + "}";
}

Bounds bounds_with(std::size_t deg, std::size_t height) {
  Bounds b;
  b.max_degree = deg;
  b.max_height = height;
  return b;
}

// Criterion 1.
void atom_of_s_reducible_in_zx(Check& c) {
  auto s = SemidomainInstance::sign_c0c1();
  Poly f = P("-x^2", s);
  c.expect(is_atom_in_S(s, f, Bounds{}).is_proved(), "is_atom_in_S(-x^2) not Proved");
  c.expect(!is_irreducible_zx(f), "-x^2 reported irreducible in Z[x]");
  c.info("-x^2 is an atom of S and x*x = -(-x^2) in Z[x]");
}

// Criterion 2.
void divisibility_and_prime(Check& c) {
  auto s = SemidomainInstance::sign_c0c1();
  Poly x = P("x", s);
  c.expect(divides_in_S(s, x, P("x^4", s)), "x does not divide x^4");
  c.expect(!divides_in_S(s, x, P("-x^2", s)), "x divides -x^2");
  auto v = is_prime_in_S(s, x, Bounds{});
  c.expect(v.is_refuted(), "is_prime_in_S(x) is " + std::string(to_string(v.kind)));
  if (v.is_refuted() && v.witness.size() == 2) {
    const auto& a = v.witness[0];
    const auto& b = v.witness[1];
    c.expect(s.contains(a) && s.contains(b), "witness pair outside S");
    c.expect(divides_in_S(s, x, a * b), "x does not divide the witness product");
    c.expect(!divides_in_S(s, x, a) && !divides_in_S(s, x, b), "x divides a witness factor");
    c.info("witness pair (" + a.to_string() + ", " + b.to_string() + ")");
  } else {
    c.expect(false, "witness is not a pair");
  }
}

// Criterion 3.
void length_set_x4(Check& c) {
  auto s = SemidomainInstance::sign_c0c1();
  Poly f = P("x^4", s);
  auto ls = length_set(s, f, Bounds{});
  c.expect(ls.complete && ls.lengths == std::set<std::size_t>{2, 4}, "L(x^4) = " + join(ls.lengths));
  auto fs = factorizations_in_S(s, f, Bounds{});
  std::set<std::vector<std::string>> expected{{"-x^2", "-x^2"}, {"x", "x", "x", "x"}};
  c.expect(fs.complete && as_strings(fs) == expected, "factorizations of x^4 differ from {x^4, (-x^2)^2}");
  auto oracle_fs = oracle::factorizations(oracle::sign_c0c1, oracle::to_dense(f));
  std::set<std::vector<std::string>> from_oracle;
  for (const auto& fz : oracle_fs) {
    std::vector<std::string> v;
    for (const auto& a : fz) v.push_back(oracle::from_dense(a).to_string());
    std::sort(v.begin(), v.end());
    from_oracle.insert(v);
  }
  c.expect(from_oracle == as_strings(fs), "library and exhaustive divisor oracle disagree on Z(x^4)");
  c.info("L(x^4) = {2,4}, complete, equal to the oracle's 2 factorizations");
}

// Criterion 4.
void natq_not_atomic(Check& c) {
  auto s = SemidomainInstance::natq();
  Poly x = P("x", s);
  for (int n = 1; n <= 50; ++n) {
    if (!divides_in_S(s, s.constant(Rat(n)), x)) c.expect(false, std::to_string(n) + " does not divide x");
  }
  Bounds b;
  b.max_length = 6;
  auto fs = factorizations_in_S(s, x, b);
  c.expect(fs.items.empty() && !fs.complete, "x has a factorization or the search claims completeness");
  std::size_t witnessed = 0, tried = 0;
  for (const auto& g : member_corpus(s, bounds_with(3, 10))) {
    if (tried == 100) break;
    if (g.is_zero() || is_unit(s, g).is_proved()) continue;
    ++tried;
    auto v = furstenberg_witness(s, g, Bounds{});
    if (v.is_proved() && !v.witness.empty() && divides_in_S(s, v.witness.front(), g) &&
        is_atom_in_S(s, v.witness.front(), Bounds{}).is_proved()) {
      ++witnessed;
    }
  }
  c.expect(tried == 100 && witnessed == 100, std::to_string(witnessed) + "/" + std::to_string(tried) +
                                                  " nonunits with an atom divisor");
  c.info("n | x for n <= 50; Z(x) empty and incomplete; 100/100 atom divisors");
}

// Criterion 5.
void accp_probes(Check& c) {
  auto q = SemidomainInstance::natq();
  auto rep = accp_chain_probe(q, ChainStrategy::Halving, P("x", q), Bounds{});
  c.expect(rep.budget_reached && rep.steps == 20 && !rep.stabilized, "halving chain did not reach budget 20");
  for (std::size_t i = 0; i < rep.chain.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.chain.size(); ++j) {
      if (!associates(q, rep.chain[i], rep.chain[j]).is_refuted()) {
        c.expect(false, "links " + std::to_string(i) + " and " + std::to_string(j) + " are associates");
      }
    }
  }
  auto n = SemidomainInstance::nat();
  std::size_t worst = 0;
  for (int seed = 1; seed <= 100; ++seed) {
    auto r = accp_chain_probe(n, ChainStrategy::ExhaustiveDescent, n.constant(Rat(seed)), Bounds{});
    worst = std::max(worst, r.steps);
    if (!r.stabilized || r.steps > 5) c.expect(false, "N_0 chain from " + std::to_string(seed) + " did not stabilize");
  }
  c.info("halving chain has 20 non-associate links; N_0 chains stabilize within " + std::to_string(worst) + " steps");
}

// Criterion 6.
void ordered_domain_example(Check& c) {
  auto s = SemidomainInstance::natz();
  auto fs = factorizations_in_S(s, P("x^2", s), Bounds{});
  std::set<std::vector<std::string>> expected{{"-x", "-x"}, {"x", "x"}};
  c.expect(fs.complete && as_strings(fs) == expected, "Z(x^2) differs from {x*x, (-x)*(-x)}");
  c.expect(associates(s, P("x", s), P("-x", s)).is_refuted(), "x and -x reported associated");
  std::size_t complete = 0;
  for (const auto& g : member_corpus(s, bounds_with(3, 4))) {
    if (g.is_zero() || is_unit(s, g).is_proved()) continue;
    auto ls = length_set(s, g, Bounds{});
    if (!ls.complete) continue;
    ++complete;
    if (ls.lengths.size() != 1) c.expect(false, "L(" + g.to_string() + ") = " + join(ls.lengths));
  }
  auto rep = verify_theorem("T5.2", make_instance("natz"), Bounds{});
  c.expect(rep.overall == Overall::Consistent && rep.outcome == "not UFS",
           "unique-factorization check: " + std::string(to_string(rep.overall)) + " / " + rep.outcome);
  c.info(std::to_string(complete) + " complete length sets, all singletons; not UFS");
}

// Criterion 7.
void gauss_surrogate(Check& c) {
  auto s = SemidomainInstance::posq_gauss();
  auto rep = verify_length_function(s, make_length_fn(s, "degree"), member_corpus(s, bounds_with(3, 4)));
  c.expect(rep.pass, "degree is not a length function: " + rep.detail);
  Bounds b;
  b.max_height = 3;
  auto ds = divisors_in_S(s, P("x^2", s), b);
  std::vector<Poly> classes;
  for (const auto& d : ds.divisors) {
    if (d.height() > Int(3)) continue;
    bool fresh = std::none_of(classes.begin(), classes.end(),
                              [&](const Poly& e) { return !associates(s, d, e).is_refuted(); });
    if (fresh) classes.push_back(d);
  }
  c.expect(classes.size() >= 10, std::to_string(classes.size()) + " non-associated divisors of x^2");
  c.info("degree PASS on " + std::to_string(rep.points_checked) + " points; " + std::to_string(classes.size()) +
         " pairwise non-associated divisors of x^2 at height <= 3");
}

// Criterion 8.
void recip_primes(Check& c) {
  auto m23 = MonoidSpec::recip_primes({2, 3});
  c.expect(monoid_contains(m23, Exp{Rat(5, 6)}), "5/6 not in M_{2,3}");
  c.expect(!monoid_contains(m23, Exp{Rat(1, 6)}), "1/6 in M_{2,3}");
  auto i5a = SemidomainInstance::posmonalg({2, 3});
  auto i5b = SemidomainInstance::posmonalg({2, 3, 5});
  auto la = length_set(i5a, P("x", i5a), Bounds{});
  auto lb = length_set(i5b, P("x", i5b), Bounds{});
  c.expect(la.lengths == std::set<std::size_t>{2, 3}, "L(x) for P={2,3} is " + join(la.lengths));
  c.expect(lb.lengths == std::set<std::size_t>{2, 3, 5}, "L(x) for P={2,3,5} is " + join(lb.lengths));

  auto csv = std::filesystem::temp_directory_path() / "semilab_length_growth.csv";
  std::ostringstream out, err;
  int code = run_command({"monoid", "--spec", "recip-primes:2,3,5,7,11,13", "--op", "length-growth", "--csv",
                          csv.string()},
                         out, err);
  c.expect(code == 0, "length-growth exited " + std::to_string(code) + ": " + err.str());
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  const std::vector<long> primes{2, 3, 5, 7, 11, 13};
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string ps, max_len;
    std::getline(ss, ps, ',');
    std::getline(ss, max_len, ',');
    if (rows < primes.size() && max_len != std::to_string(primes[rows])) {
      c.expect(false, "row " + std::to_string(rows) + " max L = " + max_len);
    }
    ++rows;
  }
  c.expect(rows == primes.size(), std::to_string(rows) + " CSV rows");
  std::filesystem::remove(csv);
  c.info("max L(x) = max(P) for all 6 prefixes of {2,3,5,7,11,13}");
}

// Criterion 9.
void half_factorial_localization(Check& c) {
  auto any = make_instance("hfs-loc");
  const auto& s = *any.poly;
  auto fs = factorizations_in_S(s, P("x^(2,4)", s), Bounds{});
  std::set<std::vector<Exp>> patterns;
  bool all_two = fs.complete && !fs.items.empty();
  for (const auto& f : fs.items) {
    all_two = all_two && f.factors.size() == 2;
    std::vector<Exp> v;
    for (const auto& a : f.factors) v.push_back(a.leading_term().exp);
    std::sort(v.begin(), v.end());
    patterns.insert(v);
  }
  c.expect(all_two, "factorizations of x^(2,4) are not all of length 2");
  c.expect(patterns.size() == 2, std::to_string(patterns.size()) + " exponent patterns");
  c.expect(fs.items.size() == 2, std::to_string(fs.items.size()) +
                                     " factorizations of x^(2,4)/1 (sign variants (-a)(-b) are distinct atoms), "
                                     "expected exactly 2");
  std::vector<Poly> atoms{P("x^(1,1)", s), P("x^(1,2)", s), P("x^(1,3)", s)};
  for (const auto& a : atoms) c.expect(is_atom_in_S(s, a, Bounds{}).is_proved(), a.to_string() + " not an atom");
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      c.expect(associates(s, atoms[i], atoms[j]).is_refuted(), "atoms " + std::to_string(i) + "," +
                                                                     std::to_string(j) + " associated");
  std::size_t checked = 0;
  Bounds box;
  box.max_length = 5;
  for (int k = 1; k <= 5; ++k) {
    for (int t = k; t <= std::min(15, 3 * k); ++t) {
      for (const char* sign : {"", "-"}) {
        Poly g = P(std::string(sign) + "x^(" + std::to_string(k) + "," + std::to_string(t) + ")", s);
        auto ls = length_set(s, g, box);
        if (!ls.complete) continue;
        ++checked;
        if (ls.lengths.size() != 1) c.expect(false, "L(" + g.to_string() + ") = " + join(ls.lengths));
      }
    }
  }
  auto rep = verify_theorem("T5.2", any, Bounds{});
  c.expect(rep.outcome == "not UFS", "unique-factorization outcome " + rep.outcome);
  c.info("two length-2 factorization patterns; " + std::to_string(checked) +
         " complete fragment length sets are singletons; not UFS");
}

// Criterion 10.
void lemma_sweeps(Check& c) {
  auto run = [&](const char* id, const char* inst) {
    auto rep = verify_theorem(id, make_instance(inst), Bounds{});
    if (rep.overall != Overall::Consistent) {
      std::string w = rep.witnesses.empty() ? "" : " (" + rep.witnesses.front() + ")";
      c.expect(false, std::string(id) + " on " + inst + ": " + std::string(to_string(rep.overall)) + w);
    }
    return rep.checked;
  };
  std::size_t total = 0;
  for (const char* inst : {"I0", "I1", "I2", "I3", "I4", "I5"}) total += run("T3.1", inst);
  total += run("T3.3", "I1");
  total += run("T2.5", "nat-dyadic");
  total += run("T2.5", "I6");
  total += run("T4.2", "I1");
  c.info(std::to_string(total) + " elements checked across 10 sweeps");
}

// Criterion 11.
void oracle_equivalence(Check& c) {
  std::size_t atoms = 0, facts = 0;
  Bounds b;
  b.max_degree = 4;
  b.max_height = 6;
  b.max_length = 8;
  const std::vector<std::pair<SemidomainInstance, oracle::Member>> cases{
      {SemidomainInstance::sign_c0c1(), oracle::sign_c0c1},
      {SemidomainInstance::natz(), oracle::natz},
  };
  for (const auto& [s, member] : cases) {
    std::vector<std::int64_t> coeffs(5, -6);
    bool done = false;
    while (!done) {
      oracle::Dense d(coeffs.begin(), coeffs.end());
      while (!d.empty() && d.back() == 0) d.pop_back();
      if (!d.empty() && member(d)) {
        Poly f = oracle::from_dense(d);
        if (s.contains(f) != member(d)) c.expect(false, "membership differs at " + f.to_string());
        if (!f.is_one()) {
          bool lib = is_atom_in_S(s, f, b).is_proved();
          if (lib != oracle::is_atom(member, d)) c.expect(false, s.id() + ": atom verdict differs at " + f.to_string());
          ++atoms;
          auto fs = factorizations_in_S(s, f, b);
          std::set<std::vector<std::string>> from_oracle;
          for (const auto& fz : oracle::factorizations(member, d)) {
            std::vector<std::string> v;
            for (const auto& a : fz) v.push_back(oracle::from_dense(a).to_string());
            std::sort(v.begin(), v.end());
            from_oracle.insert(v);
          }
          if (!fs.complete || as_strings(fs) != from_oracle) {
            c.expect(false, s.id() + ": factorizations differ at " + f.to_string());
          }
          ++facts;
        }
      }
      std::size_t i = 0;
      while (i < coeffs.size() && coeffs[i] == 6) coeffs[i++] = -6;
      if (i == coeffs.size()) done = true;
      else ++coeffs[i];
    }
  }
  std::size_t monoid_checked = 0;
  const std::vector<std::vector<std::int64_t>> subsets{{2}, {3}, {5}, {2, 3}, {2, 5}, {3, 5}, {2, 3, 5}};
  for (const auto& ps : subsets) {
    std::int64_t total = 1;
    for (auto p : ps) total *= p;
    auto m = MonoidSpec::recip_primes(std::vector<long>(ps.begin(), ps.end()));
    for (std::int64_t n = 0; n <= 3 * total; ++n) {
      bool lib = monoid_contains(m, Exp{Rat(n, total)});
      if (lib != oracle::recip_representable(ps, n)) {
        c.expect(false, "membership of " + std::to_string(n) + "/" + std::to_string(total) + " differs");
      }
      ++monoid_checked;
    }
  }
  c.info(std::to_string(atoms) + " atom verdicts, " + std::to_string(facts) + " factorization sets, " +
         std::to_string(monoid_checked) + " monoid memberships agree");
}

// Criterion 12.
void naturals_baseline(Check& c) {
  auto n = SemidomainInstance::nat();
  auto fs = factorizations_in_S(n, n.constant(Rat(12)), Bounds{});
  c.expect(fs.complete && as_strings(fs) == std::set<std::vector<std::string>>{{"2", "2", "3"}}, "Z(12) != {2*2*3}");
  auto rep = verify_theorem("T5.2", make_instance("nat"), Bounds{});
  c.expect(rep.overall == Overall::Consistent && rep.outcome == "UFS",
           "unique-factorization check: " + std::string(to_string(rep.overall)) + " / " + rep.outcome);
  c.info("Z(12) = {2*2*3}; UFS");
}

}  // namespace

int main() {
  using Fn = void (*)(Check&);
  const std::vector<std::pair<const char*, Fn>> criteria{
      {"-x^2 is an atom of S but reducible in Z[x]", atom_of_s_reducible_in_zx},
      {"x | x^4, x does not divide -x^2, x not prime", divisibility_and_prime},
      {"L(x^4) = {2,4} with exactly two factorizations", length_set_x4},
      {"N_0 + xQ[x]: n | x, x unfactorable, Furstenberg witnesses", natq_not_atomic},
      {"ACCP probes: halving chain and N_0 descent", accp_probes},
      {"N_0 + xZ[x]: x*x vs (-x)*(-x), half-factorial corpus, not UFS", ordered_domain_example},
      {"Gaussian surrogate: degree length function, many divisors of x^2", gauss_surrogate},
      {"reciprocal-prime monoid algebra: membership, length sets, growth", recip_primes},
      {"localized monoid algebra: two factorizations of x^(2,4)/1, HFS, not UFS", half_factorial_localization},
      {"lemma sweeps: units, atoms, localization, atomicity", lemma_sweeps},
      {"oracle equivalence on Z[x] ambients and reciprocal-prime monoids", oracle_equivalence},
      {"N_0 baseline: Z(12) and UFS", naturals_baseline},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failed += c.ok() ? 0 : 1;
    std::printf("%s criterion %2zu: %s | %s [%lld ms]\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].first,
                c.detail().c_str(), static_cast<long long>(ms));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
