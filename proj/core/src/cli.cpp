#include "semilab/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "semilab/corpus.hpp"
#include "semilab/exp_monoid.hpp"
#include "semilab/factor_lab.hpp"
#include "semilab/parse.hpp"
#include "semilab/registry.hpp"
#include "semilab/report.hpp"
#include "semilab/theorems.hpp"

namespace semilab {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string instance;
  std::string element;
  std::string other;
  std::string config;
  std::string out;
  std::string csv;
  std::uint64_t seed = 1;
  Bounds bounds;
  std::vector<long> primes;
  unsigned rank = 3;
  std::string id;
  std::string spec;
  std::string op;
  std::string strategy = "halving";
  std::string fn = "degree";
  std::string property;
};

// Resolved run configuration: config file first, explicit flags on top.
struct RunConfig {
  std::string instance;
  InstanceParams params;
  Bounds bounds;
  std::uint64_t seed = 1;
};

RunConfig resolve(const Options& o, const CLI::App& sub) {
  RunConfig rc;
  if (!o.config.empty()) {
    std::ifstream f(o.config);
    if (!f) raise(Errc::IoError, "cannot read config " + o.config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      raise(Errc::SyntaxError, o.config + ": " + e.what());
    }
    try {
      if (j.contains("id")) rc.instance = j["id"].get<std::string>();
      if (j.contains("instance")) rc.instance = j["instance"].get<std::string>();
      if (j.contains("params")) {
        const auto& p = j["params"];
        if (p.contains("primes")) rc.params.primes = p["primes"].get<std::vector<long>>();
        if (p.contains("rank")) rc.params.rank = p["rank"].get<unsigned>();
      }
      if (j.contains("bounds")) {
        const auto& b = j["bounds"];
        auto set = [&](const char* key, std::size_t& field) {
          if (b.contains(key)) field = b[key].get<std::size_t>();
        };
        set("max_degree", rc.bounds.max_degree);
        set("max_height", rc.bounds.max_height);
        set("max_length", rc.bounds.max_length);
        set("max_candidates", rc.bounds.max_candidates);
        set("chain_budget", rc.bounds.chain_budget);
      }
      if (j.contains("seed")) rc.seed = j["seed"].get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
      raise(Errc::InvalidArgument, o.config + ": " + e.what());
    }
  }
  if (sub.count("--instance")) rc.instance = o.instance;
  if (sub.count("--primes")) rc.params.primes = o.primes;
  if (sub.count("--rank")) rc.params.rank = o.rank;
  if (sub.count("--seed")) rc.seed = o.seed;
  if (sub.count("--max-degree")) rc.bounds.max_degree = o.bounds.max_degree;
  if (sub.count("--max-height")) rc.bounds.max_height = o.bounds.max_height;
  if (sub.count("--max-length")) rc.bounds.max_length = o.bounds.max_length;
  if (sub.count("--max-candidates")) rc.bounds.max_candidates = o.bounds.max_candidates;
  if (sub.count("--chain-budget")) rc.bounds.chain_budget = o.bounds.chain_budget;
  rc.bounds.validate();
  return rc;
}

AnyInstance load_instance(const RunConfig& rc) {
  if (rc.instance.empty()) raise(Errc::InvalidArgument, "--instance is required");
  return make_instance(rc.instance, rc.params);
}

const std::string& require(const std::string& value, const char* flag) {
  if (value.empty()) raise(Errc::InvalidArgument, std::string(flag) + " is required");
  return value;
}

bool has_top_level_slash(std::string_view text) {
  int depth = 0;
  for (char c : text) {
    depth += c == '(' ? 1 : c == ')' ? -1 : 0;
    if (c == '/' && depth == 0) return true;
  }
  return false;
}

// Polynomial-model element; "f/1" is accepted for localized instances.
Poly poly_element(const AnyInstance& any, const std::string& text) {
  const auto& inst = any.require_poly();
  if (any.loc && has_top_level_slash(text)) {
    Fraction f = parse_fraction(text, *any.loc);
    if (!f.den.is_one()) raise(Errc::UnsupportedElement, "only elements f/1 are factored in " + any.id);
    return f.num;
  }
  return parse_element(text, inst);
}

bool use_fractions(const AnyInstance& any, const std::string& text) {
  return any.loc && (!any.poly || has_top_level_slash(text));
}

std::vector<std::string> render_all(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string render_product(const std::vector<Poly>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += " * ";
    out += f.size() > 1 ? "(" + f.to_string() + ")" : f.to_string();
  }
  return out.empty() ? "1" : out;
}

Report base_report(const std::string& query, const std::string& instance, const RunConfig& rc) {
  Report r;
  r.query = query;
  r.instance = instance;
  r.bounds = rc.bounds;
  return r;
}

void put_verdict(Report& r, const Verdict& v) {
  r.verdict = std::string(to_string(v.kind));
  r.witnesses = render_all(v.witness);
  r.add_json("reason", Json(v.reason).dump());
}

struct Outcome {
  Report report;
  std::optional<CsvTable> csv;
};

using Handler = std::function<Outcome(const Options&, const RunConfig&)>;

Outcome cmd_list(const Options&, const RunConfig& rc) {
  Report r = base_report("list-instances", "", rc);
  r.bounds.reset();
  Json arr = Json::array();
  for (const auto& info : list_instances(rc.params)) {
    r.elements.push_back(info.id);
    arr.push_back({{"id", info.id},
                   {"alias", info.alias},
                   {"description", info.description},
                   {"ambient", info.ambient},
                   {"truncated", info.truncated}});
  }
  r.add_json("instances", arr.dump());
  return {r, std::nullopt};
}

Outcome cmd_contains(const Options& o, const RunConfig& rc) {
  auto any = load_instance(rc);
  Report r = base_report("contains", any.id, rc);
  const auto& text = require(o.element, "--element");
  if (use_fractions(any, text)) {
    Fraction f = parse_fraction(text, *any.loc);
    r.verdict = any.loc->contains(f) ? "true" : "false";
    r.elements.push_back(to_string(f));
  } else {
    Poly g = parse_element(text, any.require_poly());
    r.verdict = any.poly->contains(g) ? "true" : "false";
    r.elements.push_back(g.to_string());
    r.truncated = any.poly->truncated();
  }
  return {r, std::nullopt};
}

Outcome cmd_factorize(const Options& o, const RunConfig& rc) {
  auto any = load_instance(rc);
  const auto& inst = any.require_poly();
  Poly s = poly_element(any, require(o.element, "--element"));
  auto fs = factorizations_in_S(inst, s, rc.bounds);
  Report r = base_report("factorize", any.id, rc);
  Json arr = Json::array();
  for (const auto& f : fs.items) {
    r.elements.push_back(render_product(f.factors));
    arr.push_back(render_all(f.factors));
  }
  r.complete = fs.complete;
  r.truncated = fs.truncated;
  r.add_json("factorizations", arr.dump());
  return {r, std::nullopt};
}

Outcome cmd_divisors(const Options& o, const RunConfig& rc) {
  auto any = load_instance(rc);
  const auto& inst = any.require_poly();
  Poly s = poly_element(any, require(o.element, "--element"));
  auto ds = divisors_in_S(inst, s, rc.bounds);
  Report r = base_report("divisors", any.id, rc);
  r.elements = render_all(ds.divisors);
  r.complete = ds.complete;
  r.truncated = inst.truncated();
  return {r, std::nullopt};
}

Outcome cmd_atoms(const Options& o, const RunConfig& rc) {
  auto any = load_instance(rc);
  const auto& inst = any.require_poly();
  Report r = base_report("atoms", any.id, rc);
  r.truncated = inst.truncated();
  if (!o.element.empty()) {
    put_verdict(r, is_atom_in_S(inst, poly_element(any, o.element), rc.bounds));
    return {r, std::nullopt};
  }
  // No element: list the atoms found in the corpus.
  bool complete = true;
  for (const auto& g : member_corpus(inst, rc.bounds)) {
    if (g.is_zero() || is_unit(inst, g).is_proved()) continue;
    try {
      auto v = is_atom_in_S(inst, g, rc.bounds);
      if (v.is_proved()) r.elements.push_back(g.to_string());
      if (v.is_unknown()) complete = false;
    } catch (const Error& e) {
      if (e.code() != Errc::UnsupportedElement) throw;
      complete = false;
    }
  }
  r.complete = complete;
  r.add_json("corpus", Json(corpus_descriptor(inst, rc.bounds)).dump());
  return {r, std::nullopt};
}

Outcome cmd_lengths(const Options& o, const RunConfig& rc) {
  auto any = load_instance(rc);
  const auto& inst = any.require_poly();
  Poly s = poly_element(any, require(o.element, "--element"));
  auto fs = factorizations_in_S(inst, s, rc.bounds);
  Report r = base_report("lengths", any.id, rc);
  std::set<std::size_t> lengths;
  for (const auto& f : fs.items) {
    lengths.insert(f.factors.size());
    r.elements.push_back(render_product(f.factors));
  }
  r.complete = fs.complete;
  r.truncated = fs.truncated;
  r.add_json("lengths", Json(std::vector<std::size_t>(lengths.begin(), lengths.end())).dump());
  return {r, std::nullopt};
}

Outcome cmd_check(const Options& o, const RunConfig& rc) {
  auto any = load_instance(rc);
  const auto& prop = require(o.property, "--property");
  const auto& text = require(o.element, "--element");
  Report r = base_report("check:" + prop, any.id, rc);
  if (use_fractions(any, text)) {
    Fraction f = parse_fraction(text, *any.loc);
    r.elements.push_back(to_string(f));
    if (prop == "unit") {
      put_verdict(r, i6_monomial_unit(*any.loc, f));
    } else if (prop == "semisubtractive") {
      r.verdict = any.loc->contains(f) || any.loc->contains(any.loc->neg(f)) ? "true" : "false";
    } else {
      raise(Errc::UnsupportedElement, "property '" + prop + "' is not available for fractions");
    }
    return {r, std::nullopt};
  }
  const auto& inst = any.require_poly();
  Poly s = parse_element(text, inst);
  r.elements.push_back(s.to_string());
  r.truncated = inst.truncated();
  if (prop == "unit") {
    put_verdict(r, is_unit(inst, s));
  } else if (prop == "atom") {
    put_verdict(r, is_atom_in_S(inst, s, rc.bounds));
  } else if (prop == "prime") {
    put_verdict(r, is_prime_in_S(inst, s, rc.bounds));
  } else if (prop == "additive-unit") {
    r.verdict = is_additive_invertible(inst, s) ? "true" : "false";
  } else if (prop == "semisubtractive") {
    r.verdict = semisubtractive_check(inst, s) ? "true" : "false";
  } else if (prop == "furstenberg") {
    put_verdict(r, furstenberg_witness(inst, s, rc.bounds));
  } else if (prop == "associates") {
    Poly t = parse_element(require(o.other, "--other"), inst);
    r.elements.push_back(t.to_string());
    put_verdict(r, associates(inst, s, t));
  } else if (prop == "divides") {
    Poly t = parse_element(require(o.other, "--other"), inst);
    r.elements.push_back(t.to_string());
    r.verdict = divides_in_S(inst, s, t) ? "true" : "false";
  } else {
    raise(Errc::InvalidArgument, "unknown property '" + prop + "'");
  }
  return {r, std::nullopt};
}

Outcome cmd_verify(const Options& o, const RunConfig& rc) {
  auto any = load_instance(rc);
  auto rep = verify_theorem(require(o.id, "--id"), any, rc.bounds);
  Report r = base_report("verify-theorem:" + rep.theorem, rep.instance, rc);
  r.verdict = std::string(to_string(rep.overall));
  r.witnesses = rep.witnesses;
  r.truncated = any.poly ? any.poly->truncated() : any.loc->base().truncated();
  r.add_json("theorem", Json(rep.theorem).dump());
  r.add_json("overall", Json(std::string(to_string(rep.overall))).dump());
  r.add_json("outcome", Json(rep.outcome).dump());
  r.add_json("corpus", Json(rep.corpus).dump());
  r.add_json("checked", Json(rep.checked).dump());
  r.add_json("notes", Json(rep.notes).dump());
  return {r, std::nullopt};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

Outcome cmd_monoid(const Options& o, const RunConfig& rc) {
  MonoidSpec m = MonoidSpec::parse(require(o.spec, "--spec"));
  const auto& op = require(o.op, "--op");
  Report r = base_report("monoid:" + op, m.to_string(), rc);
  r.truncated = true;
  auto element = [&]() {
    if (!o.element.empty()) return parse_exponent(o.element);
    if (m.dim() == 1) return Exp{Rat(1)};
    raise(Errc::InvalidArgument, "--element is required for this monoid");
  };
  if (op == "membership") {
    Exp q = element();
    r.elements.push_back(q.to_string());
    r.verdict = monoid_contains(m, q) ? "true" : "false";
  } else if (op == "atoms") {
    for (const auto& a : monoid_atoms(m, rc.bounds)) r.elements.push_back(a.to_string());
    r.complete = true;
  } else if (op == "factorizations" || op == "lengths") {
    Exp q = element();
    auto fs = monoid_factorizations(m, q, rc.bounds);
    Json arr = Json::array();
    std::set<std::size_t> lengths;
    for (const auto& f : fs.items) {
      std::vector<std::string> parts;
      for (const auto& p : f.parts) parts.push_back(p.to_string());
      r.elements.push_back(join(parts, " + "));
      arr.push_back(parts);
      lengths.insert(f.parts.size());
    }
    r.complete = fs.complete;
    if (op == "factorizations") r.add_json("factorizations", arr.dump());
    r.add_json("lengths", Json(std::vector<std::size_t>(lengths.begin(), lengths.end())).dump());
  } else if (op == "length-growth") {
    std::vector<long> primes = !o.primes.empty() ? o.primes : m.primes();
    if (m.kind() != MonoidKind::RecipPrimes && o.primes.empty()) {
      raise(Errc::InvalidArgument, "length-growth needs a recip-primes spec or --primes");
    }
    Exp q = o.element.empty() ? Exp{Rat(1)} : parse_exponent(o.element);
    CsvTable csv{{"primes", "max_length", "lengths", "complete"}, {}};
    Json rows = Json::array();
    bool complete = true;
    for (std::size_t k = 1; k <= primes.size(); ++k) {
      std::vector<long> prefix(primes.begin(), primes.begin() + static_cast<long>(k));
      auto mk = MonoidSpec::recip_primes(prefix);
      Bounds b = rc.bounds;
      for (long p : prefix) b.max_length = std::max(b.max_length, static_cast<std::size_t>(p));
      auto ls = monoid_length_set(mk, q, b);
      std::vector<std::string> ps, lens;
      for (long p : prefix) ps.push_back(std::to_string(p));
      for (auto n : ls.lengths) lens.push_back(std::to_string(n));
      std::size_t max_len = ls.lengths.empty() ? 0 : *ls.lengths.rbegin();
      csv.rows.push_back({join(ps, " "), std::to_string(max_len), join(lens, " "), ls.complete ? "true" : "false"});
      rows.push_back({{"primes", prefix}, {"max_length", max_len}, {"lengths", ls.lengths}, {"complete", ls.complete}});
      r.elements.push_back("{" + join(ps, ",") + "}: max L = " + std::to_string(max_len));
      complete = complete && ls.complete;
    }
    r.complete = complete;
    r.add_json("rows", rows.dump());
    return {r, csv};
  } else {
    raise(Errc::InvalidArgument, "unknown monoid op '" + op + "'");
  }
  return {r, std::nullopt};
}

Outcome cmd_chain(const Options& o, const RunConfig& rc) {
  auto any = load_instance(rc);
  const auto& inst = any.require_poly();
  ChainStrategy strategy;
  if (o.strategy == "halving") strategy = ChainStrategy::Halving;
  else if (o.strategy == "exhaustive" || o.strategy == "exhaustive-descent") strategy = ChainStrategy::ExhaustiveDescent;
  else raise(Errc::InvalidArgument, "unknown strategy '" + o.strategy + "'");
  auto rep = accp_chain_probe(inst, strategy, poly_element(any, require(o.element, "--element")), rc.bounds);
  Report r = base_report("chain-probe", any.id, rc);
  r.elements = render_all(rep.chain);
  r.complete = rep.complete;
  r.truncated = inst.truncated();
  r.verdict = rep.budget_reached ? "budget-reached" : rep.stabilized ? "stabilized" : "undecided";
  r.add_json("strategy", Json(std::string(to_string(rep.strategy))).dump());
  r.add_json("steps", Json(rep.steps).dump());
  r.add_json("stabilized", Json(rep.stabilized).dump());
  r.add_json("budget_reached", Json(rep.budget_reached).dump());
  return {r, std::nullopt};
}

Outcome cmd_length_fn(const Options& o, const RunConfig& rc) {
  auto any = load_instance(rc);
  const auto& inst = any.require_poly();
  auto l = make_length_fn(inst, o.fn);
  const bool on_ambient = o.fn.rfind("ell2-of:", 0) == 0;
  auto rep = on_ambient ? verify_length_function(inst.ambient(), l, ambient_corpus(inst, rc.bounds), rc.seed)
                        : verify_length_function(inst, l, member_corpus(inst, rc.bounds), rc.seed);
  Report r = base_report("length-fn:" + rep.function, on_ambient ? inst.ambient().id() : inst.id(), rc);
  r.verdict = rep.pass ? "PASS" : "FAIL";
  r.witnesses = render_all(rep.witnesses);
  r.complete = true;
  r.truncated = inst.truncated();
  r.add_json("failed_axiom", Json(rep.failed_axiom).dump());
  r.add_json("detail", Json(rep.detail).dump());
  r.add_json("points_checked", Json(rep.points_checked).dump());
  r.add_json("pairs_checked", Json(rep.pairs_checked).dump());
  r.add_json("corpus", Json(corpus_descriptor(inst, rc.bounds)).dump());
  return {r, std::nullopt};
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--instance", o.instance, "instance id, e.g. sign-c0c1, natz, posmonalg(2,3), hfs-loc");
  sub->add_option("--element", o.element, "element expression");
  sub->add_option("--other", o.other, "second element for associates/divides");
  sub->add_option("--config", o.config, "JSON run configuration");
  sub->add_option("--out", o.out, "also write the JSON report here");
  sub->add_option("--csv", o.csv, "write tabular output here");
  sub->add_option("--seed", o.seed, "seed for sampled pairs");
  sub->add_option("--max-degree", o.bounds.max_degree);
  sub->add_option("--max-height", o.bounds.max_height);
  sub->add_option("--max-length", o.bounds.max_length);
  sub->add_option("--max-candidates", o.bounds.max_candidates);
  sub->add_option("--chain-budget", o.bounds.chain_budget);
  sub->add_option("--primes", o.primes, "prime set for posmonalg / length-growth")->delimiter(',');
  sub->add_option("--rank", o.rank, "N for hfs-loc");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"semilab: factorization experiments in semisubtractive semidomains", "semilab"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::tuple<const char*, const char*, Handler>> commands{
      {"list-instances", "list the built-in instances", cmd_list},
      {"contains", "membership test", cmd_contains},
      {"factorize", "factorizations into atoms", cmd_factorize},
      {"divisors", "divisors up to associates", cmd_divisors},
      {"atoms", "atom test, or atoms of the corpus", cmd_atoms},
      {"lengths", "length set", cmd_lengths},
      {"check", "unit, atom, prime, additive-unit, semisubtractive, furstenberg, associates, divides", cmd_check},
      {"verify-theorem", "bounded consistency check of a theorem", cmd_verify},
      {"monoid", "exponent monoid queries", cmd_monoid},
      {"chain-probe", "ascending chain probe", cmd_chain},
      {"length-fn", "verify a length function on the corpus", cmd_length_fn},
  };
  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, help, handler] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    handlers[sub] = handler;
  }
  for (auto& [sub, _] : handlers) {
    std::string_view name = sub->get_name();
    if (name == "verify-theorem") sub->add_option("--id", o.id, "theorem id")->required();
    if (name == "monoid") {
      sub->add_option("--spec", o.spec, "recip-primes:2,3,5 or finrank:(1,1),(1,2)")->required();
      sub->add_option("--op", o.op, "membership, atoms, factorizations, lengths, length-growth")->required();
    }
    if (name == "chain-probe") sub->add_option("--strategy", o.strategy, "halving or exhaustive");
    if (name == "length-fn") sub->add_option("--fn", o.fn, "degree, omega or ell2-of:<fn>");
    if (name == "check") sub->add_option("--property", o.property)->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    RunConfig rc = resolve(o, *sub);
    Outcome res = handlers.at(sub)(o, rc);
    std::optional<std::string> json_path, csv_path;
    if (!o.out.empty()) json_path = o.out;
    if (!o.csv.empty()) csv_path = o.csv;
    emit_report(res.report, out, json_path, res.csv ? &*res.csv : nullptr, csv_path);
    return kExitOk;
  } catch (const Error& e) {
    err << "semilab: " << e.what() << "\n";
    return e.code() == Errc::InvariantViolation ? kExitInternal : kExitUsage;
  } catch (const std::exception& e) {
    err << "semilab: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace semilab
