#include "semilab/exp_monoid.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace semilab {

struct MonoidSpec::Data {
  MonoidKind kind = MonoidKind::RecipPrimes;
  std::size_t dim = 1;
  std::vector<Exp> gens;
  std::vector<Exp> atoms;

  // RecipPrimes: q is encoded as the integer a = q * N, and membership is
  // decided against the Apery set of <N/p> with respect to its smallest
  // generator.
  std::vector<long> primes;
  long N = 1;
  std::vector<long> int_gens;
  std::vector<long> apery;

  // FinRank: generators as integer vectors.
  std::vector<std::array<long, 2>> vec_gens;
};

namespace {

constexpr long kNoPath = std::numeric_limits<long>::max();

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long to_long(const Int& v) {
  auto x = v.to_int64();
  if (!x || *x > (1L << 40)) raise(Errc::BudgetExceeded, "exponent coordinate " + v.to_string() + " is too large");
  return static_cast<long>(*x);
}

std::vector<long> apery_set(const std::vector<long>& gens) {
  const long m = gens.front();
  std::vector<long> dist(static_cast<std::size_t>(m), kNoPath);
  using Item = std::pair<long, long>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (long g : gens) {
      long nr = (r + g) % m;
      if (d + g < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = d + g;
        pq.emplace(d + g, nr);
      }
    }
  }
  return dist;
}

bool recip_member_int(const MonoidSpec::Data& d, long a) {
  if (a < 0) return false;
  long m = d.int_gens.front();
  long best = d.apery[static_cast<std::size_t>(a % m)];
  return best != kNoPath && a >= best;
}

// q * N as an integer, or nullopt when q's denominator does not divide N.
std::optional<long> recip_encode(const MonoidSpec::Data& d, const Exp& q) {
  const Rat& r = q[0];
  if (!divides(r.den(), Int(d.N))) return std::nullopt;
  return to_long(r.num() * divexact(Int(d.N), r.den()));
}

Exp recip_decode(const MonoidSpec::Data& d, long a) { return Exp{Rat(Int(a), Int(d.N))}; }

std::optional<std::array<long, 2>> vec_encode(const MonoidSpec::Data& d, const Exp& q) {
  std::array<long, 2> v{0, 0};
  for (std::size_t i = 0; i < d.dim; ++i) {
    if (!q[i].is_integer()) return std::nullopt;
    v[i] = to_long(q[i].num());
  }
  return v;
}

Exp vec_decode(const MonoidSpec::Data& d, const std::array<long, 2>& v) {
  if (d.dim == 1) return Exp{Rat(v[0])};
  return Exp{Rat(v[0]), Rat(v[1])};
}

class VecMember {
 public:
  explicit VecMember(const MonoidSpec::Data& d) : d_(d) {}

  bool operator()(const std::array<long, 2>& v) {
    if (v[0] < 0 || v[1] < 0) return false;
    if (v[0] == 0) return v[1] == 0;
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    bool ok = false;
    for (const auto& g : d_.vec_gens) {
      if ((*this)({v[0] - g[0], v[1] - g[1]})) {
        ok = true;
        break;
      }
    }
    memo_.emplace(v, ok);
    return ok;
  }

 private:
  const MonoidSpec::Data& d_;
  std::map<std::array<long, 2>, bool> memo_;
};

void check_dim(const MonoidSpec::Data& d, const Exp& q) {
  if (q.dim() != d.dim) {
    raise(Errc::DimensionMismatch, "exponent " + q.to_string() + " has dimension " + std::to_string(q.dim()) +
                                       ", monoid has " + std::to_string(d.dim));
  }
}

}  // namespace

MonoidSpec MonoidSpec::recip_primes(std::vector<long> primes) {
  if (primes.empty()) raise(Errc::InvalidArgument, "recip-primes needs at least one prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  auto d = std::make_shared<Data>();
  d->kind = MonoidKind::RecipPrimes;
  d->dim = 1;
  for (long p : primes) {
    if (!is_prime(p)) raise(Errc::InvalidArgument, std::to_string(p) + " is not prime");
    if (d->N > (1L << 40) / p) raise(Errc::BudgetExceeded, "prime product too large");
    d->N *= p;
  }
  d->primes = primes;
  for (long p : primes) d->int_gens.push_back(d->N / p);
  std::sort(d->int_gens.begin(), d->int_gens.end());
  d->apery = apery_set(d->int_gens);
  for (long g : d->int_gens) d->gens.push_back(recip_decode(*d, g));
  // N/p is coprime to p while every other generator is a multiple of p, so
  // each generator is minimal.
  d->atoms = d->gens;
  return MonoidSpec(std::move(d));
}

MonoidSpec MonoidSpec::fin_rank(std::vector<Exp> generators) {
  if (generators.empty()) raise(Errc::InvalidArgument, "finrank needs at least one generator");
  auto d = std::make_shared<Data>();
  d->kind = MonoidKind::FinRank;
  d->dim = generators.front().dim();
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    if (g.dim() != d->dim) raise(Errc::DimensionMismatch, "generators of mixed dimension");
    auto v = vec_encode(*d, g);
    if (!v) raise(Errc::InvalidArgument, "generator " + g.to_string() + " is not integral");
    if ((*v)[0] < 1) raise(Errc::InvalidArgument, "generator " + g.to_string() + " needs a positive first coordinate");
    d->vec_gens.push_back(*v);
  }
  d->gens = generators;
  MonoidSpec m(d);
  for (const auto& g : generators) {
    if (m.is_atom(g)) d->atoms.push_back(g);
  }
  return m;
}

MonoidSpec MonoidSpec::fin_rank_n(unsigned n) {
  if (n == 0) raise(Errc::InvalidArgument, "finrank needs n >= 1");
  std::vector<Exp> gens;
  for (unsigned i = 1; i <= n; ++i) gens.push_back(Exp{Rat(1), Rat(static_cast<long>(i))});
  return fin_rank(std::move(gens));
}

MonoidSpec MonoidSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) raise(Errc::SyntaxError, "monoid spec needs 'kind:params'");
  std::string_view kind = text.substr(0, colon);
  std::string body(text.substr(colon + 1));
  auto parse_long = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      raise(Errc::SyntaxError, "bad integer '" + s + "' in monoid spec");
    }
  };
  if (kind == "recip-primes") {
    std::vector<long> primes;
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      if (comma == std::string::npos) comma = body.size();
      primes.push_back(parse_long(body.substr(start, comma - start)));
      start = comma + 1;
    }
    return recip_primes(std::move(primes));
  }
  if (kind == "finrank") {
    if (!body.empty() && body.front() != '(') return fin_rank_n(static_cast<unsigned>(parse_long(body)));
    std::vector<Exp> gens;
    std::size_t pos = 0;
    while (pos < body.size()) {
      if (body[pos] != '(') raise(Errc::SyntaxError, "expected '(' in finrank spec");
      auto close = body.find(')', pos);
      if (close == std::string::npos) raise(Errc::SyntaxError, "unbalanced '(' in finrank spec");
      std::string inner = body.substr(pos + 1, close - pos - 1);
      std::vector<Rat> coords;
      std::size_t s = 0;
      while (s <= inner.size()) {
        auto comma = inner.find(',', s);
        if (comma == std::string::npos) comma = inner.size();
        coords.emplace_back(parse_long(inner.substr(s, comma - s)));
        s = comma + 1;
      }
      gens.emplace_back(coords);
      pos = close + 1;
      if (pos < body.size()) {
        if (body[pos] != ',') raise(Errc::SyntaxError, "expected ',' between finrank generators");
        ++pos;
      }
    }
    return fin_rank(std::move(gens));
  }
  raise(Errc::SyntaxError, "unknown monoid kind '" + std::string(kind) + "'");
}

MonoidKind MonoidSpec::kind() const noexcept { return d_->kind; }
std::size_t MonoidSpec::dim() const noexcept { return d_->dim; }
const std::vector<long>& MonoidSpec::primes() const noexcept { return d_->primes; }
const std::vector<Exp>& MonoidSpec::generators() const noexcept { return d_->gens; }
const std::vector<Exp>& MonoidSpec::atoms() const noexcept { return d_->atoms; }

std::string MonoidSpec::to_string() const {
  std::string out;
  if (d_->kind == MonoidKind::RecipPrimes) {
    out = "recip-primes:";
    for (std::size_t i = 0; i < d_->primes.size(); ++i) out += (i ? "," : "") + std::to_string(d_->primes[i]);
    return out;
  }
  out = "finrank:";
  for (std::size_t i = 0; i < d_->gens.size(); ++i) {
    std::string g = d_->gens[i].to_string();
    if (d_->dim == 1) g = "(" + g + ")";
    out += (i ? "," : "") + g;
  }
  return out;
}

bool MonoidSpec::contains(const Exp& q) const {
  check_dim(*d_, q);
  if (d_->kind == MonoidKind::RecipPrimes) {
    auto a = recip_encode(*d_, q);
    return a && recip_member_int(*d_, *a);
  }
  auto v = vec_encode(*d_, q);
  if (!v) return false;
  VecMember member(*d_);
  return member(*v);
}

std::vector<Exp> MonoidSpec::splits(const Exp& q) const {
  check_dim(*d_, q);
  if (!contains(q)) raise(Errc::NotMember, q.to_string() + " is not in " + to_string());
  std::vector<Exp> out;
  if (d_->kind == MonoidKind::RecipPrimes) {
    long a = *recip_encode(*d_, q);
    for (long b = 0; b <= a; ++b) {
      if (recip_member_int(*d_, b) && recip_member_int(*d_, a - b)) out.push_back(recip_decode(*d_, b));
    }
    return out;
  }
  auto v = *vec_encode(*d_, q);
  VecMember member(*d_);
  const long top1 = d_->dim == 2 ? v[1] : 0;
  for (long k = 0; k <= v[0]; ++k) {
    for (long s = 0; s <= top1; ++s) {
      std::array<long, 2> w{k, s};
      if (member(w) && member({v[0] - k, v[1] - s})) out.push_back(vec_decode(*d_, w));
    }
  }
  return out;
}

bool MonoidSpec::is_atom(const Exp& q) const {
  if (q.is_zero() || !contains(q)) return false;
  // Only the trivial splits 0 + q and q + 0 may exist.
  return splits(q).size() == 2;
}

std::vector<Exp> MonoidSpec::smallest_members(std::size_t count) const {
  std::vector<Exp> out;
  if (d_->kind == MonoidKind::RecipPrimes) {
    for (long a = 0; out.size() < count; ++a) {
      if (recip_member_int(*d_, a)) out.push_back(recip_decode(*d_, a));
    }
    return out;
  }
  // Members grouped by first coordinate; each layer is finite because every
  // generator has a positive first coordinate.
  std::vector<std::set<long>> layers{{0}};
  out.push_back(Exp(d_->dim));
  for (long k = 1; out.size() < count; ++k) {
    std::set<long> layer;
    for (const auto& g : d_->vec_gens) {
      if (g[0] > k) continue;
      for (long s : layers[static_cast<std::size_t>(k - g[0])]) layer.insert(s + g[1]);
    }
    for (long s : layer) {
      if (out.size() == count) break;
      out.push_back(vec_decode(*d_, {k, s}));
    }
    layers.push_back(std::move(layer));
  }
  return out;
}

std::size_t MonoidSpec::max_factorization_length(const Exp& q) const {
  check_dim(*d_, q);
  if (d_->kind == MonoidKind::RecipPrimes) {
    auto a = recip_encode(*d_, q);
    if (!a) return 0;
    return static_cast<std::size_t>(*a / d_->int_gens.front());
  }
  auto v = vec_encode(*d_, q);
  if (!v) return 0;
  long min_first = d_->vec_gens.front()[0];
  for (const auto& g : d_->vec_gens) min_first = std::min(min_first, g[0]);
  return static_cast<std::size_t>((*v)[0] / min_first);
}

bool monoid_contains(const MonoidSpec& m, const Exp& q) { return m.contains(q); }

std::vector<Exp> monoid_atoms(const MonoidSpec& m, const Bounds& /*bounds*/) { return m.atoms(); }

MonoidFactorizations monoid_factorizations(const MonoidSpec& m, const Exp& q, const Bounds& bounds) {
  if (!m.contains(q)) raise(Errc::NotMember, q.to_string() + " is not in " + m.to_string());
  MonoidFactorizations out;
  const auto& atoms = m.atoms();
  std::vector<Exp> stack;
  // Depth-first over atoms in nondecreasing index order, so each multiset is
  // produced exactly once.
  std::function<void(const Exp&, std::size_t)> dfs = [&](const Exp& rest, std::size_t from) {
    if (rest.is_zero()) {
      if (!stack.empty()) out.items.push_back(MonoidFactorization{stack});
      return;
    }
    if (stack.size() == bounds.max_length) {
      out.complete = false;
      return;
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      auto next = rest.checked_sub(atoms[i]);
      if (!next || !m.contains(*next)) continue;
      stack.push_back(atoms[i]);
      dfs(*next, i);
      stack.pop_back();
    }
  };
  dfs(q, 0);
  std::sort(out.items.begin(), out.items.end());
  return out;
}

LengthSet monoid_length_set(const MonoidSpec& m, const Exp& q, const Bounds& bounds) {
  auto fs = monoid_factorizations(m, q, bounds);
  LengthSet ls;
  ls.complete = fs.complete;
  for (const auto& f : fs.items) ls.lengths.insert(f.parts.size());
  return ls;
}

}  // namespace semilab
