#include "semilab/zx_factor.hpp"

#include <algorithm>
#include <map>

namespace semilab {

namespace {

// Dense coefficient vector, lowest degree first, no trailing zeros.
using Dense = std::vector<Int>;

Dense to_dense(const Poly& f, unsigned cap) {
  if (f.ring() != Ring::Int) raise(Errc::RingMismatch, "Z[x] operation on " + f.to_string());
  if (f.dim() != 1) raise(Errc::DimensionMismatch, "Z[x] operation on " + f.to_string());
  if (f.is_zero()) raise(Errc::ZeroPolynomial, "Z[x] operation on 0");
  for (const auto& t : f.terms()) {
    if (!t.exp[0].is_integer()) raise(Errc::NotRepresentable, "fractional exponent in " + f.to_string());
  }
  const Rat& deg = f.degree();
  if (deg > Rat(static_cast<long>(cap))) {
    raise(Errc::DegreeCapExceeded, "degree " + deg.to_string() + " exceeds cap " + std::to_string(cap));
  }
  Dense d(static_cast<std::size_t>(*deg.num().to_int64()) + 1);
  for (const auto& t : f.terms()) d[static_cast<std::size_t>(*t.exp[0].num().to_int64())] = t.coeff.as_int();
  return d;
}

Poly from_dense(const Dense& d) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_zero()) terms.push_back(Term{Coeff(d[i]), Exp{Rat(static_cast<long>(i))}});
  }
  return Poly::from_terms(Ring::Int, 1, std::move(terms));
}

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Int eval(const Dense& d, const Int& a) {
  Int r(0);
  for (auto it = d.rbegin(); it != d.rend(); ++it) r = r * a + *it;
  return r;
}

Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Exact division in Z[x]; nullopt when d does not divide f.
std::optional<Dense> divide(Dense f, const Dense& d) {
  if (d.size() > f.size()) return std::nullopt;
  const Int& lc = d.back();
  Dense q(f.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Int& top = f[k + d.size() - 1];
    if (top.is_zero()) continue;
    if (!divides(lc, top)) return std::nullopt;
    Int c = divexact(top, lc);
    for (std::size_t j = 0; j < d.size(); ++j) f[k + j] -= c * d[j];
    q[k] = std::move(c);
  }
  for (const auto& c : f) {
    if (!c.is_zero()) return std::nullopt;
  }
  trim(q);
  return q;
}

Int content(const Dense& d) {
  Int g(0);
  for (const auto& c : d) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Searches for a factor of degree exactly `deg` of the primitive polynomial g
// (positive leading coefficient, no integer roots at the sample points).
// Returns a factor h with positive leading coefficient, or nullopt.
std::optional<Dense> find_factor(const Dense& g, std::size_t deg) {
  const std::size_t n = g.size() - 1;
  // Interpolation points with few divisors keep the search small; the rest
  // serve as cheap filters before trial division.
  struct Sample {
    Int at;
    Int value;
    std::vector<Int> divisors;
  };
  std::vector<Sample> samples;
  const std::size_t want = std::max<std::size_t>(deg + 4, n + 2);
  for (long k = 0; samples.size() < want; ++k) {
    long a = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    Int v = eval(g, Int(a));
    if (v.is_zero()) return Dense{Int(-a), Int(1)};
    auto pos = positive_divisors(v);
    samples.push_back(Sample{Int(a), std::move(v), std::move(pos)});
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& x, const Sample& y) { return x.divisors.size() < y.divisors.size(); });
  const std::vector<Sample> pts(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(deg));
  const std::vector<Sample> checks(samples.begin() + static_cast<std::ptrdiff_t>(deg), samples.end());

  // node(x) = prod (x - a_j) over interpolation points, in dense form.
  Dense node{Int(1)};
  for (const auto& p : pts) node = mul(node, Dense{-p.at, Int(1)});
  std::vector<Int> node_at_check;
  for (const auto& c : checks) node_at_check.push_back(eval(node, c.at));

  std::vector<std::size_t> idx(deg, 0);
  std::vector<Int> vals(deg), dd(deg);
  for (const auto& lc : positive_divisors(g.back())) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      // Signed divisor choice: index i < 2*|divs| encodes (divisor, sign).
      for (std::size_t i = 0; i < deg; ++i) {
        const auto& divs = pts[i].divisors;
        const Int& mag = divs[idx[i] / 2];
        vals[i] = (idx[i] % 2) ? -mag : mag;
      }
      // Newton divided differences must be integral for an integer factor.
      bool integral = true;
      dd = vals;
      for (std::size_t level = 1; level < deg && integral; ++level) {
        for (std::size_t i = deg - 1; i >= level; --i) {
          Int num = dd[i] - dd[i - 1];
          Int den = pts[i].at - pts[i - level].at;
          if (!divides(den, num)) {
            integral = false;
            break;
          }
          dd[i] = divexact(num, den);
        }
      }
      if (integral) {
        auto newton_at = [&](const Int& x) {
          Int r = dd[deg - 1];
          for (std::size_t i = deg - 1; i-- > 0;) r = r * (x - pts[i].at) + dd[i];
          return r;
        };
        bool ok = true;
        for (std::size_t c = 0; c < checks.size() && ok; ++c) {
          Int hv = lc * node_at_check[c] + newton_at(checks[c].at);
          ok = !hv.is_zero() && divides(hv, checks[c].value);
        }
        if (ok) {
          Dense h = node;
          for (auto& c : h) c *= lc;
          Dense basis{Int(1)};
          for (std::size_t i = 0; i < deg; ++i) {
            for (std::size_t j = 0; j < basis.size(); ++j) h[j] += dd[i] * basis[j];
            basis = mul(basis, Dense{-pts[i].at, Int(1)});
          }
          trim(h);
          if (divide(g, h)) return h;
        }
      }
      std::size_t pos = 0;
      while (pos < deg && ++idx[pos] == 2 * pts[pos].divisors.size()) idx[pos++] = 0;
      if (pos == deg) break;
    }
  }
  return std::nullopt;
}

// Appends the irreducible factors of a primitive g with positive leading
// coefficient and g(0) != 0.
void split_primitive(Dense g, std::vector<Dense>& out) {
  while (g.size() > 1) {
    const std::size_t n = g.size() - 1;
    if (n == 1) {
      out.push_back(std::move(g));
      return;
    }
    std::optional<Dense> h;
    for (std::size_t d = 1; d <= n / 2 && !h; ++d) h = find_factor(g, d);
    if (!h) {
      out.push_back(std::move(g));
      return;
    }
    g = *divide(g, *h);
    out.push_back(std::move(*h));
  }
}

}  // namespace

Poly ZxFactorization::product() const {
  Poly p = Poly::constant(Coeff(Int(unit)));
  for (const auto& f : factors) p = p * f;
  return p;
}

std::pair<Int, Poly> content_primitive(const Poly& f) {
  if (f.is_zero()) raise(Errc::ZeroPolynomial, "content of 0");
  if (f.ring() != Ring::Int) raise(Errc::RingMismatch, "content of " + f.to_string());
  Int g(0);
  for (const auto& t : f.terms()) g = gcd(g, t.coeff.as_int());
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back(Term{Coeff(divexact(t.coeff.as_int(), g)), t.exp});
  return {g, Poly::from_terms(Ring::Int, f.dim(), std::move(terms))};
}

ZxFactorization kronecker_factor(const Poly& f, unsigned degree_cap) {
  Dense d = to_dense(f, degree_cap);
  ZxFactorization out;
  if (d.back().sign() < 0) {
    out.unit = -1;
    for (auto& c : d) c = -c;
  }
  Int cont = content(d);
  if (!cont.is_one()) {
    for (auto& c : d) c = divexact(c, cont);
    for (const auto& p : prime_factors(cont)) out.factors.push_back(Poly::constant(Coeff(p)));
  }
  std::size_t zeros = 0;
  while (d[zeros].is_zero()) ++zeros;
  if (zeros) {
    d.erase(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(zeros));
    for (std::size_t i = 0; i < zeros; ++i) out.factors.push_back(Poly::monomial(Coeff(Int(1)), Rat(1)));
  }
  std::vector<Dense> parts;
  split_primitive(std::move(d), parts);
  for (const auto& p : parts) out.factors.push_back(from_dense(p));
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

std::vector<Poly> divisors_from(const ZxFactorization& fz) {
  std::vector<std::pair<Poly, unsigned>> groups;
  for (const auto& p : fz.factors) {
    if (!groups.empty() && groups.back().first == p) {
      ++groups.back().second;
    } else {
      groups.emplace_back(p, 1);
    }
  }
  std::vector<Poly> out{Poly::constant(Coeff(Int(1)))};
  for (const auto& [p, e] : groups) {
    std::vector<Poly> next;
    next.reserve(out.size() * (e + 1));
    for (const auto& d : out) {
      Poly acc = d;
      next.push_back(acc);
      for (unsigned k = 0; k < e; ++k) {
        acc = acc * p;
        next.push_back(acc);
      }
    }
    out = std::move(next);
  }
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(-out[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poly> divisors_zx(const Poly& f, unsigned degree_cap) {
  return divisors_from(kronecker_factor(f, degree_cap));
}

bool is_irreducible_zx(const Poly& f, unsigned degree_cap) {
  return kronecker_factor(f, degree_cap).factors.size() == 1;
}

Factorizer::Factorizer(unsigned degree_cap, std::size_t max_entries) : cap_(degree_cap), max_entries_(max_entries) {}

const ZxFactorization& Factorizer::factor(const Poly& f) {
  if (auto it = cache_.find(f); it != cache_.end()) return it->second;
  if (cache_.size() >= max_entries_) cache_.clear();
  return cache_.emplace(f, kronecker_factor(f, cap_)).first->second;
}

bool Factorizer::is_irreducible(const Poly& f) { return factor(f).factors.size() == 1; }

}  // namespace semilab
