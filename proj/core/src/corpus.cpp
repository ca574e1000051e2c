#include "semilab/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace semilab {

std::vector<Coeff> coefficient_alphabet(Ring ring, std::size_t h) {
  const long hl = static_cast<long>(h);
  std::vector<Rat> rats;
  if (ring == Ring::Int) {
    std::vector<Coeff> out{Coeff(Int(0))};
    for (long v = 1; v <= hl; ++v) {
      out.emplace_back(Int(-v));
      out.emplace_back(Int(v));
    }
    return out;
  }
  for (long q = 1; q <= hl; ++q) {
    for (long p = -hl; p <= hl; ++p) {
      if (std::gcd(p, q) == 1) rats.emplace_back(Int(p), Int(q));
    }
  }
  std::vector<Coeff> out;
  if (ring == Ring::Rat) {
    for (auto& r : rats) out.emplace_back(r);
  } else {
    for (const auto& a : rats) {
      for (const auto& b : rats) out.emplace_back(GaussRat(a, b));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Coeff& a, const Coeff& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

std::vector<Exp> ambient_support(const SemidomainInstance& inst, std::size_t n) {
  if (inst.monoid()) return inst.monoid()->smallest_members(n);
  std::vector<Exp> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(Exp{Rat(static_cast<long>(k))});
  return out;
}

namespace {

// One position's alphabet, sorted by height, with prefix ends per height.
struct Column {
  std::vector<Coeff> values;
  std::vector<std::size_t> end;  // end[h] = number of values with height <= h

  Column(std::vector<Coeff> v, std::size_t max_h) : values(std::move(v)), end(max_h + 1, 0) {
    for (std::size_t h = 0; h <= max_h; ++h) {
      end[h] = static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [&](const Coeff& c) {
        return height(c) <= Int(static_cast<long>(h));
      }));
    }
  }
};

struct Columns {
  Column constant;
  Column general;
};

Columns make_columns(const SemidomainInstance& inst, std::size_t max_h) {
  auto full = coefficient_alphabet(inst.ring(), max_h);
  std::vector<Coeff> constant;
  for (const auto& c : full) {
    bool ok = true;
    if (inst.kind() == InstanceKind::NatQ) ok = c.as_rat().is_integer();
    if (inst.kind() == InstanceKind::PosQGauss) ok = c.as_gauss().is_real();
    if (ok) constant.push_back(c);
  }
  return {Column(std::move(constant), max_h), Column(std::move(full), max_h)};
}

std::size_t max_degree_for(const SemidomainInstance& inst, const Bounds& b) {
  return inst.kind() == InstanceKind::Nat ? 0 : b.max_degree;
}

Poly assemble(const SemidomainInstance& inst, const std::vector<Exp>& support, const std::vector<const Coeff*>& cs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!cs[i]->is_zero()) terms.push_back(Term{*cs[i], support[i]});
  }
  return Poly::from_terms(inst.ring(), inst.dim(), std::move(terms));
}

}  // namespace

void for_each_ambient(const SemidomainInstance& inst, const Bounds& bounds,
                      const std::function<bool(const Poly&)>& visit) {
  bounds.validate();
  const std::size_t max_d = max_degree_for(inst, bounds);
  const std::size_t max_h = bounds.max_height;
  const Columns cols = make_columns(inst, max_h);
  const auto support = ambient_support(inst, max_d + 1);
  std::size_t visited = 0;

  for (std::size_t diag = 1; diag <= max_d + max_h; ++diag) {
    for (std::size_t d = 0; d <= std::min(max_d, diag - 1); ++d) {
      const std::size_t h = diag - d;
      if (h > max_h) continue;
      // Tuples of exact height h are split by the first position j whose
      // coefficient has height exactly h.
      for (std::size_t j = 0; j <= d; ++j) {
        std::vector<std::size_t> lo(d + 1), hi(d + 1);
        bool empty = false;
        for (std::size_t i = 0; i <= d; ++i) {
          const Column& col = i == 0 ? cols.constant : cols.general;
          if (i < j) {
            lo[i] = 0;
            hi[i] = col.end[h - 1];
          } else if (i == j) {
            lo[i] = col.end[h - 1];
            hi[i] = col.end[h];
          } else {
            lo[i] = 0;
            hi[i] = col.end[h];
          }
          if (i == d && lo[i] == 0) lo[i] = 1;  // top coefficient is nonzero
          if (lo[i] >= hi[i]) empty = true;
        }
        if (empty) continue;
        std::vector<std::size_t> idx = lo;
        std::vector<const Coeff*> cs(d + 1);
        while (true) {
          for (std::size_t i = 0; i <= d; ++i) cs[i] = &(i == 0 ? cols.constant : cols.general).values[idx[i]];
          if (!visit(assemble(inst, support, cs))) return;
          if (++visited >= bounds.max_candidates) return;
          std::size_t i = 0;
          while (i <= d && ++idx[i] == hi[i]) {
            idx[i] = lo[i];
            ++i;
          }
          if (i > d) break;
        }
      }
    }
  }
}

std::vector<Poly> ambient_corpus(const SemidomainInstance& inst, const Bounds& bounds) {
  std::vector<Poly> out;
  for_each_ambient(inst, bounds, [&](const Poly& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::vector<Poly> member_corpus(const SemidomainInstance& inst, const Bounds& bounds) {
  std::vector<Poly> out;
  // Members are roughly half the ambient; scan four times the budget.
  Bounds scan = bounds;
  scan.max_candidates = bounds.max_candidates * 4;
  for_each_ambient(inst, scan, [&](const Poly& g) {
    if (inst.contains(g)) out.push_back(g);
    return out.size() < bounds.max_candidates;
  });
  return out;
}

namespace {
Poly sample_with(const SemidomainInstance& inst, const Columns& cols, const std::vector<Exp>& support,
                 std::size_t max_h, std::mt19937_64& rng) {
  const std::size_t d = std::uniform_int_distribution<std::size_t>(0, support.size() - 1)(rng);
  std::vector<const Coeff*> cs(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    const Column& col = i == 0 ? cols.constant : cols.general;
    std::size_t lo = i == d ? 1 : 0;
    cs[i] = &col.values[std::uniform_int_distribution<std::size_t>(lo, col.end[max_h] - 1)(rng)];
  }
  return assemble(inst, support, cs);
}
}  // namespace

Poly sample_ambient(const SemidomainInstance& inst, const Bounds& bounds, std::mt19937_64& rng) {
  bounds.validate();
  // Rebuilding the Gaussian alphabet dominates a single draw, so keep the last one.
  thread_local std::string cached_id;
  thread_local std::size_t cached_h = 0;
  thread_local std::optional<Columns> cached;
  if (!cached || cached_id != inst.id() || cached_h != bounds.max_height) {
    cached = make_columns(inst, bounds.max_height);
    cached_id = inst.id();
    cached_h = bounds.max_height;
  }
  const Columns& cols = *cached;
  return sample_with(inst, cols, ambient_support(inst, max_degree_for(inst, bounds) + 1), bounds.max_height, rng);
}

std::vector<Poly> sample_members(const SemidomainInstance& inst, const Bounds& bounds, std::size_t count,
                                 std::uint64_t seed) {
  bounds.validate();
  const Columns cols = make_columns(inst, bounds.max_height);
  const auto support = ambient_support(inst, max_degree_for(inst, bounds) + 1);
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < count * 64; ++attempt) {
    Poly g = sample_with(inst, cols, support, bounds.max_height, rng);
    if (inst.contains(g)) out.push_back(std::move(g));
  }
  return out;
}

std::string corpus_descriptor(const SemidomainInstance& inst, const Bounds& bounds) {
  return "staircase(" + inst.id() + ", degree<=" + std::to_string(max_degree_for(inst, bounds)) +
         ", height<=" + std::to_string(bounds.max_height) + ", max=" + std::to_string(bounds.max_candidates) + ")";
}

}  // namespace semilab
