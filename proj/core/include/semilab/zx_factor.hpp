#pragma once

// Complete factorization and divisor enumeration in Z[x] at bounded degree,
// using Kronecker's interpolation method.

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semilab/sparse_poly.hpp"

namespace semilab {

inline constexpr unsigned kDefaultDegreeCap = 8;

/// f = unit * product(factors). Factors are irreducible, primitive (prime
/// integers appear as constants), have positive leading coefficient, and are
/// sorted in canonical Poly order.
struct ZxFactorization {
  int unit = 1;
  std::vector<Poly> factors;

  Poly product() const;
};

/// Returns (content > 0, primitive part); the primitive part keeps the sign
/// of f's leading coefficient.
std::pair<Int, Poly> content_primitive(const Poly& f);

ZxFactorization kronecker_factor(const Poly& f, unsigned degree_cap = kDefaultDegreeCap);

/// Every divisor of f in Z[x], both signs, sorted canonically.
std::vector<Poly> divisors_zx(const Poly& f, unsigned degree_cap = kDefaultDegreeCap);
std::vector<Poly> divisors_from(const ZxFactorization& fz);

bool is_irreducible_zx(const Poly& f, unsigned degree_cap = kDefaultDegreeCap);

/// Memoizing front end for repeated queries over one corpus. Not thread-safe;
/// give each thread its own instance.
class Factorizer {
 public:
  explicit Factorizer(unsigned degree_cap = kDefaultDegreeCap, std::size_t max_entries = 1U << 17);

  const ZxFactorization& factor(const Poly& f);
  std::vector<Poly> divisors(const Poly& f) { return divisors_from(factor(f)); }
  bool is_irreducible(const Poly& f);
  unsigned degree_cap() const noexcept { return cap_; }

 private:
  unsigned cap_;
  std::size_t max_entries_;
  std::unordered_map<Poly, ZxFactorization, PolyHash> cache_;
};

}  // namespace semilab
