#pragma once

// Sparse polynomials with nonnegative rational exponent vectors of dimension
// 1 or 2. Terms are kept sorted ascending in lex order with no zero
// coefficients, so structural equality is mathematical equality.

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "semilab/exact_arith.hpp"

namespace semilab {

class Exp {
 public:
  Exp() = default;
  explicit Exp(std::size_t dim);
  Exp(std::initializer_list<Rat> coords);
  explicit Exp(const std::vector<Rat>& coords);

  std::size_t dim() const noexcept { return dim_; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const noexcept;

  friend Exp operator+(const Exp& a, const Exp& b);
  /// a - b when every coordinate stays nonnegative.
  std::optional<Exp> checked_sub(const Exp& b) const;
  Exp scaled(const Int& k) const;

  friend bool operator==(const Exp& a, const Exp& b) noexcept = default;
  friend std::strong_ordering operator<=>(const Exp& a, const Exp& b);

  /// "3", "1/2" in dimension 1 and "(1,3)" in dimension 2.
  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  std::array<Rat, 2> c_{};
  std::uint8_t dim_ = 1;
};

struct Term {
  Coeff coeff;
  Exp exp;

  friend bool operator==(const Term&, const Term&) = default;
};

class Poly {
 public:
  /// The zero polynomial of the given ring and exponent dimension.
  explicit Poly(Ring ring = Ring::Int, std::size_t dim = 1);

  static Poly constant(const Coeff& c, std::size_t dim = 1);
  static Poly monomial(const Coeff& c, const Exp& e);
  /// c * x^k in dimension 1.
  static Poly monomial(const Coeff& c, const Rat& k) { return monomial(c, Exp{k}); }
  /// Combines like terms and drops zeros; every coefficient must be in `ring`.
  static Poly from_terms(Ring ring, std::size_t dim, std::vector<Term> terms);

  Ring ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Coeff coeff_at(const Exp& e) const;
  Coeff constant_term() const;
  const Term& leading_term() const;
  const Term& trailing_term() const;
  /// Leading exponent in dimension 1.
  Rat degree() const;
  /// Largest coefficient height.
  Int height() const;

  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f);
  Poly scaled(const Coeff& c) const;
  Poly pow(unsigned k) const;
  Poly converted(Ring target) const;

  /// f / d when d divides f in the ambient polynomial ring; leading-term
  /// division over the coefficient ring.
  std::optional<Poly> exact_quotient(const Poly& d) const;
  bool divisible_by(const Poly& d) const { return exact_quotient(d).has_value(); }

  friend bool operator==(const Poly& f, const Poly& g) noexcept = default;
  /// Canonical total order: ring, dim, then terms from the leading one down.
  friend std::strong_ordering operator<=>(const Poly& f, const Poly& g);

  /// Descending lex order, e.g. "x^2 - 1", "1/2*x", "x^(1,3)".
  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  void check_compatible(const Poly& g) const;

  Ring ring_;
  std::uint8_t dim_;
  std::vector<Term> terms_;
};

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_neg(const Poly& f);
Term leading_term(const Poly& f);
Term trailing_term(const Poly& f);
Coeff constant_term(const Poly& f);

inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

struct PolyHash {
  std::size_t operator()(const Poly& f) const noexcept { return f.hash(); }
};

}  // namespace semilab
