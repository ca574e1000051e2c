#pragma once

// Exact coefficient arithmetic: arbitrary-precision integers, rationals and
// Gaussian rationals, plus the tagged Coeff value used by polynomials.

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "semilab/error.hpp"

namespace semilab {

namespace detail {
struct BigRep;
BigRep* big_clone(const BigRep* rep);
void big_free(BigRep* rep) noexcept;
}  // namespace detail

/// Arbitrary-precision integer. Values in (INT64_MIN, INT64_MAX] live inline;
/// anything larger is held by GMP. The representation is canonical, so two
/// equal values always have the same storage class.
class Int {
 public:
  Int() noexcept = default;

  template <std::signed_integral T>
  Int(T value) {  // NOLINT(google-explicit-constructor)
    auto v = static_cast<std::int64_t>(value);
    if (v == std::numeric_limits<std::int64_t>::min()) {
      *this = from_int64_min();
    } else {
      small_ = v;
    }
  }

  template <std::unsigned_integral T>
  Int(T value) {  // NOLINT(google-explicit-constructor)
    if (static_cast<std::uint64_t>(value) <=
        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      small_ = static_cast<std::int64_t>(value);
    } else {
      *this = from_uint64(static_cast<std::uint64_t>(value));
    }
  }

  Int(const Int& other) : small_(other.small_), big_(other.big_ ? detail::big_clone(other.big_) : nullptr) {}
  Int(Int&& other) noexcept : small_(other.small_), big_(std::exchange(other.big_, nullptr)) {}
  Int& operator=(const Int& other) {
    if (this != &other) {
      Int tmp(other);
      swap(tmp);
    }
    return *this;
  }
  Int& operator=(Int&& other) noexcept {
    swap(other);
    return *this;
  }
  ~Int() {
    if (big_) detail::big_free(big_);
  }

  void swap(Int& other) noexcept {
    std::swap(small_, other.small_);
    std::swap(big_, other.big_);
  }

  /// Parses an optionally signed decimal literal.
  static Int parse(std::string_view text);

  bool is_small() const noexcept { return big_ == nullptr; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }
  int sign() const noexcept;
  std::optional<std::int64_t> to_int64() const noexcept;
  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend Int operator+(const Int& a, const Int& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Int(r);
    return slow_add(a, b);
  }
  friend Int operator-(const Int& a, const Int& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Int(r);
    return slow_sub(a, b);
  }
  friend Int operator*(const Int& a, const Int& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Int(r);
    return slow_mul(a, b);
  }
  friend Int operator-(const Int& a) {
    if (!a.big_) return Int(-a.small_);
    return slow_neg(a);
  }
  Int& operator+=(const Int& b) { return *this = *this + b; }
  Int& operator-=(const Int& b) { return *this = *this - b; }
  Int& operator*=(const Int& b) { return *this = *this * b; }

  friend bool operator==(const Int& a, const Int& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return slow_compare(a, b) == 0;
  }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    return slow_compare(a, b) <=> 0;
  }

  friend Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }
  friend Int gcd(const Int& a, const Int& b);
  /// Quotient a / b; throws NonExactDivision unless b divides a.
  friend Int divexact(const Int& a, const Int& b);
  /// Truncated quotient and remainder (C++ semantics).
  friend std::pair<Int, Int> tdiv_qr(const Int& a, const Int& b);
  /// True when d divides n; d = 0 divides only 0.
  friend bool divides(const Int& d, const Int& n);

  friend std::ostream& operator<<(std::ostream& os, const Int& a) { return os << a.to_string(); }

 private:
  explicit Int(detail::BigRep* rep) noexcept : big_(rep) {}
  static Int from_int64_min();
  static Int from_uint64(std::uint64_t v);
  static Int slow_add(const Int& a, const Int& b);
  static Int slow_sub(const Int& a, const Int& b);
  static Int slow_mul(const Int& a, const Int& b);
  static Int slow_neg(const Int& a);
  static int slow_compare(const Int& a, const Int& b) noexcept;

  friend struct IntAccess;

  std::int64_t small_ = 0;
  detail::BigRep* big_ = nullptr;
};

/// Positive divisors of |n| in ascending order (n != 0). Trial division; throws
/// BudgetExceeded beyond 10^16.
std::vector<Int> positive_divisors(const Int& n);
/// Prime factorization of |n| (n != 0) as ascending primes with multiplicity.
std::vector<Int> prime_factors(const Int& n);
Int int_pow(const Int& base, unsigned exponent);

/// Canonical rational: den > 0 and gcd(|num|, den) = 1; zero is 0/1.
class Rat {
 public:
  Rat() = default;
  Rat(Int num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Rat(T value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);

  /// Accepts "a" or "a/b".
  static Rat parse(std::string_view text);

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_integer() const noexcept { return den_.is_one(); }
  int sign() const noexcept { return num_.sign(); }
  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_, Trusted{}); }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }

  friend bool operator==(const Rat& a, const Rat& b) noexcept = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  friend Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }
  friend std::ostream& operator<<(std::ostream& os, const Rat& a) { return os << a.to_string(); }

 private:
  struct Trusted {};
  Rat(Int num, Int den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  Int num_{0};
  Int den_{1};
};

/// Returns the canonical representative of num/den; ZeroDenominator if den = 0.
Rat rat_normalize(const Int& num, const Int& den);

/// Element of Q(i).
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rat& re() const noexcept { return re_; }
  const Rat& im() const noexcept { return im_; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }
  GaussRat conj() const { return {re_, -im_}; }
  /// re^2 + im^2; nonnegative, zero only at zero.
  Rat norm() const { return re_ * re_ + im_ * im_; }
  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re_, -a.im_}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);

  friend bool operator==(const GaussRat& a, const GaussRat& b) noexcept = default;
  /// Lexicographic on (re, im); a total order for canonical sorting only.
  friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b);

 private:
  Rat re_;
  Rat im_;
};

enum class Ring : std::uint8_t { Int = 0, Rat = 1, Gauss = 2 };
std::string_view to_string(Ring ring) noexcept;

/// A coefficient tagged with its ring. All coefficients of one polynomial
/// share a ring; mixing rings is an error rather than an implicit promotion.
class Coeff {
 public:
  Coeff() = default;
  Coeff(Int v) : v_(std::move(v)) {}        // NOLINT(google-explicit-constructor)
  Coeff(Rat v) : v_(std::move(v)) {}        // NOLINT(google-explicit-constructor)
  Coeff(GaussRat v) : v_(std::move(v)) {}   // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Coeff(T v) : v_(Int(v)) {}  // NOLINT(google-explicit-constructor)

  static Coeff zero(Ring ring);
  static Coeff one(Ring ring);

  Ring ring() const noexcept { return static_cast<Ring>(v_.index()); }
  const Int& as_int() const;
  const Rat& as_rat() const;
  const GaussRat& as_gauss() const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Sign for Int/Rat values and real Gaussian values; nullopt otherwise.
  std::optional<int> real_sign() const noexcept;
  /// The value as a rational when it is real (any ring); nullopt otherwise.
  std::optional<Rat> to_rat() const;
  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const Coeff& a, const Coeff& b) noexcept = default;
  friend std::strong_ordering operator<=>(const Coeff& a, const Coeff& b);

 private:
  std::variant<Int, Rat, GaussRat> v_;
};

Coeff add(const Coeff& a, const Coeff& b);
Coeff sub(const Coeff& a, const Coeff& b);
Coeff mul(const Coeff& a, const Coeff& b);
Coeff negate(const Coeff& a);
/// a / b inside the ring. Over Int this throws NonExactDivision when b does
/// not divide a; over the fields it only fails for b = 0.
Coeff exact_div(const Coeff& a, const Coeff& b);
/// Exact division that reports failure instead of throwing.
std::optional<Coeff> try_exact_div(const Coeff& a, const Coeff& b);

inline Coeff operator+(const Coeff& a, const Coeff& b) { return add(a, b); }
inline Coeff operator-(const Coeff& a, const Coeff& b) { return sub(a, b); }
inline Coeff operator*(const Coeff& a, const Coeff& b) { return mul(a, b); }
inline Coeff operator-(const Coeff& a) { return negate(a); }

/// Embeds c into `target`. Widening is always exact; narrowing succeeds only
/// when the value lies in the smaller ring, otherwise RingMismatch.
Coeff convert(const Coeff& c, Ring target);
std::optional<Coeff> try_convert(const Coeff& c, Ring target);

/// Search-bound metric: |n| for integers, max(|num|, den) for rationals, and
/// the larger component height for Gaussian rationals.
Int height(const Int& c);
Int height(const Rat& c);
Int height(const GaussRat& c);
Int height(const Coeff& c);

inline std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.to_string(); }

}  // namespace semilab
