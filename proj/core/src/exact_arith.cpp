#include "semilab/exact_arith.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>

namespace semilab {

namespace detail {
struct BigRep {
  mpz_class v;
};
BigRep* big_clone(const BigRep* rep) { return new BigRep{rep->v}; }
void big_free(BigRep* rep) noexcept { delete rep; }
}  // namespace detail

static_assert(sizeof(long) == 8, "the GMP bridge assumes LP64");

struct IntAccess {
  static mpz_class to_mpz(const Int& a) {
    if (a.big_) return a.big_->v;
    return mpz_class(static_cast<long>(a.small_));
  }
  static const mpz_class* big(const Int& a) { return a.big_ ? &a.big_->v : nullptr; }
  static std::int64_t small(const Int& a) { return a.small_; }

  static Int from_mpz(mpz_class v) {
    if (v.fits_slong_p()) {
      long s = v.get_si();
      if (s != std::numeric_limits<long>::min()) return Int(static_cast<std::int64_t>(s));
    }
    return Int(new detail::BigRep{std::move(v)});
  }
};

namespace {
mpz_class mpz(const Int& a) { return IntAccess::to_mpz(a); }
Int from(mpz_class v) { return IntAccess::from_mpz(std::move(v)); }
}  // namespace

Int Int::from_int64_min() { return from(mpz_class(std::numeric_limits<long>::min())); }

Int Int::from_uint64(std::uint64_t v) { return from(mpz_class(static_cast<unsigned long>(v))); }

Int Int::slow_add(const Int& a, const Int& b) { return from(mpz(a) + mpz(b)); }
Int Int::slow_sub(const Int& a, const Int& b) { return from(mpz(a) - mpz(b)); }
Int Int::slow_mul(const Int& a, const Int& b) { return from(mpz(a) * mpz(b)); }
Int Int::slow_neg(const Int& a) { return from(-mpz(a)); }

int Int::slow_compare(const Int& a, const Int& b) noexcept {
  // A big value always exceeds every small one in magnitude.
  if (a.big_ && b.big_) {
    int c = cmp(a.big_->v, b.big_->v);
    return (c > 0) - (c < 0);
  }
  if (a.big_) return sgn(a.big_->v);
  return -sgn(b.big_->v);
}

Int Int::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) raise(Errc::SyntaxError, "empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    raise(Errc::SyntaxError, "malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return from(mpz_class(s, 10));
}

int Int::sign() const noexcept {
  if (big_) return sgn(big_->v);
  return (small_ > 0) - (small_ < 0);
}

std::optional<std::int64_t> Int::to_int64() const noexcept {
  if (!big_) return small_;
  if (big_->v.fits_slong_p()) return big_->v.get_si();
  return std::nullopt;
}

std::string Int::to_string() const {
  if (!big_) return std::to_string(small_);
  return big_->v.get_str(10);
}

std::size_t Int::hash() const noexcept {
  if (!big_) return std::hash<std::int64_t>{}(small_);
  std::size_t h = static_cast<std::size_t>(sgn(big_->v)) * 0x9e3779b97f4a7c15ULL;
  const mpz_srcptr p = big_->v.get_mpz_t();
  for (std::size_t i = 0; i < mpz_size(p); ++i) {
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(p, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Int gcd(const Int& a, const Int& b) {
  if (!a.big_ && !b.big_) {
    // Magnitudes fit in uint64 since INT64_MIN is never stored inline.
    auto x = static_cast<std::uint64_t>(a.small_ < 0 ? -a.small_ : a.small_);
    auto y = static_cast<std::uint64_t>(b.small_ < 0 ? -b.small_ : b.small_);
    while (y != 0) {
      auto t = x % y;
      x = y;
      y = t;
    }
    return Int(x);
  }
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), mpz(a).get_mpz_t(), mpz(b).get_mpz_t());
  return from(std::move(r));
}

Int divexact(const Int& a, const Int& b) {
  if (b.is_zero()) raise(Errc::DivisionByZero, "division of " + a.to_string() + " by zero");
  if (!a.big_ && !b.big_) {
    if (a.small_ % b.small_ != 0) {
      raise(Errc::NonExactDivision, b.to_string() + " does not divide " + a.to_string());
    }
    return Int(a.small_ / b.small_);
  }
  mpz_class x = mpz(a), y = mpz(b);
  if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) {
    raise(Errc::NonExactDivision, b.to_string() + " does not divide " + a.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return from(std::move(q));
}

std::pair<Int, Int> tdiv_qr(const Int& a, const Int& b) {
  if (b.is_zero()) raise(Errc::DivisionByZero, "division of " + a.to_string() + " by zero");
  if (!a.big_ && !b.big_) return {Int(a.small_ / b.small_), Int(a.small_ % b.small_)};
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mpz(a).get_mpz_t(), mpz(b).get_mpz_t());
  return {from(std::move(q)), from(std::move(r))};
}

bool divides(const Int& d, const Int& n) {
  if (d.is_zero()) return n.is_zero();
  if (!d.big_ && !n.big_) return n.small_ % d.small_ == 0;
  return mpz_divisible_p(mpz(n).get_mpz_t(), mpz(d).get_mpz_t()) != 0;
}

Int int_pow(const Int& base, unsigned exponent) {
  Int result(1);
  Int b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

namespace {
constexpr std::uint64_t kTrialLimit = 10'000'000'000'000'000ULL;

std::uint64_t magnitude_for_trial(const Int& n) {
  if (n.is_zero()) raise(Errc::InvalidArgument, "factoring zero");
  auto v = abs(n).to_int64();
  if (!v || static_cast<std::uint64_t>(*v) > kTrialLimit) {
    raise(Errc::BudgetExceeded, "integer " + n.to_string() + " too large for trial division");
  }
  return static_cast<std::uint64_t>(*v);
}
}  // namespace

std::vector<Int> prime_factors(const Int& n) {
  std::uint64_t m = magnitude_for_trial(n);
  std::vector<Int> out;
  for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      out.emplace_back(p);
      m /= p;
    }
  }
  if (m > 1) out.emplace_back(m);
  return out;
}

std::vector<Int> positive_divisors(const Int& n) {
  std::uint64_t m = magnitude_for_trial(n);
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  std::vector<Int> out;
  out.reserve(small.size() + large.size());
  for (auto d : small) out.emplace_back(d);
  for (auto it = large.rbegin(); it != large.rend(); ++it) out.emplace_back(*it);
  return out;
}

// ---------------------------------------------------------------------------
// Rat

Rat rat_normalize(const Int& num, const Int& den) {
  if (den.is_zero()) raise(Errc::ZeroDenominator, num.to_string() + "/0");
  return Rat(num, den);
}

Rat::Rat(const Int& num, const Int& den) {
  if (den.is_zero()) raise(Errc::ZeroDenominator, num.to_string() + "/0");
  if (num.is_zero()) return;
  Int g = gcd(num, den);
  if (den.sign() < 0) g = -g;
  if (g.is_one()) {
    num_ = num;
    den_ = den;
  } else {
    num_ = divexact(num, g);
    den_ = divexact(den, g);
  }
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(Int::parse(text));
  return rat_normalize(Int::parse(text.substr(0, slash)), Int::parse(text.substr(slash + 1)));
}

std::string Rat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::size_t Rat::hash() const noexcept { return num_.hash() * 31 + den_.hash(); }

Rat operator+(const Rat& a, const Rat& b) {
  if (a.den_.is_one() && b.den_.is_one()) return Rat(a.num_ + b.num_, Int(1), Rat::Trusted{});
  if (a.den_ == b.den_) return Rat(a.num_ + b.num_, a.den_);
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  if (a.den_.is_one() && b.den_.is_one()) return Rat(a.num_ * b.num_, Int(1), Rat::Trusted{});
  // Cross-cancel first so the intermediate products stay small.
  Int g1 = gcd(a.num_, b.den_);
  Int g2 = gcd(b.num_, a.den_);
  if (g1.is_zero() || g2.is_zero()) return Rat();
  return Rat(divexact(a.num_, g1) * divexact(b.num_, g2), divexact(a.den_, g2) * divexact(b.den_, g1),
             Rat::Trusted{});
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) raise(Errc::DivisionByZero, "division of " + a.to_string() + " by zero");
  Rat inv = b.sign() < 0 ? Rat(-b.den_, -b.num_, Rat::Trusted{}) : Rat(b.den_, b.num_, Rat::Trusted{});
  return a * inv;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

// ---------------------------------------------------------------------------
// GaussRat

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  if (b.is_zero()) raise(Errc::DivisionByZero, "division of " + a.to_string() + " by zero");
  Rat n = b.norm();
  GaussRat t = a * b.conj();
  return {t.re_ / n, t.im_ / n};
}

std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b) {
  if (auto c = a.re_ <=> b.re_; c != 0) return c;
  return a.im_ <=> b.im_;
}

std::string GaussRat::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  if (im_.is_one()) {
    imag = "i";
  } else if (im_ == Rat(-1)) {
    imag = "-i";
  } else {
    imag = im_.to_string() + "i";
  }
  if (re_.is_zero()) return imag;
  if (imag[0] == '-') return re_.to_string() + imag;
  return re_.to_string() + "+" + imag;
}

std::size_t GaussRat::hash() const noexcept { return re_.hash() * 1000003 + im_.hash(); }

// ---------------------------------------------------------------------------
// Coeff

std::string_view to_string(Ring ring) noexcept {
  switch (ring) {
    case Ring::Int: return "int";
    case Ring::Rat: return "rat";
    case Ring::Gauss: return "gauss";
  }
  return "?";
}

Coeff Coeff::zero(Ring ring) {
  switch (ring) {
    case Ring::Int: return Coeff(Int(0));
    case Ring::Rat: return Coeff(Rat());
    case Ring::Gauss: return Coeff(GaussRat());
  }
  return {};
}

Coeff Coeff::one(Ring ring) {
  switch (ring) {
    case Ring::Int: return Coeff(Int(1));
    case Ring::Rat: return Coeff(Rat(1));
    case Ring::Gauss: return Coeff(GaussRat(Rat(1)));
  }
  return {};
}

const Int& Coeff::as_int() const {
  if (auto* p = std::get_if<Int>(&v_)) return *p;
  raise(Errc::RingMismatch, "expected an integer coefficient, got " + to_string());
}

const Rat& Coeff::as_rat() const {
  if (auto* p = std::get_if<Rat>(&v_)) return *p;
  raise(Errc::RingMismatch, "expected a rational coefficient, got " + to_string());
}

const GaussRat& Coeff::as_gauss() const {
  if (auto* p = std::get_if<GaussRat>(&v_)) return *p;
  raise(Errc::RingMismatch, "expected a Gaussian coefficient, got " + to_string());
}

bool Coeff::is_zero() const noexcept {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Coeff::is_one() const noexcept {
  return std::visit([](const auto& x) { return x.is_one(); }, v_);
}

std::optional<int> Coeff::real_sign() const noexcept {
  switch (ring()) {
    case Ring::Int: return std::get<Int>(v_).sign();
    case Ring::Rat: return std::get<Rat>(v_).sign();
    case Ring::Gauss: {
      const auto& g = std::get<GaussRat>(v_);
      if (!g.is_real()) return std::nullopt;
      return g.re().sign();
    }
  }
  return std::nullopt;
}

std::optional<Rat> Coeff::to_rat() const {
  switch (ring()) {
    case Ring::Int: return Rat(std::get<Int>(v_));
    case Ring::Rat: return std::get<Rat>(v_);
    case Ring::Gauss: {
      const auto& g = std::get<GaussRat>(v_);
      if (!g.is_real()) return std::nullopt;
      return g.re();
    }
  }
  return std::nullopt;
}

std::string Coeff::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

std::size_t Coeff::hash() const noexcept {
  return std::visit([](const auto& x) { return x.hash(); }, v_) * 3 + v_.index();
}

std::strong_ordering operator<=>(const Coeff& a, const Coeff& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
  switch (a.ring()) {
    case Ring::Int: return std::get<Int>(a.v_) <=> std::get<Int>(b.v_);
    case Ring::Rat: return std::get<Rat>(a.v_) <=> std::get<Rat>(b.v_);
    case Ring::Gauss: return std::get<GaussRat>(a.v_) <=> std::get<GaussRat>(b.v_);
  }
  return std::strong_ordering::equal;
}

namespace {
void same_ring(const Coeff& a, const Coeff& b) {
  if (a.ring() != b.ring()) {
    raise(Errc::MixedRings, std::string(to_string(a.ring())) + " vs " + std::string(to_string(b.ring())));
  }
}
}  // namespace

Coeff add(const Coeff& a, const Coeff& b) {
  same_ring(a, b);
  switch (a.ring()) {
    case Ring::Int: return a.as_int() + b.as_int();
    case Ring::Rat: return a.as_rat() + b.as_rat();
    case Ring::Gauss: return a.as_gauss() + b.as_gauss();
  }
  return {};
}

Coeff sub(const Coeff& a, const Coeff& b) {
  same_ring(a, b);
  switch (a.ring()) {
    case Ring::Int: return a.as_int() - b.as_int();
    case Ring::Rat: return a.as_rat() - b.as_rat();
    case Ring::Gauss: return a.as_gauss() - b.as_gauss();
  }
  return {};
}

Coeff mul(const Coeff& a, const Coeff& b) {
  same_ring(a, b);
  switch (a.ring()) {
    case Ring::Int: return a.as_int() * b.as_int();
    case Ring::Rat: return a.as_rat() * b.as_rat();
    case Ring::Gauss: return a.as_gauss() * b.as_gauss();
  }
  return {};
}

Coeff negate(const Coeff& a) {
  switch (a.ring()) {
    case Ring::Int: return -a.as_int();
    case Ring::Rat: return -a.as_rat();
    case Ring::Gauss: return -a.as_gauss();
  }
  return {};
}

Coeff exact_div(const Coeff& a, const Coeff& b) {
  same_ring(a, b);
  if (b.is_zero()) raise(Errc::DivisionByZero, "division of " + a.to_string() + " by zero");
  switch (a.ring()) {
    case Ring::Int: return divexact(a.as_int(), b.as_int());
    case Ring::Rat: return a.as_rat() / b.as_rat();
    case Ring::Gauss: return a.as_gauss() / b.as_gauss();
  }
  return {};
}

std::optional<Coeff> try_exact_div(const Coeff& a, const Coeff& b) {
  same_ring(a, b);
  if (b.is_zero()) return std::nullopt;
  if (a.ring() == Ring::Int && !divides(b.as_int(), a.as_int())) return std::nullopt;
  return exact_div(a, b);
}

std::optional<Coeff> try_convert(const Coeff& c, Ring target) {
  if (c.ring() == target) return c;
  switch (target) {
    case Ring::Int: {
      auto r = c.to_rat();
      if (!r || !r->is_integer()) return std::nullopt;
      return Coeff(r->num());
    }
    case Ring::Rat: {
      auto r = c.to_rat();
      if (!r) return std::nullopt;
      return Coeff(*r);
    }
    case Ring::Gauss:
      if (c.ring() == Ring::Int) return Coeff(GaussRat(Rat(c.as_int())));
      return Coeff(GaussRat(c.as_rat()));
  }
  return std::nullopt;
}

Coeff convert(const Coeff& c, Ring target) {
  auto r = try_convert(c, target);
  if (!r) raise(Errc::RingMismatch, c.to_string() + " is not in ring " + std::string(to_string(target)));
  return *r;
}

Int height(const Int& c) { return abs(c); }
Int height(const Rat& c) { return std::max(abs(c.num()), c.den()); }
Int height(const GaussRat& c) { return std::max(height(c.re()), height(c.im())); }

Int height(const Coeff& c) {
  switch (c.ring()) {
    case Ring::Int: return height(c.as_int());
    case Ring::Rat: return height(c.as_rat());
    case Ring::Gauss: return height(c.as_gauss());
  }
  return Int(0);
}

}  // namespace semilab
