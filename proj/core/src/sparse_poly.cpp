#include "semilab/sparse_poly.hpp"

#include <algorithm>

namespace semilab {

namespace {
void check_dim(std::size_t dim) {
  if (dim != 1 && dim != 2) raise(Errc::DimensionMismatch, "exponent dimension must be 1 or 2");
}

void check_nonnegative(const Rat& r) {
  if (r.sign() < 0) raise(Errc::NotRepresentable, "negative exponent coordinate " + r.to_string());
}
}  // namespace

Exp::Exp(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim)) { check_dim(dim); }

Exp::Exp(std::initializer_list<Rat> coords) : Exp(std::vector<Rat>(coords)) {}

Exp::Exp(const std::vector<Rat>& coords) : dim_(static_cast<std::uint8_t>(coords.size())) {
  check_dim(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    check_nonnegative(coords[i]);
    c_[i] = coords[i];
  }
}

bool Exp::is_zero() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Exp operator+(const Exp& a, const Exp& b) {
  if (a.dim_ != b.dim_) raise(Errc::DimensionMismatch, a.to_string() + " + " + b.to_string());
  Exp r(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

std::optional<Exp> Exp::checked_sub(const Exp& b) const {
  if (dim_ != b.dim_) raise(Errc::DimensionMismatch, to_string() + " - " + b.to_string());
  Exp r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    r.c_[i] = c_[i] - b.c_[i];
    if (r.c_[i].sign() < 0) return std::nullopt;
  }
  return r;
}

Exp Exp::scaled(const Int& k) const {
  if (k.sign() < 0) raise(Errc::NotRepresentable, "negative exponent multiplier");
  Exp r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.c_[i] = c_[i] * Rat(k);
  return r;
}

std::strong_ordering operator<=>(const Exp& a, const Exp& b) {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Exp::to_string() const {
  if (dim_ == 1) return c_[0].to_string();
  return "(" + c_[0].to_string() + "," + c_[1].to_string() + ")";
}

std::size_t Exp::hash() const noexcept {
  std::size_t h = dim_;
  for (std::size_t i = 0; i < dim_; ++i) h = h * 1000003 + c_[i].hash();
  return h;
}

// ---------------------------------------------------------------------------

Poly::Poly(Ring ring, std::size_t dim) : ring_(ring), dim_(static_cast<std::uint8_t>(dim)) { check_dim(dim); }

Poly Poly::constant(const Coeff& c, std::size_t dim) { return monomial(c, Exp(dim)); }

Poly Poly::monomial(const Coeff& c, const Exp& e) {
  Poly p(c.ring(), e.dim());
  if (!c.is_zero()) p.terms_.push_back(Term{c, e});
  return p;
}

Poly Poly::from_terms(Ring ring, std::size_t dim, std::vector<Term> terms) {
  Poly p(ring, dim);
  for (const auto& t : terms) {
    if (t.coeff.ring() != ring) raise(Errc::MixedRings, "term coefficient " + t.coeff.to_string());
    if (t.exp.dim() != dim) raise(Errc::DimensionMismatch, "term exponent " + t.exp.to_string());
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].exp.is_zero() && terms_[0].coeff.is_one();
}

bool Poly::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero()); }

Coeff Poly::coeff_at(const Exp& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exp& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return Coeff::zero(ring_);
}

Coeff Poly::constant_term() const {
  // The zero exponent is lex-minimal, so it can only be the first term.
  if (!terms_.empty() && terms_[0].exp.is_zero()) return terms_[0].coeff;
  return Coeff::zero(ring_);
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) raise(Errc::ZeroPolynomial, "leading term of 0");
  return terms_.back();
}

const Term& Poly::trailing_term() const {
  if (terms_.empty()) raise(Errc::ZeroPolynomial, "trailing term of 0");
  return terms_.front();
}

Rat Poly::degree() const {
  if (dim_ != 1) raise(Errc::DimensionMismatch, "degree of a two-dimensional polynomial");
  return leading_term().exp[0];
}

Int Poly::height() const {
  Int h(0);
  for (const auto& t : terms_) h = std::max(h, semilab::height(t.coeff));
  return h;
}

void Poly::check_compatible(const Poly& g) const {
  if (dim_ != g.dim_) raise(Errc::DimensionMismatch, "polynomials of dimension " + std::to_string(dim_) + " and " + std::to_string(g.dim_));
  if (ring_ != g.ring_) {
    raise(Errc::MixedRings, std::string(semilab::to_string(ring_)) + " vs " + std::string(semilab::to_string(g.ring_)));
  }
}

Poly operator+(const Poly& f, const Poly& g) {
  f.check_compatible(g);
  Poly r(f.ring_, f.dim_);
  r.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin(), b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != f.terms_.end() && a->exp < b->exp)) {
      r.terms_.push_back(*a++);
    } else if (a == f.terms_.end() || b->exp < a->exp) {
      r.terms_.push_back(*b++);
    } else {
      Coeff c = a->coeff + b->coeff;
      if (!c.is_zero()) r.terms_.push_back(Term{std::move(c), a->exp});
      ++a;
      ++b;
    }
  }
  return r;
}

Poly operator-(const Poly& f) {
  Poly r = f;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator-(const Poly& f, const Poly& g) { return f + (-g); }

Poly operator*(const Poly& f, const Poly& g) {
  f.check_compatible(g);
  std::vector<Term> prod;
  prod.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) prod.push_back(Term{a.coeff * b.coeff, a.exp + b.exp});
  }
  return Poly::from_terms(f.ring_, f.dim_, std::move(prod));
}

Poly Poly::scaled(const Coeff& c) const {
  if (c.ring() != ring_) raise(Errc::MixedRings, "scaling by " + c.to_string());
  Poly r(ring_, dim_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(Coeff::one(ring_), dim_);
  Poly base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::converted(Ring target) const {
  Poly r(target, dim_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{convert(t.coeff, target), t.exp});
  return r;
}

std::optional<Poly> Poly::exact_quotient(const Poly& d) const {
  check_compatible(d);
  if (d.is_zero()) raise(Errc::DivisionByZero, "polynomial division by zero");
  Poly rem = *this;
  std::vector<Term> quot;
  const Term& ld = d.leading_term();
  // Each step strictly lowers the leading exponent of the remainder inside a
  // finite lattice region, so this bound is only a guard against misuse.
  constexpr std::size_t kMaxSteps = 1U << 16;
  for (std::size_t step = 0; !rem.is_zero(); ++step) {
    if (step == kMaxSteps) raise(Errc::BudgetExceeded, "polynomial division did not terminate");
    const Term& lr = rem.leading_term();
    auto e = lr.exp.checked_sub(ld.exp);
    if (!e) return std::nullopt;
    auto c = try_exact_div(lr.coeff, ld.coeff);
    if (!c) return std::nullopt;
    Poly t = monomial(*c, *e);
    rem = rem - t * d;
    quot.push_back(Term{std::move(*c), std::move(*e)});
  }
  return from_terms(ring_, dim_, std::move(quot));
}

std::strong_ordering operator<=>(const Poly& f, const Poly& g) {
  if (f.ring_ != g.ring_) return f.ring_ <=> g.ring_;
  if (f.dim_ != g.dim_) return f.dim_ <=> g.dim_;
  auto a = f.terms_.rbegin(), b = g.terms_.rbegin();
  for (; a != f.terms_.rend() && b != g.terms_.rend(); ++a, ++b) {
    if (auto c = a->exp <=> b->exp; c != 0) return c;
    if (auto c = a->coeff <=> b->coeff; c != 0) return c;
  }
  return f.terms_.size() <=> g.terms_.size();
}

namespace {
std::string render_mono(const Exp& e) {
  if (e.dim() == 1) {
    const Rat& k = e[0];
    if (k.is_one()) return "x";
    if (k.is_integer()) return "x^" + k.to_string();
    return "x^(" + k.to_string() + ")";
  }
  return "x^" + e.to_string();
}
}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Coeff& c = it->coeff;
    bool first = it == terms_.rbegin();
    auto sign = c.real_sign();
    if (!sign) {
      // Non-real Gaussian coefficient, rendered in the gauss(re,im) form.
      const auto& g = c.as_gauss();
      if (!first) out += " + ";
      out += "gauss(" + g.re().to_string() + "," + g.im().to_string() + ")";
      if (!it->exp.is_zero()) out += "*" + render_mono(it->exp);
      continue;
    }
    if (first) {
      if (*sign < 0) out += "-";
    } else {
      out += *sign < 0 ? " - " : " + ";
    }
    Rat mag = abs(*c.to_rat());
    if (it->exp.is_zero()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += render_mono(it->exp);
    } else if (mag.is_integer()) {
      out += mag.to_string() + render_mono(it->exp);
    } else {
      out += mag.to_string() + "*" + render_mono(it->exp);
    }
  }
  return out;
}

std::size_t Poly::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(ring_) * 7 + dim_;
  for (const auto& t : terms_) h = (h * 1000003) ^ (t.exp.hash() * 31 + t.coeff.hash());
  return h;
}

Poly poly_add(const Poly& f, const Poly& g) { return f + g; }
Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }
Poly poly_neg(const Poly& f) { return -f; }
Term leading_term(const Poly& f) { return f.leading_term(); }
Term trailing_term(const Poly& f) { return f.trailing_term(); }
Coeff constant_term(const Poly& f) { return f.constant_term(); }

}  // namespace semilab
