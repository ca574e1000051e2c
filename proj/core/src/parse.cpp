#include "semilab/parse.hpp"

#include <cctype>
#include <string>

namespace semilab {

namespace {

struct RawTerm {
  Coeff coeff;
  std::optional<Exp> exp;  // nullopt for constants
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> expr() {
    std::vector<RawTerm> terms;
    skip();
    bool negative = false;
    if (peek() == '-') {
      ++pos_;
      negative = true;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

  Exp exponent_only() {
    Exp e = exponent();
    finish();
    return e;
  }

  void finish() {
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    raise(Errc::SyntaxError, what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Int integer() {
    skip();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Int::parse(text_.substr(start, pos_ - start));
  }

  Rat rational(bool allow_sign) {
    skip();
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) negative = text_[pos_++] == '-';
    Int num = integer();
    Int den(1);
    skip();
    // A '/' followed by a digit continues the rational.
    if (peek() == '/') {
      std::size_t save = pos_++;
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        den = integer();
        if (den.is_zero()) fail("zero denominator");
      } else {
        pos_ = save;
      }
    }
    Rat r(num, den);
    return negative ? -r : r;
  }

  Exp exponent() {
    skip();
    if (peek() != '(') return Exp{rational(false)};
    ++pos_;
    std::vector<Rat> coords{rational(false)};
    skip();
    if (peek() == ',') {
      ++pos_;
      coords.push_back(rational(false));
    }
    expect(')');
    return Exp(coords);
  }

  std::optional<Exp> mono() {
    skip();
    if (peek() != 'x') return std::nullopt;
    ++pos_;
    skip();
    if (peek() != '^') return Exp{Rat(1)};
    ++pos_;
    return exponent();
  }

  RawTerm term(bool negative) {
    skip();
    Coeff c(Rat(1));
    bool have_coeff = false;
    if (text_.substr(pos_, 5) == "gauss") {
      pos_ += 5;
      expect('(');
      Rat re = rational(true);
      expect(',');
      Rat im = rational(true);
      expect(')');
      c = Coeff(GaussRat(re, im));
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = Coeff(rational(false));
      have_coeff = true;
    }
    skip();
    bool star = false;
    if (have_coeff && peek() == '*') {
      ++pos_;
      star = true;
    }
    auto m = mono();
    if (!have_coeff && !m) fail("expected a term");
    if (star && !m) fail("expected 'x' after '*'");
    // "x/2" and "3x/4" divide the coefficient by a positive integer.
    skip();
    if (m && peek() == '/') {
      ++pos_;
      Int d = integer();
      if (d.is_zero()) fail("zero denominator");
      c = exact_div(c, convert(Coeff(Rat(d)), c.ring()));
    }
    return RawTerm{negative ? -c : c, m};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Poly assemble(const std::vector<RawTerm>& raw, Ring ring, std::size_t dim) {
  std::vector<Term> terms;
  for (const auto& t : raw) {
    if (t.exp && t.exp->dim() != dim) {
      raise(Errc::DimensionMismatch, "exponent " + t.exp->to_string() + " has dimension " +
                                         std::to_string(t.exp->dim()) + ", expected " + std::to_string(dim));
    }
    terms.push_back(Term{convert(t.coeff, ring), t.exp ? *t.exp : Exp(dim)});
  }
  return Poly::from_terms(ring, dim, std::move(terms));
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Drops one pair of parentheses enclosing the whole text.
std::string_view unwrap(std::string_view s) {
  s = strip(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
    if (depth == 0 && i + 1 < s.size()) return s;
  }
  return s.substr(1, s.size() - 2);
}

}  // namespace

Poly parse_poly(std::string_view text, Ring ring, std::size_t dim) {
  Parser p(text);
  auto terms = p.expr();
  p.finish();
  return assemble(terms, ring, dim);
}

Poly parse_element(std::string_view text, const SemidomainInstance& inst) {
  return parse_poly(text, inst.ring(), inst.dim());
}

Fraction parse_fraction(std::string_view text, const LocalizedSemidomain& loc) {
  const auto& base = loc.base();
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '/' && depth == 0) {
      Poly num = parse_element(unwrap(text.substr(0, i)), base);
      Poly den = parse_element(unwrap(text.substr(i + 1)), base);
      return loc.make(std::move(num), std::move(den));
    }
  }
  return loc.make(parse_element(unwrap(text), base));
}

Exp parse_exponent(std::string_view text) { return Parser(text).exponent_only(); }

}  // namespace semilab
