#include "weylshape/parse.hpp"

#include <cctype>
#include <sstream>

#include "weylshape/error.hpp"

namespace weylshape {
namespace {

template <class Tag>
class Parser {
 public:
  Parser(std::string_view text, char xname, char yname) : text_(text), x_(xname), y_(yname) {}

  Element<Tag> parse() {
    skip_ws();
    if (at_end()) fail("empty input");
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    Element<Tag> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      ++pos_;
      Element<Tag> t = term();
      if (op == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  mpz_class integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    std::string digits;
    if (allow_sign && !at_end() && peek() == '-') {
      digits.push_back('-');
      ++pos_;
      skip_ws();
    }
    const std::size_t first_digit = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
    if (pos_ == first_digit) {
      pos_ = start;
      fail("expected integer");
    }
    return mpz_class(digits);
  }

  Rational fraction_tail(const mpz_class& num) {
    // called after the '/' has been consumed
    skip_ws();
    const std::size_t at = pos_;
    const mpz_class den = integer(false);
    if (den == 0) throw ParseError(at, "denominator must be positive");
    return Rational(num, den);
  }

  Element<Tag> term() {
    skip_ws();
    if (at_end()) fail("expected term");
    Element<Tag> acc = Element<Tag>::constant(Rational(1));
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const mpz_class num = integer(false);
      Rational c(num);
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        c = fraction_tail(num);
      }
      acc = Element<Tag>::constant(c);
      skip_ws();
      if (at_end() || peek() != '*') return acc;
      ++pos_;
    }
    while (need_factor) {
      acc = acc * factor();
      skip_ws();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    return acc;
  }

  Element<Tag> factor() {
    skip_ws();
    if (at_end()) fail("expected factor");
    const char v = peek();
    if (v != x_ && v != y_) fail(std::string("expected '") + x_ + "' or '" + y_ + "'");
    ++pos_;
    Rational e(1);
    skip_ws();
    std::size_t exp_at = pos_;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      exp_at = pos_;
      if (!at_end() && peek() == '(') {
        ++pos_;
        const mpz_class num = integer(true);
        expect('/');
        e = fraction_tail(num);
        expect(')');
      } else {
        e = Rational(integer(true));
      }
    }
    if (v == x_) return Element<Tag>::x_power(e);
    if (!e.is_integer() || e.sign() < 0) throw ParseError(exp_at, "Y exponent must be a nonnegative integer");
    return Element<Tag>::y_power(e.to_int64());
  }

  std::string_view text_;
  char x_;
  char y_;
  std::size_t pos_ = 0;
};

std::string format_terms(const TermMap& terms, char xname, char yname) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms) {
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool has_x = !p.x.is_zero();
    const bool has_y = p.y != 0;
    if (!has_x && !has_y) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    if (has_x) {
      os << xname;
      if (p.x != Rational(1)) {
        if (p.x.is_integer()) {
          os << "^" << p.x;
        } else {
          os << "^(" << p.x << ")";
        }
      }
    }
    if (has_y) {
      if (has_x) os << "*";
      os << yname;
      if (p.y != 1) os << "^" << p.y;
    }
  }
  return os.str();
}

}  // namespace

WeylElement parse_weyl(std::string_view text) { return Parser<WeylTag>(text, 'X', 'Y').parse(); }

LaurentElement parse_laurent(std::string_view text) { return Parser<LaurentTag>(text, 'x', 'y').parse(); }

std::string format(const WeylElement& p) { return format_terms(p.terms(), 'X', 'Y'); }

std::string format(const LaurentElement& p) { return format_terms(p.terms(), 'x', 'y'); }

}  // namespace weylshape
