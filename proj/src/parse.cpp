#include <cctype>

#include "mfw/error.hpp"
#include "mfw/polynomial.hpp"

namespace mfw {

namespace {

constexpr std::uint32_t kMaxExponent = 10000;

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := ('-' | '+') factor | power
//   power   := primary ('^' nat)?
//   primary := int ('/' posint)? | var | '(' expr ')'
class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "expected an expression");
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+') acc += rhs; else acc -= rhs;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  Polynomial factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw SyntaxError(pos_, "expected a non-negative integer exponent");
    }
    mpz_class e = digits();
    if (e > kMaxExponent) throw SyntaxError(start, "exponent too large");
    return base.pow(static_cast<std::uint32_t>(e.get_ui()));
  }

  Polynomial primary() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = digits();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        const std::size_t slash = pos_;
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          throw SyntaxError(pos_, "expected a positive integer denominator");
        }
        den = digits();
        if (den == 0) throw DivisionByZeroInCoefficient(slash);
        Rational value;
        if (!ring_->field.try_canonical(Rational(num, den), value)) {
          throw DivisionByZeroInCoefficient(slash);
        }
        return Polynomial::constant(ring_, value);
      }
      return Polynomial::constant(ring_, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_')) {
        name += text_[pos_++];
      }
      const auto& vars = ring_->vars;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == name) return Polynomial::variable(ring_, i);
      }
      throw UnknownVariable(start, name);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (at_end()) throw SyntaxError(pos_, "unexpected end of input");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(text_.substr(start, pos_ - start), 10);
  }

  const std::string& text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace mfw
