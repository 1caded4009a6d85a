#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mfw/field.hpp"

namespace mfw {

/// Exponent vector, one entry per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  /// Precondition: `divisor` divides *this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  /// Storage order only (lexicographic on the raw exponent vector); use
  /// MonomialOrder for term orders.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Lex or graded reverse lex, with an explicit variable precedence.
/// `precedence[0]` is the index of the largest variable.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex };

  /// Lex on zero variables.
  MonomialOrder() : kind_(Kind::Lex) {}
  MonomialOrder(Kind kind, std::vector<std::size_t> precedence);
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return precedence_.size(); }
  const std::vector<std::size_t>& precedence() const { return precedence_; }

  /// Throws VariableMismatch if either monomial has the wrong length.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;
  bool operator==(const MonomialOrder&) const = default;

 private:
  Kind kind_;
  std::vector<std::size_t> precedence_;
};

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& order);

/// Variable names plus coefficient field: the ambient Q = k[vars].
struct PolyRing {
  std::vector<std::string> vars;
  Field field;

  bool operator==(const PolyRing&) const = default;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Throws InvalidArgument for an empty list, a non-identifier or a duplicate.
RingPtr make_ring(std::vector<std::string> vars, Field field);

/// Sparse polynomial over a PolyRing. Stored coefficients are nonzero and
/// canonical for the field.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field; }
  std::size_t nvars() const { return ring_->vars.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Coefficient of m (zero if absent).
  Rational coefficient(const Monomial& m) const;
  /// Largest total degree; nullopt for the zero polynomial.
  std::optional<std::uint64_t> degree() const;
  /// True for zero and for polynomials whose terms share one total degree.
  bool is_homogeneous() const;
  /// True if no term has total degree below `d`.
  bool all_terms_of_degree_at_least(std::uint64_t d) const;
  /// True if every term is a constant.
  bool is_constant() const;

  /// Precondition: nonzero.
  const Monomial& leading_monomial(const MonomialOrder& order) const;
  Rational leading_coefficient(const MonomialOrder& order) const;

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial scaled(const Rational& c) const;
  /// c * m * this.
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& other) const;

 private:
  void require_compatible(const Polynomial& other) const;

  RingPtr ring_;
  TermMap terms_;
};

/// Throws FieldMismatch / VariableMismatch if the rings differ.
void require_same_ring(const PolyRing& a, const PolyRing& b);

enum class ArithOp { Add, Sub, Mul, Neg };
/// Dispatching form of the ring operations; `b` is ignored for Neg.
Polynomial poly_arithmetic(ArithOp op, const Polynomial& a, const Polynomial& b);
Polynomial poly_scalar_mul(const Polynomial& a, const Rational& c);

/// Expression grammar: integers, fractions a/b, variables, + - * ^ and
/// parentheses. Throws SyntaxError, UnknownVariable, DivisionByZeroInCoefficient.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Terms in strictly descending order, e.g. "-x^3 + y^2", "u + 1/2".
std::string format_canonical(const Polynomial& p, const MonomialOrder& order);

/// Terms of p sorted in descending order.
std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& p,
                                                        const MonomialOrder& order);

}  // namespace mfw
