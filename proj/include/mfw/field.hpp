#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mfw {

using Rational = mpq_class;

/// Coefficient field: the rationals or a prime field F_p.
///
/// Elements of both fields are carried as `Rational`. Over F_p the canonical
/// representative is the integer in [0, p); every operation returns it.
class Field {
 public:
  enum class Kind { Rationals, Prime };

  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws InvalidArgument unless p is a prime with 2 <= p < 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::uint32_t modulus() const { return modulus_; }

  /// Maps an arbitrary rational into the field. Over F_p a denominator
  /// divisible by p has no image; returns false in that case.
  bool try_canonical(const Rational& value, Rational& out) const;
  /// As try_canonical, but throws InvalidArgument on a vanishing denominator.
  Rational canonical(const Rational& value) const;

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  /// Throws InvalidArgument for zero.
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  /// "QQ" or "GF(p)".
  std::string name() const;
  /// Flag form accepted by the CLI: "qq" or "fp:<p>".
  std::string flag() const;

  bool operator==(const Field&) const = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint32_t modulus_ = 0;
};

/// Parses "qq" or "fp:<p>". Throws InvalidArgument.
Field parse_field(const std::string& text);

/// Decimal form "a" or "a/b" of a rational in lowest terms.
std::string format_rational(const Rational& value);

}  // namespace mfw
