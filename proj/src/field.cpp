#include "mfw/field.hpp"

#include <charconv>

#include "mfw/error.hpp"

namespace mfw {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

mpz_class reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime_u64(p)) {
    throw InvalidArgument("field modulus " + std::to_string(p) +
                          " is not a prime in [2, 2^31)");
  }
  Field f;
  f.kind_ = Kind::Prime;
  f.modulus_ = static_cast<std::uint32_t>(p);
  return f;
}

bool Field::try_canonical(const Rational& value, Rational& out) const {
  if (kind_ == Kind::Rationals) {
    out = value;
    out.canonicalize();
    return true;
  }
  mpz_class num = reduce_mod(value.get_num(), modulus_);
  mpz_class den = reduce_mod(value.get_den(), modulus_);
  if (den == 0) return false;
  if (den != 1) {
    mpz_class m = modulus_;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    num = reduce_mod(num * inv, modulus_);
  }
  out = Rational(num);
  return true;
}

Rational Field::canonical(const Rational& value) const {
  Rational out;
  if (!try_canonical(value, out)) {
    throw InvalidArgument("denominator vanishes in " + name());
  }
  return out;
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (kind_ == Kind::Rationals) return a + b;
  return Rational(reduce_mod(a.get_num() + b.get_num(), modulus_));
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (kind_ == Kind::Rationals) return a - b;
  return Rational(reduce_mod(a.get_num() - b.get_num(), modulus_));
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (kind_ == Kind::Rationals) return a * b;
  return Rational(reduce_mod(a.get_num() * b.get_num(), modulus_));
}

Rational Field::neg(const Rational& a) const {
  if (kind_ == Kind::Rationals) return -a;
  return Rational(reduce_mod(-a.get_num(), modulus_));
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  if (kind_ == Kind::Rationals) return 1 / a;
  mpz_class m = modulus_;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), m.get_mpz_t());
  return Rational(r);
}

std::string Field::name() const {
  if (kind_ == Kind::Rationals) return "QQ";
  return "GF(" + std::to_string(modulus_) + ")";
}

std::string Field::flag() const {
  if (kind_ == Kind::Rationals) return "qq";
  return "fp:" + std::to_string(modulus_);
}

Field parse_field(const std::string& text) {
  if (text == "qq" || text == "QQ") return Field::rationals();
  if (text.rfind("fp:", 0) == 0) {
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc{} && ptr == last && first != last) return Field::prime(p);
  }
  throw InvalidArgument("unrecognised field '" + text + "' (expected qq or fp:<p>)");
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

}  // namespace mfw
