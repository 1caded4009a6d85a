#include "mfw/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "mfw/error.hpp"

namespace mfw {

// ---- Monomial -----------------------------------------------------------------

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = exps_[i] - divisor.exps_[i];
  return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

// ---- MonomialOrder --------------------------------------------------------------

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw InvalidArgument("variable precedence is not a permutation");
  }
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(Kind::Lex, std::move(p));
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(Kind::GrevLex, std::move(p));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != precedence_.size() || b.size() != precedence_.size()) {
    throw VariableMismatch("monomial length does not match the order's variable count");
  }
  if (kind_ == Kind::Lex) {
    for (std::size_t v : precedence_) {
      if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
  }
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da <=> db;
  // Equal degree: the smaller exponent in the last differing variable wins.
  for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const { return kind_ == Kind::Lex ? "lex" : "grevlex"; }

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& order) {
  return order.compare(a, b);
}

// ---- PolyRing -------------------------------------------------------------------

RingPtr make_ring(std::vector<std::string> vars, Field field) {
  if (vars.empty()) throw InvalidArgument("variable list is empty");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    bool ok = !v.empty() && (std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_');
    for (char ch : v) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
    if (!ok) throw InvalidArgument("'" + v + "' is not an ASCII identifier");
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable '" + v + "'");
  }
  return std::make_shared<const PolyRing>(PolyRing{std::move(vars), field});
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (&a == &b) return;
  if (!(a.field == b.field)) {
    throw FieldMismatch("operands over " + a.field.name() + " and " + b.field.name());
  }
  if (a.vars != b.vars) throw VariableMismatch("operands have different variable lists");
}

// ---- Polynomial -----------------------------------------------------------------

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  p.add_term(Monomial(ring->vars.size()), ring->field.canonical(c));
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(ring);
  p.add_term(Monomial::variable(ring->vars.size(), index), 1);
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(ring);
  p.add_term(m, ring->field.canonical(c));
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::uint64_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

bool Polynomial::all_terms_of_degree_at_least(std::uint64_t d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() >= d; });
}

bool Polynomial::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_one(); });
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw InvalidArgument("leading monomial of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (order.greater(it->first, best->first)) best = it;
  }
  return best->first;
}

Rational Polynomial::leading_coefficient(const MonomialOrder& order) const {
  return terms_.at(leading_monomial(order));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field().add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (ring_ != other.ring_) require_same_ring(*ring_, *other.ring_);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_compatible(other);
  const Field& f = field();
  for (const auto& [m, c] : other.terms_) add_term(m, f.neg(c));
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r = *this;
  r -= other;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_compatible(other);
  const Field& f = field();
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, f.mul(ca, cb));
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  const Field& f = field();
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, f.neg(c));
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  const Field& f = field();
  const Rational cc = f.canonical(c);
  Polynomial r(ring_);
  if (cc == 0) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, f.mul(a, cc));
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  const Field& f = field();
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [mm, a] : terms_) r.terms_.emplace(mm * m, f.mul(a, c));
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) return false;
  return terms_ == other.terms_;
}

Polynomial poly_arithmetic(ArithOp op, const Polynomial& a, const Polynomial& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Neg: return -a;
  }
  return a;
}

Polynomial poly_scalar_mul(const Polynomial& a, const Rational& c) { return a.scaled(c); }

// ---- formatting -----------------------------------------------------------------

std::vector<std::pair<Monomial, Rational>> sorted_terms(const Polynomial& p,
                                                        const MonomialOrder& order) {
  std::vector<std::pair<Monomial, Rational>> out(p.terms().begin(), p.terms().end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  return out;
}

namespace {

std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string format_canonical(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  const auto& vars = p.ring()->vars;
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(p, order)) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += format_monomial(m, vars);
    } else {
      out += format_rational(mag) + '*' + format_monomial(m, vars);
    }
  }
  return out;
}

}  // namespace mfw
