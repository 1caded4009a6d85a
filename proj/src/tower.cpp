#include "mfw/tower.hpp"

#include <algorithm>

#include "mfw/error.hpp"
#include "mfw/linear.hpp"

namespace mfw {

std::string level_name(Level level) {
  switch (level) {
    case Level::Q: return "Q";
    case Level::S: return "S";
    case Level::R: return "R";
  }
  return "?";
}

CiReport validate_ci_presentation(const RingPtr& ring, const std::vector<Polynomial>& t_gens,
                                  const MonomialOrder& order) {
  CiReport report;
  report.ambient_dimension = ring->vars.size();
  for (const auto& t : t_gens) {
    require_same_ring(*ring, *t.ring());
    CiReport::Generator g;
    g.in_n_squared = !t.is_zero() && t.all_terms_of_degree_at_least(2);
    g.homogeneous = t.is_homogeneous();
    report.all_in_n_squared = report.all_in_n_squared && g.in_n_squared;
    report.all_homogeneous = report.all_homogeneous && g.homogeneous;
    report.generators.push_back(g);
  }
  if (report.all_homogeneous) {
    const int dim = quotient_dimension(Ideal{ring, t_gens, order});
    report.quotient_dimension = dim;
    report.regular = dim == static_cast<int>(ring->vars.size()) - static_cast<int>(t_gens.size());
  } else {
    report.regularity_unchecked = true;
  }
  return report;
}

std::shared_ptr<const RingTower> RingTower::build(const RingPtr& ring, const MonomialOrder& order,
                                                  std::vector<Polynomial> t_gens,
                                                  std::vector<Rational> x_coords,
                                                  bool allow_unchecked) {
  const Field& field = ring->field;
  if (order.nvars() != ring->vars.size()) {
    throw VariableMismatch("monomial order has the wrong number of variables");
  }
  if (t_gens.empty()) throw InvalidArgument("at least one generator t_i is required");
  if (x_coords.size() != t_gens.size()) {
    throw DimensionMismatch("x has " + std::to_string(x_coords.size()) +
                            " coordinates but there are " + std::to_string(t_gens.size()) +
                            " generators");
  }
  for (auto& c : x_coords) {
    Rational v;
    if (!field.try_canonical(c, v)) throw FieldMismatch("coordinate has no image in " + field.name());
    c = v;
  }
  if (std::all_of(x_coords.begin(), x_coords.end(), [](const Rational& c) { return c == 0; })) {
    throw ZeroVector();
  }

  CiReport report = validate_ci_presentation(ring, t_gens, order);
  if (!report.passed() && !allow_unchecked) {
    throw PreconditionViolation(!report.all_in_n_squared
                                    ? "a generator t_i is not contained in n^2"
                                    : "t is not a regular sequence (dimension check failed)");
  }

  const std::size_t c = t_gens.size();
  std::vector<std::vector<Rational>> basis{x_coords};
  for (std::size_t e = 0; e < c && basis.size() < c; ++e) {
    std::vector<Rational> unit(c, Rational(0));
    unit[e] = 1;
    auto candidate = basis;
    candidate.push_back(unit);
    if (field_rank(field, candidate) == candidate.size()) basis = std::move(candidate);
  }

  auto combine = [&](const std::vector<Rational>& row) {
    Polynomial p(ring);
    for (std::size_t i = 0; i < c; ++i) {
      if (row[i] != 0) p += t_gens[i].scaled(row[i]);
    }
    return p;
  };
  Polynomial x_elem = combine(basis[0]);
  std::vector<Polynomial> s_gens;
  for (std::size_t k = 1; k < c; ++k) s_gens.push_back(combine(basis[k]));

  GroebnerBasis s_basis = buchberger_basis(Ideal{ring, s_gens, order});
  std::vector<Polynomial> r_gens = s_gens;
  r_gens.push_back(x_elem);
  GroebnerBasis r_basis = buchberger_basis(Ideal{ring, r_gens, order});
  ExactDivider divider(x_elem, s_basis);

  std::shared_ptr<RingTower> tower(new RingTower(ring, order, std::move(divider)));
  tower->t_gens_ = std::move(t_gens);
  tower->x_coords_ = std::move(x_coords);
  tower->completed_basis_ = std::move(basis);
  tower->s_gens_ = std::move(s_gens);
  tower->x_elem_ = std::move(x_elem);
  tower->s_basis_ = std::move(s_basis);
  tower->r_basis_ = std::move(r_basis);
  tower->report_ = std::move(report);
  return tower;
}

std::optional<int> RingTower::x_degree() const {
  if (x_elem_.is_zero() || !x_elem_.is_homogeneous()) return std::nullopt;
  return static_cast<int>(*x_elem_.degree());
}

bool RingTower::is_graded() const {
  auto homogeneous = [](const GroebnerBasis& g) {
    return std::all_of(g.basis.begin(), g.basis.end(),
                       [](const Polynomial& p) { return p.is_homogeneous(); });
  };
  return x_degree().has_value() && homogeneous(s_basis_) && homogeneous(r_basis_);
}

Polynomial RingTower::normal_form(const Polynomial& p, Level level) const {
  switch (level) {
    case Level::Q: return p;
    case Level::S: return mfw::normal_form(p, s_basis_);
    case Level::R: return mfw::normal_form(p, r_basis_);
  }
  return p;
}

// ---- RingElt ----------------------------------------------------------------------

RingElt::RingElt(TowerPtr tower, Level level, const Polynomial& value)
    : tower_(std::move(tower)), level_(level), value_(tower_->normal_form(value, level)) {}

void RingElt::require_compatible(const RingElt& o) const {
  if (tower_ != o.tower_) throw TowerMismatch("ring elements belong to different towers");
  if (level_ != o.level_) {
    throw LevelMismatch("ring elements at levels " + level_name(level_) + " and " +
                        level_name(o.level_));
  }
}

RingElt RingElt::operator+(const RingElt& o) const {
  require_compatible(o);
  return RingElt(tower_, level_, value_ + o.value_);
}

RingElt RingElt::operator-(const RingElt& o) const {
  require_compatible(o);
  return RingElt(tower_, level_, value_ - o.value_);
}

RingElt RingElt::operator*(const RingElt& o) const {
  require_compatible(o);
  return RingElt(tower_, level_, value_ * o.value_);
}

bool RingElt::operator==(const RingElt& o) const {
  return tower_ == o.tower_ && level_ == o.level_ && value_ == o.value_;
}

}  // namespace mfw
