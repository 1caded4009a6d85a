#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfw/groebner.hpp"
#include "mfw/polynomial.hpp"

namespace mfw {

/// Q = k[vars], S = Q/(x_1..x_{c-1}), R = S/(x) = Q/(t).
enum class Level { Q = 0, S = 1, R = 2 };

std::string level_name(Level level);

/// Outcome of checking that t_1..t_c is a regular sequence inside n^2.
struct CiReport {
  struct Generator {
    bool in_n_squared = true;
    bool homogeneous = true;
  };
  std::vector<Generator> generators;
  bool all_in_n_squared = true;
  bool all_homogeneous = true;
  /// Set only when every generator is homogeneous.
  std::optional<int> quotient_dimension;
  std::optional<bool> regular;
  bool regularity_unchecked = false;
  std::size_t ambient_dimension = 0;

  bool passed() const { return all_in_n_squared && regular.value_or(true); }
};

CiReport validate_ci_presentation(const RingPtr& ring, const std::vector<Polynomial>& t_gens,
                                  const MonomialOrder& order);

/// The ring tower Q -> S -> R built from t_1..t_c and a nonzero element
/// xbar of V = (t)/n(t), given by its coordinates in the basis tbar_i.
///
/// The coordinate vector is completed to a basis of V by appending standard
/// unit vectors in index order whenever they raise the rank. Rows 2..c of the
/// completed basis define x_1..x_{c-1}; S is cut out by those, R by all of t.
class RingTower {
 public:
  /// Throws ZeroVector, FieldMismatch, DimensionMismatch, and
  /// PreconditionViolation when the presentation check fails and
  /// `allow_unchecked` is false.
  static std::shared_ptr<const RingTower> build(const RingPtr& ring, const MonomialOrder& order,
                                                std::vector<Polynomial> t_gens,
                                                std::vector<Rational> x_coords,
                                                bool allow_unchecked = false);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field; }
  const MonomialOrder& order() const { return order_; }
  std::size_t codimension() const { return t_gens_.size(); }

  const std::vector<Polynomial>& t_gens() const { return t_gens_; }
  const std::vector<Rational>& x_coords() const { return x_coords_; }
  const std::vector<std::vector<Rational>>& completed_basis() const { return completed_basis_; }
  /// x_1..x_{c-1}.
  const std::vector<Polynomial>& s_gens() const { return s_gens_; }
  const Polynomial& x_elem() const { return x_elem_; }
  const GroebnerBasis& s_basis() const { return s_basis_; }
  const GroebnerBasis& r_basis() const { return r_basis_; }
  const ExactDivider& divider() const { return divider_; }
  const CiReport& report() const { return report_; }

  /// Degree of x when x is homogeneous.
  std::optional<int> x_degree() const;
  /// True when x and every generator of the R ideal basis are homogeneous.
  bool is_graded() const;

  Polynomial normal_form(const Polynomial& p, Level level) const;
  /// q with p = x*q in S, in normal form. Throws NotDivisible.
  Polynomial divide_by_x(const Polynomial& p) const { return divider_.divide(p); }

  std::string format(const Polynomial& p) const { return format_canonical(p, order_); }

 private:
  RingTower(RingPtr ring, MonomialOrder order, ExactDivider divider)
      : ring_(std::move(ring)), order_(std::move(order)), x_elem_(ring_),
        divider_(std::move(divider)) {}

  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial> t_gens_;
  std::vector<Rational> x_coords_;
  std::vector<std::vector<Rational>> completed_basis_;
  std::vector<Polynomial> s_gens_;
  Polynomial x_elem_;
  GroebnerBasis s_basis_;
  GroebnerBasis r_basis_;
  ExactDivider divider_;
  CiReport report_;
};

using TowerPtr = std::shared_ptr<const RingTower>;

inline TowerPtr build_tower(const RingPtr& ring, const MonomialOrder& order,
                            std::vector<Polynomial> t_gens, std::vector<Rational> x_coords,
                            bool allow_unchecked = false) {
  return RingTower::build(ring, order, std::move(t_gens), std::move(x_coords), allow_unchecked);
}

/// An element of Q, S or R held in normal form for its level.
class RingElt {
 public:
  RingElt(TowerPtr tower, Level level, const Polynomial& value);

  const TowerPtr& tower() const { return tower_; }
  Level level() const { return level_; }
  const Polynomial& value() const { return value_; }

  RingElt operator+(const RingElt& o) const;
  RingElt operator-(const RingElt& o) const;
  RingElt operator*(const RingElt& o) const;
  bool operator==(const RingElt& o) const;

 private:
  void require_compatible(const RingElt& o) const;

  TowerPtr tower_;
  Level level_;
  Polynomial value_;
};

}  // namespace mfw
