#pragma once

#include <optional>

#include "mfw/mfcat.hpp"

namespace mfw {

/// The 2-periodic complex ... -> F/xF -phi-> G/xG -psi-> F/xF -> ... over R.
class PeriodicComplex {
 public:
  /// Throws LevelMismatch / DimensionMismatch, and VerificationFailure if a
  /// composite of the two differentials is nonzero.
  static PeriodicComplex make(RingMatrix phi_bar, RingMatrix psi_bar);

  const TowerPtr& tower() const { return phi_bar_.tower(); }
  const RingMatrix& phi_bar() const { return phi_bar_; }
  const RingMatrix& psi_bar() const { return psi_bar_; }
  std::size_t rank_f() const { return phi_bar_.cols(); }
  std::size_t rank_g() const { return phi_bar_.rows(); }
  /// Internal degree gained per full period: deg x for homogeneous x.
  std::optional<int> twist() const { return tower()->x_degree(); }

  /// The entrywise transpose (psi_bar^T, phi_bar^T), isomorphic to Hom_R(-, R).
  PeriodicComplex transpose() const;

  bool operator==(const PeriodicComplex& o) const {
    return phi_bar_ == o.phi_bar_ && psi_bar_ == o.psi_bar_;
  }

 private:
  PeriodicComplex(RingMatrix phi_bar, RingMatrix psi_bar)
      : phi_bar_(std::move(phi_bar)), psi_bar_(std::move(psi_bar)) {}

  RingMatrix phi_bar_, psi_bar_;
};

/// A chain map between periodic complexes whose components repeat in every
/// period: f_bar at F positions, g_bar at G positions.
class PeriodicChainMap {
 public:
  /// Throws CommutationViolation if g*phi1 != phi2*f or f*psi1 != psi2*g over R.
  static PeriodicChainMap make(PeriodicComplex source, PeriodicComplex target, RingMatrix f_bar,
                               RingMatrix g_bar);
  static PeriodicChainMap identity(const PeriodicComplex& c);

  const PeriodicComplex& source() const { return source_; }
  const PeriodicComplex& target() const { return target_; }
  const RingMatrix& f_bar() const { return f_bar_; }
  const RingMatrix& g_bar() const { return g_bar_; }

  PeriodicChainMap operator-(const PeriodicChainMap& o) const;
  bool operator==(const PeriodicChainMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && f_bar_ == o.f_bar_ && g_bar_ == o.g_bar_;
  }

 private:
  PeriodicChainMap(PeriodicComplex source, PeriodicComplex target, RingMatrix f_bar,
                   RingMatrix g_bar)
      : source_(std::move(source)), target_(std::move(target)), f_bar_(std::move(f_bar)),
        g_bar_(std::move(g_bar)) {}

  PeriodicComplex source_, target_;
  RingMatrix f_bar_, g_bar_;
};

PeriodicChainMap compose_chain_maps(const PeriodicChainMap& second, const PeriodicChainMap& first);

/// Reduction of an S-homotopy: (s_bar, t_bar) between the reduced chain maps.
struct PeriodicHomotopy {
  PeriodicChainMap delta;
  PeriodicChainMap delta_prime;
  RingMatrix s_bar;
  RingMatrix t_bar;
};

/// The functor T on objects, morphisms and homotopies. Every output is
/// re-verified over R.
PeriodicComplex reduce_object(const MatrixFactorization& a);
PeriodicChainMap reduce_morphism(const MfMorphism& theta);
PeriodicHomotopy reduce_homotopy(const MfHomotopy& h);

struct DualReductionReport {
  bool psi_transpose_commutes = false;  // reduce(psi^T) == reduce(psi)^T
  bool phi_transpose_commutes = false;  // reduce(phi^T) == reduce(phi)^T
  bool passed() const { return psi_transpose_commutes && phi_transpose_commutes; }
};
/// Compares reduce_object(dual_mf(a)) with the transpose of reduce_object(a).
DualReductionReport dual_reduction_check(const MatrixFactorization& a);

// ---- lifting algorithms -----------------------------------------------------------

/// Lifts to S of a nullhomotopy section of T(theta):
/// s1, s2: G1 -> F2 and t: F1 -> G2 with
///   f - s2*phi1 - psi2*t = 0 and g - t*psi1 - phi2*s1 = 0 over R.
class HomotopyTransportInput {
 public:
  /// Throws LevelMismatch, DimensionMismatch, or NotDivisible when a mod-x identity fails.
  static HomotopyTransportInput make(MfMorphism theta, RingMatrix s1, RingMatrix t, RingMatrix s2);

  const MfMorphism& theta() const { return theta_; }
  const RingMatrix& s1() const { return s1_; }
  const RingMatrix& t() const { return t_; }
  const RingMatrix& s2() const { return s2_; }

 private:
  HomotopyTransportInput(MfMorphism theta, RingMatrix s1, RingMatrix t, RingMatrix s2)
      : theta_(std::move(theta)), s1_(std::move(s1)), t_(std::move(t)), s2_(std::move(s2)) {}

  MfMorphism theta_;
  RingMatrix s1_, t_, s2_;
};

struct TransportResult {
  /// (s2, t + phi2*p) : theta ~ 0.
  MfHomotopy homotopy;
  /// p = (f - s2*phi1 - psi2*t)/x and q = (g - t*psi1 - phi2*s1)/x.
  RingMatrix p;
  RingMatrix q;
};

/// Turns a nullhomotopy of T(theta) into a nullhomotopy of theta over S.
/// Throws NotDivisible when the input identities fail mod x, and
/// VerificationFailure if p*psi1 = s1 - s2 + psi2*q or the output check fails.
TransportResult transport_nullhomotopy(const HomotopyTransportInput& input);

/// Lifts to S of the window g1 -> f0 -> g0 of a chain map between
/// T(source) and T(target):
///   phi2*f0 = g0*phi1 and psi2*g1 = f0*psi1 over R.
class ChainLiftInput {
 public:
  /// Throws DimensionMismatch, TowerMismatch, or NotDivisible when a square
  /// fails to commute mod x.
  static ChainLiftInput make(MatrixFactorization source, MatrixFactorization target, RingMatrix g1,
                             RingMatrix f0, RingMatrix g0);

  const MatrixFactorization& source() const { return source_; }
  const MatrixFactorization& target() const { return target_; }
  const RingMatrix& g1() const { return g1_; }
  const RingMatrix& f0() const { return f0_; }
  const RingMatrix& g0() const { return g0_; }

 private:
  ChainLiftInput(MatrixFactorization source, MatrixFactorization target, RingMatrix g1,
                 RingMatrix f0, RingMatrix g0)
      : source_(std::move(source)), target_(std::move(target)), g1_(std::move(g1)),
        f0_(std::move(f0)), g0_(std::move(g0)) {}

  MatrixFactorization source_, target_;
  RingMatrix g1_, f0_, g0_;
};

struct LiftResult {
  /// f = f0 - psi2*alpha + beta*phi1, g = g0 + phi2*beta.
  MfMorphism theta;
  /// alpha = (phi2*f0 - g0*phi1)/x : F1 -> G2, beta = (psi2*g1 - f0*psi1)/x : G1 -> F2.
  RingMatrix alpha;
  RingMatrix beta;
  /// Reductions of alpha and beta: the degree-zero part of a homotopy T(theta) ~ input.
  RingMatrix alpha_bar;
  RingMatrix beta_bar;
};

/// Builds a genuine morphism of matrix factorizations from a lifted chain map
/// window. Throws NotDivisible (input squares fail mod x) or VerificationFailure.
LiftResult lift_chain_map(const ChainLiftInput& input);

}  // namespace mfw
