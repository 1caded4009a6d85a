#pragma once

#include <string>

#include "mfw/matrix.hpp"

namespace mfw {

/// A matrix factorization (F, G, phi, psi) of x over S:
/// phi: F -> G is rank_g x rank_f, psi: G -> F is rank_f x rank_g, and
/// psi*phi = x*1_F, phi*psi = x*1_G.
class MatrixFactorization {
 public:
  /// Checks dimensions, level and both axioms. Throws DimensionMismatch,
  /// LevelMismatch, or AxiomViolation naming the first failing entry.
  static MatrixFactorization verify(std::size_t rank_f, std::size_t rank_g, RingMatrix phi,
                                    RingMatrix psi);
  static MatrixFactorization verify(RingMatrix phi, RingMatrix psi) {
    const std::size_t rf = phi.cols(), rg = phi.rows();
    return verify(rf, rg, std::move(phi), std::move(psi));
  }
  /// The rank-0 factorization.
  static MatrixFactorization zero(const TowerPtr& tower);

  const TowerPtr& tower() const { return phi_.tower(); }
  std::size_t rank_f() const { return phi_.cols(); }
  std::size_t rank_g() const { return phi_.rows(); }
  const RingMatrix& phi() const { return phi_; }
  const RingMatrix& psi() const { return psi_; }

  bool operator==(const MatrixFactorization& o) const { return phi_ == o.phi_ && psi_ == o.psi_; }

 private:
  MatrixFactorization(RingMatrix phi, RingMatrix psi) : phi_(std::move(phi)), psi_(std::move(psi)) {}

  RingMatrix phi_;
  RingMatrix psi_;
};

inline MatrixFactorization verify_mf(std::size_t rank_f, std::size_t rank_g, RingMatrix phi,
                                     RingMatrix psi) {
  return MatrixFactorization::verify(rank_f, rank_g, std::move(phi), std::move(psi));
}

/// det(phi) * det(psi) = sign * x^rank over S; returns the sign (+1 or -1).
/// Throws VerificationFailure if neither sign matches or x^rank vanishes.
int determinant_certificate(const MatrixFactorization& a);

/// A morphism theta = (f, g): f: F1 -> F2, g: G1 -> G2 with
/// g*phi1 = phi2*f and f*psi1 = psi2*g.
class MfMorphism {
 public:
  /// Throws DimensionMismatch, TowerMismatch or CommutationViolation.
  static MfMorphism verify(MatrixFactorization source, MatrixFactorization target, RingMatrix f,
                           RingMatrix g);
  static MfMorphism identity(const MatrixFactorization& a);
  static MfMorphism zero(const MatrixFactorization& source, const MatrixFactorization& target);

  const MatrixFactorization& source() const { return source_; }
  const MatrixFactorization& target() const { return target_; }
  const RingMatrix& f() const { return f_; }
  const RingMatrix& g() const { return g_; }

  /// Componentwise sums; throws EndpointMismatch.
  MfMorphism operator+(const MfMorphism& o) const;
  MfMorphism operator-(const MfMorphism& o) const;
  MfMorphism scaled(const Polynomial& r) const;
  bool operator==(const MfMorphism& o) const;

 private:
  MfMorphism(MatrixFactorization source, MatrixFactorization target, RingMatrix f, RingMatrix g)
      : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)), g_(std::move(g)) {}

  MatrixFactorization source_, target_;
  RingMatrix f_, g_;
};

inline MfMorphism verify_morphism(MatrixFactorization source, MatrixFactorization target,
                                  RingMatrix f, RingMatrix g) {
  return MfMorphism::verify(std::move(source), std::move(target), std::move(f), std::move(g));
}

/// second after first. Throws EndpointMismatch.
MfMorphism compose_morphisms(const MfMorphism& second, const MfMorphism& first);
inline MfMorphism identity_morphism(const MatrixFactorization& a) { return MfMorphism::identity(a); }

/// A homotopy (s, t) between theta and theta' (same endpoints), with
/// s: G1 -> F2, t: F1 -> G2 and
///   f - f' = s*phi1 + psi2*t,   g - g' = t*psi1 + phi2*s.
class MfHomotopy {
 public:
  /// Throws EndpointMismatch, DimensionMismatch or HomotopyViolation.
  static MfHomotopy verify(MfMorphism theta, MfMorphism theta_prime, RingMatrix s, RingMatrix t);

  const MfMorphism& theta() const { return theta_; }
  const MfMorphism& theta_prime() const { return theta_prime_; }
  const RingMatrix& s() const { return s_; }
  const RingMatrix& t() const { return t_; }

  /// (s + s', t + t') : theta ~ theta'' from theta ~ theta' and theta' ~ theta''.
  MfHomotopy then(const MfHomotopy& next) const;
  /// kappa*theta ~ kappa*theta'.
  MfHomotopy compose_left(const MfMorphism& kappa) const;
  /// theta*lambda ~ theta'*lambda.
  MfHomotopy compose_right(const MfMorphism& lambda) const;

 private:
  MfHomotopy(MfMorphism theta, MfMorphism theta_prime, RingMatrix s, RingMatrix t)
      : theta_(std::move(theta)), theta_prime_(std::move(theta_prime)), s_(std::move(s)),
        t_(std::move(t)) {}

  MfMorphism theta_, theta_prime_;
  RingMatrix s_, t_;
};

inline MfHomotopy verify_homotopy(MfMorphism theta, MfMorphism theta_prime, RingMatrix s,
                                  RingMatrix t) {
  return MfHomotopy::verify(std::move(theta), std::move(theta_prime), std::move(s), std::move(t));
}

/// (G, F, -psi, -phi).
MatrixFactorization suspend(const MatrixFactorization& a);

/// Block-diagonal sum. Throws TowerMismatch.
MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b);

/// The mapping cone of theta: A1 -> A2 with
///   phi_C = [[-psi1, 0], [g, phi2]] : G1+F2 -> F1+G2
///   psi_C = [[-phi1, 0], [f, psi2]] : F1+G2 -> G1+F2
/// and its natural maps i: A2 -> C, pi: C -> Sigma A1.
struct MappingCone {
  MatrixFactorization cone;
  MfMorphism inclusion;
  MfMorphism projection;
};
MappingCone mapping_cone(const MfMorphism& theta);

/// (F, G, psi^T, phi^T).
MatrixFactorization dual_mf(const MatrixFactorization& a);

/// Coker psi over R together with the data showing that x kills it and that
/// 0 -> G -> F is exact over S.
struct CokerPresentation {
  TowerPtr tower;
  /// psi reduced to R: the presentation matrix of Coker psi.
  RingMatrix presentation;
  /// psi over S: the injective map G -> F.
  RingMatrix psi;
  /// phi over S, witnessing x*1_F = psi*phi.
  RingMatrix certificate;
  /// det(phi) * det(psi) = det_sign * x^rank, nonzero in S.
  int det_sign = 1;
};
CokerPresentation coker_presentation(const MatrixFactorization& a);

}  // namespace mfw
