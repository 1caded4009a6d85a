#include "mfw/mfcat.hpp"

#include <algorithm>
#include "mfw/error.hpp"

namespace mfw {

namespace {

void require_level_s(const RingMatrix& m, const char* what) {
  if (m.level() != Level::S) {
    throw LevelMismatch(std::string(what) + " must live over S, found level " +
                        level_name(m.level()));
  }
}

void require_shape(const RingMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionMismatch(std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " + std::to_string(rows) +
                            "x" + std::to_string(cols));
  }
}

template <class Violation>
void require_equal(const RingMatrix& found, const RingMatrix& expected, const char* identity) {
  if (auto diff = found.first_difference(expected)) {
    const auto [r, c] = *diff;
    const auto& tower = found.tower();
    throw Violation(identity, r, c, tower->format(expected(r, c)), tower->format(found(r, c)));
  }
}

RingMatrix vstack(const RingMatrix& top, const RingMatrix& bottom) {
  const auto& tw = top.tower();
  return RingMatrix::block(top, RingMatrix::zero(tw, top.level(), top.rows(), 0), bottom,
                           RingMatrix::zero(tw, top.level(), bottom.rows(), 0));
}

RingMatrix hstack(const RingMatrix& left, const RingMatrix& right) {
  const auto& tw = left.tower();
  return RingMatrix::block(left, right, RingMatrix::zero(tw, left.level(), 0, left.cols()),
                           RingMatrix::zero(tw, left.level(), 0, right.cols()));
}

void require_same_endpoints(const MfMorphism& a, const MfMorphism& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw EndpointMismatch("morphisms do not share source and target");
  }
}

}  // namespace

// ---- objects ----------------------------------------------------------------------

MatrixFactorization MatrixFactorization::verify(std::size_t rank_f, std::size_t rank_g,
                                                RingMatrix phi, RingMatrix psi) {
  require_level_s(phi, "phi");
  require_level_s(psi, "psi");
  if (phi.tower() != psi.tower()) throw TowerMismatch("phi and psi belong to different towers");
  require_shape(phi, rank_g, rank_f, "phi");
  require_shape(psi, rank_f, rank_g, "psi");
  const auto& tower = phi.tower();
  require_equal<AxiomViolation>(psi * phi, RingMatrix::x_identity(tower, Level::S, rank_f),
                                "psi*phi = x*1_F");
  require_equal<AxiomViolation>(phi * psi, RingMatrix::x_identity(tower, Level::S, rank_g),
                                "phi*psi = x*1_G");
  if (rank_f != rank_g) {
    throw VerificationFailure("axioms hold with rank F != rank G; x cannot be a non-zerodivisor");
  }
  return MatrixFactorization(std::move(phi), std::move(psi));
}

MatrixFactorization MatrixFactorization::zero(const TowerPtr& tower) {
  return MatrixFactorization(RingMatrix::zero(tower, Level::S, 0, 0),
                             RingMatrix::zero(tower, Level::S, 0, 0));
}

int determinant_certificate(const MatrixFactorization& a) {
  const auto& tower = a.tower();
  const Polynomial product =
      tower->normal_form(determinant(a.phi()) * determinant(a.psi()), Level::S);
  const Polynomial x_power =
      tower->normal_form(tower->x_elem().pow(static_cast<std::uint32_t>(a.rank_f())), Level::S);
  if (x_power.is_zero()) throw VerificationFailure("x^rank vanishes in S");
  if (product == x_power) return 1;
  if (product == -x_power) return -1;
  throw VerificationFailure("det(phi)*det(psi) = " + tower->format(product) + " is not +-" +
                            tower->format(x_power));
}

// ---- morphisms ----------------------------------------------------------------------

MfMorphism MfMorphism::verify(MatrixFactorization source, MatrixFactorization target,
                              RingMatrix f, RingMatrix g) {
  if (source.tower() != target.tower()) throw TowerMismatch("endpoints over different towers");
  require_level_s(f, "f");
  require_level_s(g, "g");
  require_shape(f, target.rank_f(), source.rank_f(), "f");
  require_shape(g, target.rank_g(), source.rank_g(), "g");
  require_equal<CommutationViolation>(g * source.phi(), target.phi() * f, "g*phi1 = phi2*f");
  require_equal<CommutationViolation>(f * source.psi(), target.psi() * g, "f*psi1 = psi2*g");
  return MfMorphism(std::move(source), std::move(target), std::move(f), std::move(g));
}

MfMorphism MfMorphism::identity(const MatrixFactorization& a) {
  return MfMorphism(a, a, RingMatrix::identity(a.tower(), Level::S, a.rank_f()),
                    RingMatrix::identity(a.tower(), Level::S, a.rank_g()));
}

MfMorphism MfMorphism::zero(const MatrixFactorization& source, const MatrixFactorization& target) {
  if (source.tower() != target.tower()) throw TowerMismatch("endpoints over different towers");
  return MfMorphism(source, target,
                    RingMatrix::zero(source.tower(), Level::S, target.rank_f(), source.rank_f()),
                    RingMatrix::zero(source.tower(), Level::S, target.rank_g(), source.rank_g()));
}

MfMorphism MfMorphism::operator+(const MfMorphism& o) const {
  require_same_endpoints(*this, o);
  return MfMorphism(source_, target_, f_ + o.f_, g_ + o.g_);
}

MfMorphism MfMorphism::operator-(const MfMorphism& o) const {
  require_same_endpoints(*this, o);
  return MfMorphism(source_, target_, f_ - o.f_, g_ - o.g_);
}

MfMorphism MfMorphism::scaled(const Polynomial& r) const {
  return MfMorphism(source_, target_, f_.scaled(r), g_.scaled(r));
}

bool MfMorphism::operator==(const MfMorphism& o) const {
  return source_ == o.source_ && target_ == o.target_ && f_ == o.f_ && g_ == o.g_;
}

MfMorphism compose_morphisms(const MfMorphism& second, const MfMorphism& first) {
  if (!(first.target() == second.source())) {
    throw EndpointMismatch("target of the first morphism is not the source of the second");
  }
  return MfMorphism::verify(first.source(), second.target(), second.f() * first.f(),
                            second.g() * first.g());
}

// ---- homotopies ---------------------------------------------------------------------

MfHomotopy MfHomotopy::verify(MfMorphism theta, MfMorphism theta_prime, RingMatrix s,
                              RingMatrix t) {
  require_same_endpoints(theta, theta_prime);
  const auto& a1 = theta.source();
  const auto& a2 = theta.target();
  require_level_s(s, "s");
  require_level_s(t, "t");
  require_shape(s, a2.rank_f(), a1.rank_g(), "s");
  require_shape(t, a2.rank_g(), a1.rank_f(), "t");
  require_equal<HomotopyViolation>(theta.f() - theta_prime.f(), s * a1.phi() + a2.psi() * t,
                                   "f - f' = s*phi1 + psi2*t");
  require_equal<HomotopyViolation>(theta.g() - theta_prime.g(), t * a1.psi() + a2.phi() * s,
                                   "g - g' = t*psi1 + phi2*s");
  return MfHomotopy(std::move(theta), std::move(theta_prime), std::move(s), std::move(t));
}

MfHomotopy MfHomotopy::then(const MfHomotopy& next) const {
  if (!(theta_prime_ == next.theta_)) {
    throw EndpointMismatch("homotopies do not chain: theta' differs from the next theta");
  }
  return verify(theta_, next.theta_prime_, s_ + next.s_, t_ + next.t_);
}

MfHomotopy MfHomotopy::compose_left(const MfMorphism& kappa) const {
  return verify(compose_morphisms(kappa, theta_), compose_morphisms(kappa, theta_prime_),
                kappa.f() * s_, kappa.g() * t_);
}

MfHomotopy MfHomotopy::compose_right(const MfMorphism& lambda) const {
  return verify(compose_morphisms(theta_, lambda), compose_morphisms(theta_prime_, lambda),
                s_ * lambda.g(), t_ * lambda.f());
}

// ---- constructions --------------------------------------------------------------------

MatrixFactorization suspend(const MatrixFactorization& a) {
  return MatrixFactorization::verify(a.rank_g(), a.rank_f(), -a.psi(), -a.phi());
}

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b) {
  if (a.tower() != b.tower()) throw TowerMismatch("summands over different towers");
  return MatrixFactorization::verify(RingMatrix::block_diagonal(a.phi(), b.phi()),
                                     RingMatrix::block_diagonal(a.psi(), b.psi()));
}

MappingCone mapping_cone(const MfMorphism& theta) {
  const auto& a1 = theta.source();
  const auto& a2 = theta.target();
  const auto& tw = a1.tower();
  const auto z = [&](std::size_t r, std::size_t c) { return RingMatrix::zero(tw, Level::S, r, c); };
  const auto one = [&](std::size_t n) { return RingMatrix::identity(tw, Level::S, n); };

  RingMatrix phi_c = RingMatrix::block(-a1.psi(), z(a1.rank_f(), a2.rank_f()), theta.g(), a2.phi());
  RingMatrix psi_c = RingMatrix::block(-a1.phi(), z(a1.rank_g(), a2.rank_g()), theta.f(), a2.psi());
  MatrixFactorization cone = MatrixFactorization::verify(std::move(phi_c), std::move(psi_c));

  MfMorphism inclusion = MfMorphism::verify(a2, cone, vstack(z(a1.rank_g(), a2.rank_f()), one(a2.rank_f())),
                                            vstack(z(a1.rank_f(), a2.rank_g()), one(a2.rank_g())));
  MfMorphism projection =
      MfMorphism::verify(cone, suspend(a1), hstack(one(a1.rank_g()), z(a1.rank_g(), a2.rank_f())),
                         hstack(one(a1.rank_f()), z(a1.rank_f(), a2.rank_g())));
  return MappingCone{std::move(cone), std::move(inclusion), std::move(projection)};
}

MatrixFactorization dual_mf(const MatrixFactorization& a) {
  return MatrixFactorization::verify(a.rank_f(), a.rank_g(), a.psi().transpose(),
                                     a.phi().transpose());
}

CokerPresentation coker_presentation(const MatrixFactorization& a) {
  const auto& tower = a.tower();
  require_equal<AxiomViolation>(a.psi() * a.phi(),
                                RingMatrix::x_identity(tower, Level::S, a.rank_f()),
                                "psi*phi = x*1_F");
  const int sign = determinant_certificate(a);
  return CokerPresentation{tower, a.psi().reduced_to(Level::R), a.psi(), a.phi(), sign};
}

}  // namespace mfw
