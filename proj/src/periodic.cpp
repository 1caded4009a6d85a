#include "mfw/periodic.hpp"

#include "mfw/error.hpp"

namespace mfw {

namespace {

void require_level(const RingMatrix& m, Level level, const char* what) {
  if (m.level() != level) {
    throw LevelMismatch(std::string(what) + " must live over " + level_name(level) + ", found " +
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

// Entries of m must vanish over R, i.e. be divisible by x over S.
void require_zero_mod_x(const RingMatrix& m, const char* identity) {
  const RingMatrix reduced = m.reduced_to(Level::R);
  for (std::size_t i = 0; i < reduced.rows(); ++i) {
    for (std::size_t j = 0; j < reduced.cols(); ++j) {
      if (!reduced(i, j).is_zero()) {
        throw NotDivisible(std::string(identity) + " fails mod x at entry (" +
                           std::to_string(i + 1) + ", " + std::to_string(j + 1) + "): " +
                           m.tower()->format(m(i, j)) + " is not a multiple of x");
      }
    }
  }
}

}  // namespace

// ---- complexes and chain maps ------------------------------------------------------------

PeriodicComplex PeriodicComplex::make(RingMatrix phi_bar, RingMatrix psi_bar) {
  require_level(phi_bar, Level::R, "phi_bar");
  require_level(psi_bar, Level::R, "psi_bar");
  if (phi_bar.tower() != psi_bar.tower()) throw TowerMismatch("differentials over different towers");
  require_shape(psi_bar, phi_bar.cols(), phi_bar.rows(), "psi_bar");
  if (!(psi_bar * phi_bar).is_zero() || !(phi_bar * psi_bar).is_zero()) {
    throw VerificationFailure("periodic differentials do not compose to zero over R");
  }
  return PeriodicComplex(std::move(phi_bar), std::move(psi_bar));
}

PeriodicComplex PeriodicComplex::transpose() const {
  return make(psi_bar_.transpose(), phi_bar_.transpose());
}

PeriodicChainMap PeriodicChainMap::make(PeriodicComplex source, PeriodicComplex target,
                                        RingMatrix f_bar, RingMatrix g_bar) {
  require_level(f_bar, Level::R, "f_bar");
  require_level(g_bar, Level::R, "g_bar");
  require_shape(f_bar, target.rank_f(), source.rank_f(), "f_bar");
  require_shape(g_bar, target.rank_g(), source.rank_g(), "g_bar");
  require_equal<CommutationViolation>(g_bar * source.phi_bar(), target.phi_bar() * f_bar,
                                      "g*phi1 = phi2*f over R");
  require_equal<CommutationViolation>(f_bar * source.psi_bar(), target.psi_bar() * g_bar,
                                      "f*psi1 = psi2*g over R");
  return PeriodicChainMap(std::move(source), std::move(target), std::move(f_bar),
                          std::move(g_bar));
}

PeriodicChainMap PeriodicChainMap::identity(const PeriodicComplex& c) {
  return PeriodicChainMap(c, c, RingMatrix::identity(c.tower(), Level::R, c.rank_f()),
                          RingMatrix::identity(c.tower(), Level::R, c.rank_g()));
}

PeriodicChainMap PeriodicChainMap::operator-(const PeriodicChainMap& o) const {
  if (!(source_ == o.source_) || !(target_ == o.target_)) {
    throw EndpointMismatch("chain maps do not share source and target");
  }
  return PeriodicChainMap(source_, target_, f_bar_ - o.f_bar_, g_bar_ - o.g_bar_);
}

PeriodicChainMap compose_chain_maps(const PeriodicChainMap& second, const PeriodicChainMap& first) {
  if (!(first.target() == second.source())) {
    throw EndpointMismatch("target of the first chain map is not the source of the second");
  }
  return PeriodicChainMap::make(first.source(), second.target(), second.f_bar() * first.f_bar(),
                                second.g_bar() * first.g_bar());
}

// ---- the functor T ------------------------------------------------------------------------

PeriodicComplex reduce_object(const MatrixFactorization& a) {
  return PeriodicComplex::make(a.phi().reduced_to(Level::R), a.psi().reduced_to(Level::R));
}

PeriodicChainMap reduce_morphism(const MfMorphism& theta) {
  return PeriodicChainMap::make(reduce_object(theta.source()), reduce_object(theta.target()),
                                theta.f().reduced_to(Level::R), theta.g().reduced_to(Level::R));
}

PeriodicHomotopy reduce_homotopy(const MfHomotopy& h) {
  PeriodicChainMap delta = reduce_morphism(h.theta());
  PeriodicChainMap delta_prime = reduce_morphism(h.theta_prime());
  RingMatrix s_bar = h.s().reduced_to(Level::R);
  RingMatrix t_bar = h.t().reduced_to(Level::R);
  const auto& c1 = delta.source();
  const auto& c2 = delta.target();
  require_equal<HomotopyViolation>(delta.f_bar() - delta_prime.f_bar(),
                                   s_bar * c1.phi_bar() + c2.psi_bar() * t_bar,
                                   "f - f' = s*phi1 + psi2*t over R");
  require_equal<HomotopyViolation>(delta.g_bar() - delta_prime.g_bar(),
                                   t_bar * c1.psi_bar() + c2.phi_bar() * s_bar,
                                   "g - g' = t*psi1 + phi2*s over R");
  return PeriodicHomotopy{std::move(delta), std::move(delta_prime), std::move(s_bar),
                          std::move(t_bar)};
}

DualReductionReport dual_reduction_check(const MatrixFactorization& a) {
  const PeriodicComplex reduced_dual = reduce_object(dual_mf(a));
  const PeriodicComplex transposed = reduce_object(a).transpose();
  DualReductionReport report;
  report.psi_transpose_commutes = reduced_dual.phi_bar() == transposed.phi_bar();
  report.phi_transpose_commutes = reduced_dual.psi_bar() == transposed.psi_bar();
  return report;
}

// ---- nullhomotopy transport ------------------------------------------------------------------

HomotopyTransportInput HomotopyTransportInput::make(MfMorphism theta, RingMatrix s1, RingMatrix t,
                                                    RingMatrix s2) {
  const auto& a1 = theta.source();
  const auto& a2 = theta.target();
  for (const auto* m : {&s1, &t, &s2}) require_level(*m, Level::S, "lifted diagonal");
  require_shape(s1, a2.rank_f(), a1.rank_g(), "s1");
  require_shape(s2, a2.rank_f(), a1.rank_g(), "s2");
  require_shape(t, a2.rank_g(), a1.rank_f(), "t");
  require_zero_mod_x(theta.f() - s2 * a1.phi() - a2.psi() * t, "f - s2*phi1 - psi2*t = 0");
  require_zero_mod_x(theta.g() - t * a1.psi() - a2.phi() * s1, "g - t*psi1 - phi2*s1 = 0");
  return HomotopyTransportInput(std::move(theta), std::move(s1), std::move(t), std::move(s2));
}

TransportResult transport_nullhomotopy(const HomotopyTransportInput& input) {
  const MfMorphism& theta = input.theta();
  const auto& a1 = theta.source();
  const auto& a2 = theta.target();
  const RingMatrix& s1 = input.s1();
  const RingMatrix& t = input.t();
  const RingMatrix& s2 = input.s2();

  RingMatrix p = (theta.f() - s2 * a1.phi() - a2.psi() * t).divided_by_x();
  RingMatrix q = (theta.g() - t * a1.psi() - a2.phi() * s1).divided_by_x();
  if (!(p * a1.psi() == s1 - s2 + a2.psi() * q)) {
    throw VerificationFailure("p*psi1 = s1 - s2 + psi2*q does not hold");
  }
  RingMatrix t_prime = t + a2.phi() * p;
  try {
    MfHomotopy h = MfHomotopy::verify(theta, MfMorphism::zero(a1, a2), s2, std::move(t_prime));
    return TransportResult{std::move(h), std::move(p), std::move(q)};
  } catch (const EntryViolation& e) {
    throw VerificationFailure(std::string("transported homotopy does not verify: ") + e.what());
  }
}

// ---- chain map lifting ------------------------------------------------------------------------

ChainLiftInput ChainLiftInput::make(MatrixFactorization source, MatrixFactorization target,
                                    RingMatrix g1, RingMatrix f0, RingMatrix g0) {
  if (source.tower() != target.tower()) throw TowerMismatch("endpoints over different towers");
  for (const auto* m : {&g1, &f0, &g0}) require_level(*m, Level::S, "lifted chain map component");
  require_shape(g1, target.rank_g(), source.rank_g(), "g1");
  require_shape(f0, target.rank_f(), source.rank_f(), "f0");
  require_shape(g0, target.rank_g(), source.rank_g(), "g0");
  require_zero_mod_x(target.phi() * f0 - g0 * source.phi(), "phi2*f0 = g0*phi1");
  require_zero_mod_x(target.psi() * g1 - f0 * source.psi(), "psi2*g1 = f0*psi1");
  return ChainLiftInput(std::move(source), std::move(target), std::move(g1), std::move(f0),
                        std::move(g0));
}

LiftResult lift_chain_map(const ChainLiftInput& input) {
  const auto& a1 = input.source();
  const auto& a2 = input.target();
  const RingMatrix& g1 = input.g1();
  const RingMatrix& f0 = input.f0();
  const RingMatrix& g0 = input.g0();

  RingMatrix alpha = (a2.phi() * f0 - g0 * a1.phi()).divided_by_x();
  RingMatrix beta = (a2.psi() * g1 - f0 * a1.psi()).divided_by_x();
  if (!(a2.psi() * alpha * a1.psi() == f0 * a1.psi() - a2.psi() * g0)) {
    throw VerificationFailure("psi2*alpha*psi1 = f0*psi1 - psi2*g0 does not hold");
  }
  RingMatrix f = f0 - a2.psi() * alpha + beta * a1.phi();
  RingMatrix g = g0 + a2.phi() * beta;

  RingMatrix alpha_bar = alpha.reduced_to(Level::R);
  RingMatrix beta_bar = beta.reduced_to(Level::R);
  const RingMatrix f_bar = f.reduced_to(Level::R);
  const RingMatrix f0_bar = f0.reduced_to(Level::R);
  const RingMatrix phi1_bar = a1.phi().reduced_to(Level::R);
  const RingMatrix psi2_bar = a2.psi().reduced_to(Level::R);
  if (!(f_bar - f0_bar == -(psi2_bar * alpha_bar) + beta_bar * phi1_bar)) {
    throw VerificationFailure("f - f0 = -psi2*alpha + beta*phi1 does not hold over R");
  }
  try {
    MfMorphism theta = MfMorphism::verify(a1, a2, std::move(f), std::move(g));
    return LiftResult{std::move(theta), std::move(alpha), std::move(beta), std::move(alpha_bar),
                      std::move(beta_bar)};
  } catch (const EntryViolation& e) {
    throw VerificationFailure(std::string("lifted pair is not a morphism: ") + e.what());
  }
}

}  // namespace mfw
