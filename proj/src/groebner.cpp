#include "mfw/groebner.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "mfw/error.hpp"

namespace mfw {

namespace {

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

using OrderedTerms = std::map<Monomial, Rational, Descending>;

struct Reducer {
  const Polynomial* poly;
  Monomial lm;
  Rational lc_inv;
};

std::vector<Reducer> make_reducers(const std::vector<Polynomial>& polys,
                                   const MonomialOrder& order,
                                   std::optional<std::size_t> skip = std::nullopt) {
  std::vector<Reducer> out;
  out.reserve(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (skip && *skip == i) {
      out.push_back({nullptr, Monomial(), 0});
      continue;
    }
    const Polynomial& g = polys[i];
    if (g.is_zero()) {
      out.push_back({nullptr, Monomial(), 0});
      continue;
    }
    const Monomial& lm = g.leading_monomial(order);
    out.push_back({&g, lm, g.field().inv(g.coefficient(lm))});
  }
  return out;
}

// Full multivariate division. When `cofactors` is non-null it must hold one
// zero polynomial per reducer and receives the quotients.
Polynomial reduce_impl(const Polynomial& p, const std::vector<Reducer>& reducers,
                       const MonomialOrder& order, std::vector<Polynomial>* cofactors) {
  const Field& field = p.field();
  OrderedTerms work(Descending{&order});
  for (const auto& [m, c] : p.terms()) work.emplace(m, c);
  Polynomial remainder(p.ring());

  while (!work.empty()) {
    auto head = work.begin();
    const Monomial m = head->first;
    const Rational c = head->second;
    const Reducer* hit = nullptr;
    std::size_t hit_index = 0;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (reducers[i].poly != nullptr && reducers[i].lm.divides(m)) {
        hit = &reducers[i];
        hit_index = i;
        break;
      }
    }
    if (hit == nullptr) {
      remainder.add_term(m, c);
      work.erase(head);
      continue;
    }
    const Monomial q = m.quotient(hit->lm);
    const Rational coef = field.mul(c, hit->lc_inv);
    for (const auto& [gm, gc] : hit->poly->terms()) {
      const Monomial key = gm * q;
      const Rational delta = field.mul(coef, gc);
      auto [it, inserted] = work.try_emplace(key, field.neg(delta));
      if (!inserted) {
        it->second = field.sub(it->second, delta);
        if (it->second == 0) work.erase(it);
      }
    }
    if (cofactors != nullptr) (*cofactors)[hit_index].add_term(q, coef);
  }
  return remainder;
}

using Row = std::vector<Polynomial>;

Row zero_row(const RingPtr& ring, std::size_t n) { return Row(n, Polynomial(ring)); }

void row_axpy(Row& target, const Row& source, const Polynomial& factor) {
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (!source[j].is_zero()) target[j] += factor * source[j];
  }
}

void row_scale(Row& row, const Rational& c) {
  for (auto& p : row) p = p.scaled(c);
}

struct BuchbergerOutput {
  std::vector<Polynomial> basis;
  std::vector<Row> representation;
};

BuchbergerOutput run_buchberger(const Ideal& ideal, bool track) {
  const MonomialOrder& order = ideal.order;
  const RingPtr& ring = ideal.ring;
  const Field& field = ring->field;
  const std::size_t ngens = ideal.generators.size();

  std::vector<Polynomial> g;
  std::vector<Row> repr;
  std::vector<Monomial> lms;

  auto append = [&](Polynomial poly, Row row) {
    const Monomial lm = poly.leading_monomial(order);
    const Rational inv = field.inv(poly.coefficient(lm));
    poly = poly.scaled(inv);
    if (track) row_scale(row, inv);
    g.push_back(std::move(poly));
    repr.push_back(std::move(row));
    lms.push_back(lm);
  };

  for (std::size_t j = 0; j < ngens; ++j) {
    const Polynomial& gen = ideal.generators[j];
    require_same_ring(*ring, *gen.ring());
    if (gen.is_zero()) continue;
    Row row;
    if (track) {
      row = zero_row(ring, ngens);
      row[j] = Polynomial::constant(ring, 1);
    }
    append(gen, std::move(row));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace_back(i, j);
  }
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::find(pending.begin(), pending.end(), std::make_pair(a, b)) != pending.end();
  };

  while (!pending.empty()) {
    std::size_t best = 0;
    Monomial best_lcm = Monomial::lcm(lms[pending[0].first], lms[pending[0].second]);
    for (std::size_t k = 1; k < pending.size(); ++k) {
      Monomial l = Monomial::lcm(lms[pending[k].first], lms[pending[k].second]);
      const auto cmp = order.compare(l, best_lcm);
      if (cmp < 0 || (cmp == 0 && pending[k] < pending[best])) {
        best = k;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

    if (Monomial::coprime(lms[i], lms[j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = lms[k].divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    const Monomial qi = best_lcm.quotient(lms[i]);
    const Monomial qj = best_lcm.quotient(lms[j]);
    Polynomial spoly = g[i].times_term(qi, 1) - g[j].times_term(qj, 1);
    Row srow;
    if (track) {
      srow = zero_row(ring, ngens);
      row_axpy(srow, repr[i], Polynomial::term(ring, qi, 1));
      row_axpy(srow, repr[j], Polynomial::term(ring, qj, -1));
    }
    std::vector<Polynomial> cof;
    if (track) cof = zero_row(ring, g.size());
    const auto reducers = make_reducers(g, order);
    Polynomial h = reduce_impl(spoly, reducers, order, track ? &cof : nullptr);
    if (h.is_zero()) continue;
    if (track) {
      for (std::size_t k = 0; k < cof.size(); ++k) {
        if (!cof[k].is_zero()) row_axpy(srow, repr[k], -cof[k]);
      }
    }
    append(std::move(h), std::move(srow));
    const std::size_t n = g.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.emplace_back(k, n);
  }

  // Minimalize: drop elements whose leading monomial is a multiple of another's.
  std::vector<bool> keep(g.size(), true);
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (lms[b].divides(lms[a]) && (lms[a] != lms[b] || b < a)) keep[a] = false;
    }
  }
  BuchbergerOutput out;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (!keep[a]) continue;
    out.basis.push_back(std::move(g[a]));
    if (track) out.representation.push_back(std::move(repr[a]));
  }

  // Interreduce tails; leading monomials are untouched by construction.
  for (std::size_t a = 0; a < out.basis.size(); ++a) {
    const auto reducers = make_reducers(out.basis, order, a);
    std::vector<Polynomial> cof;
    if (track) cof = zero_row(ring, out.basis.size());
    Polynomial reduced = reduce_impl(out.basis[a], reducers, order, track ? &cof : nullptr);
    if (track) {
      for (std::size_t k = 0; k < cof.size(); ++k) {
        if (!cof[k].is_zero()) row_axpy(out.representation[a], out.representation[k], -cof[k]);
      }
    }
    out.basis[a] = std::move(reduced);
  }

  std::vector<std::size_t> idx(out.basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(out.basis[a].leading_monomial(order),
                         out.basis[b].leading_monomial(order)) < 0;
  });
  BuchbergerOutput sorted;
  for (std::size_t k : idx) {
    sorted.basis.push_back(std::move(out.basis[k]));
    if (track) sorted.representation.push_back(std::move(out.representation[k]));
  }
  return sorted;
}

void require_basis_compatible(const Polynomial& p, const GroebnerBasis& g) {
  require_same_ring(*p.ring(), *g.ring);
}

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(basis.begin(), basis.end(),
                     [](const Polynomial& p) { return !p.is_zero() && p.is_constant(); });
}

GroebnerBasis buchberger_basis(const Ideal& ideal) {
  auto out = run_buchberger(ideal, false);
  return GroebnerBasis{ideal.ring, std::move(out.basis), ideal.order, true};
}

ExtendedBasis extended_buchberger_basis(const Ideal& ideal) {
  auto out = run_buchberger(ideal, true);
  return ExtendedBasis{GroebnerBasis{ideal.ring, std::move(out.basis), ideal.order, true},
                       std::move(out.representation)};
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  require_basis_compatible(p, g);
  if (g.basis.empty() || p.is_zero()) return p;
  return reduce_impl(p, make_reducers(g.basis, g.order), g.order, nullptr);
}

ReductionTrace reduce_with_cofactors(const Polynomial& p, const GroebnerBasis& g) {
  require_basis_compatible(p, g);
  std::vector<Polynomial> cof = zero_row(p.ring(), g.basis.size());
  Polynomial rem = reduce_impl(p, make_reducers(g.basis, g.order), g.order, &cof);
  return ReductionTrace{std::move(rem), std::move(cof)};
}

bool ideal_contains(const GroebnerBasis& g, const Polynomial& p) {
  return normal_form(p, g).is_zero();
}

namespace {

ExtendedBasis combine(const Polynomial& x, const GroebnerBasis& s_basis) {
  require_basis_compatible(x, s_basis);
  std::vector<Polynomial> gens;
  gens.push_back(x);
  gens.insert(gens.end(), s_basis.basis.begin(), s_basis.basis.end());
  return extended_buchberger_basis(Ideal{s_basis.ring, std::move(gens), s_basis.order});
}

}  // namespace

ExactDivider::ExactDivider(Polynomial x, GroebnerBasis s_basis)
    : x_(std::move(x)), s_basis_(std::move(s_basis)), combined_(combine(x_, s_basis_)) {}

Polynomial ExactDivider::divide(const Polynomial& p) const {
  ReductionTrace trace = reduce_with_cofactors(p, combined_.basis);
  if (!trace.remainder.is_zero()) {
    throw NotDivisible(format_canonical(p, s_basis_.order) + " is not divisible by " +
                       format_canonical(x_, s_basis_.order));
  }
  Polynomial q(p.ring());
  for (std::size_t k = 0; k < trace.cofactors.size(); ++k) {
    if (!trace.cofactors[k].is_zero()) q += trace.cofactors[k] * combined_.representation[k][0];
  }
  q = normal_form(q, s_basis_);
  if (!normal_form(p - x_ * q, s_basis_).is_zero()) {
    throw VerificationFailure("exact division produced a quotient that does not multiply back");
  }
  return q;
}

Polynomial exact_divide_by_nzd(const Polynomial& p, const Polynomial& x,
                               const GroebnerBasis& s_ideal) {
  return ExactDivider(x, s_ideal).divide(p);
}

int dimension_from_leading_monomials(const GroebnerBasis& g) {
  if (g.is_unit_ideal()) return -1;
  const std::size_t n = g.ring->vars.size();
  std::vector<std::uint64_t> supports;
  for (const auto& p : g.basis) {
    if (p.is_zero()) continue;
    const Monomial& lm = p.leading_monomial(g.order);
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (lm[v] > 0) mask |= std::uint64_t{1} << v;
    }
    supports.push_back(mask);
  }
  if (n > 24) throw InvalidArgument("too many variables for the independent-set search");
  int best = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    const int size = std::popcount(subset);
    if (size <= best) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(), [&](std::uint64_t s) {
      return (s & ~subset) == 0;
    });
    if (independent) best = size;
  }
  return best;
}

int quotient_dimension(const Ideal& ideal) {
  for (const auto& p : ideal.generators) {
    if (!p.is_homogeneous()) {
      throw NotHomogeneous("generator " + format_canonical(p, ideal.order) +
                           " is not homogeneous");
    }
  }
  return dimension_from_leading_monomials(buchberger_basis(ideal));
}

}  // namespace mfw
