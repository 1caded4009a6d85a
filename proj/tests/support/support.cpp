#include "support.hpp"

#include <map>

#include "mfw/workbench.hpp"

namespace mfw::testing {

RingPtr ring_of(const std::vector<std::string>& vars, const Field& field) {
  return make_ring(vars, field);
}

Polynomial poly(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(ring, t));
  return out;
}

RingMatrix mat(const TowerPtr& tower, const std::string& literal, Level level) {
  const auto cells = split_matrix_literal(literal, 0);
  std::vector<Polynomial> entries;
  for (const auto& row : cells) {
    for (const auto& e : row) entries.push_back(poly(tower->ring(), e));
  }
  const std::size_t rows = cells.size();
  const std::size_t cols = rows == 0 ? 0 : cells.front().size();
  return RingMatrix::from_entries(tower, level, rows, cols, entries);
}

// ---- fixtures ----------------------------------------------------------------------------

TowerPtr uv_tower(const Field& field) {
  auto ring = ring_of({"u", "v"}, field);
  return build_tower(ring, MonomialOrder::grevlex(2), polys(ring, {"u*v"}), {Rational(1)});
}

TowerPtr sos_tower(const Field& field) {
  auto ring = ring_of({"u", "v"}, field);
  return build_tower(ring, MonomialOrder::grevlex(2), polys(ring, {"u^2 + v^2"}), {Rational(1)});
}

TowerPtr y2_tower(const Field& field) {
  auto ring = ring_of({"x", "y"}, field);
  return build_tower(ring, MonomialOrder::grevlex(2), polys(ring, {"x^2", "y^2"}),
                     {Rational(1), Rational(0)});
}

TowerPtr cusp_tower(const Field& field) {
  auto ring = ring_of({"x", "y"}, field);
  return build_tower(ring, MonomialOrder::lex(2), polys(ring, {"x^2", "y^2 - x^3"}),
                     {Rational(1), Rational(0)});
}

std::vector<TowerPtr> corpus_towers(const Field& field) {
  return {uv_tower(field), sos_tower(field), y2_tower(field), cusp_tower(field)};
}

std::vector<MatrixFactorization> corpus_objects(const TowerPtr& tower) {
  const auto& vars = tower->ring()->vars;
  const std::string t0 = tower->format(tower->t_gens()[0]);
  std::vector<MatrixFactorization> out;
  if (vars[0] == "u" && t0 == "u*v") {
    out.push_back(verify_mf(1, 1, mat(tower, "[[u]]"), mat(tower, "[[v]]")));
    out.push_back(verify_mf(1, 1, mat(tower, "[[v]]"), mat(tower, "[[u]]")));
  } else if (vars[0] == "u") {
    out.push_back(verify_mf(2, 2, mat(tower, "[[u, v], [-v, u]]"), mat(tower, "[[u, -v], [v, u]]")));
  } else if (tower->s_gens().size() == 1 && tower->format(tower->s_gens()[0]) == "y^2") {
    out.push_back(verify_mf(1, 1, mat(tower, "[[x]]"), mat(tower, "[[x]]")));
    out.push_back(verify_mf(2, 2, mat(tower, "[[x, y], [0, x]]"), mat(tower, "[[x, -y], [0, x]]")));
  } else {
    out.push_back(verify_mf(1, 1, mat(tower, "[[x]]"), mat(tower, "[[x]]")));
    out.push_back(verify_mf(1, 1, mat(tower, "[[x^2]]"), mat(tower, "[[1]]")));
  }
  return out;
}

// ---- oracles -------------------------------------------------------------------------------

Polynomial schoolbook_product(const Polynomial& a, const Polynomial& b) {
  std::map<std::vector<std::uint32_t>, Rational> acc;
  const Field& field = a.field();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<std::uint32_t> e(ma.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma[i] + mb[i];
      Rational& slot = acc[e];
      slot = field.add(slot, field.mul(ca, cb));
    }
  }
  Polynomial out(a.ring());
  for (const auto& [e, c] : acc) {
    if (c != 0) out.add_term(Monomial(e), c);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == n) {
      e[var] = left;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

namespace {

// Rank of a rational matrix by plain fraction-exact elimination.
std::size_t rank_qq(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class k = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= k * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool brute_force_member(const Polynomial& p, const std::vector<Polynomial>& gens) {
  if (p.is_zero()) return true;
  const std::size_t n = p.nvars();
  const auto d = static_cast<std::uint32_t>(*p.degree());
  const auto targets = monomials_of_degree(n, d);
  std::map<Monomial, std::size_t> row;
  for (const auto& m : targets) row.emplace(m, row.size());
  std::vector<std::vector<mpq_class>> columns;
  for (const auto& g : gens) {
    if (g.is_zero() || *g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(n, d - static_cast<std::uint32_t>(*g.degree()))) {
      std::vector<mpq_class> col(targets.size(), 0);
      for (const auto& [gm, gc] : g.terms()) col[row.at(gm * m)] = gc;
      columns.push_back(std::move(col));
    }
  }
  std::vector<mpq_class> rhs(targets.size(), 0);
  for (const auto& [m, c] : p.terms()) rhs[row.at(m)] = c;
  std::vector<std::vector<mpq_class>> a(targets.size()), ab(targets.size());
  for (std::size_t r = 0; r < targets.size(); ++r) {
    for (const auto& col : columns) a[r].push_back(col[r]);
    ab[r] = a[r];
    ab[r].push_back(rhs[r]);
  }
  return rank_qq(a) == rank_qq(ab);
}

// ---- random data --------------------------------------------------------------------------

Rational Random::coefficient(bool fractions) {
  int n = 0;
  while (n == 0) n = integer(-5, 5);
  if (!fractions || coin()) return Rational(n);
  return Rational(n, integer(1, 4));
}

Polynomial Random::polynomial(const RingPtr& ring, int max_terms, int max_degree, bool fractions) {
  Polynomial p(ring);
  const int terms = integer(0, max_terms);
  for (int k = 0; k < terms; ++k) {
    std::vector<std::uint32_t> e(ring->vars.size(), 0);
    int left = integer(0, max_degree);
    for (std::size_t i = 0; i < e.size() && left > 0; ++i) {
      const int take = i + 1 == e.size() ? left : integer(0, left);
      e[i] = static_cast<std::uint32_t>(take);
      left -= take;
    }
    Rational c;
    if (!ring->field.try_canonical(coefficient(fractions), c)) continue;
    p.add_term(Monomial(e), c);
  }
  return p;
}

Polynomial Random::homogeneous(const RingPtr& ring, int degree, int max_terms) {
  Polynomial p(ring);
  if (degree < 0) return p;
  const auto monos = monomials_of_degree(ring->vars.size(), static_cast<std::uint32_t>(degree));
  const int terms = integer(0, max_terms);
  for (int k = 0; k < terms; ++k) {
    p.add_term(pick(monos), ring->field.canonical(coefficient()));
  }
  return p;
}

RingMatrix Random::matrix(const TowerPtr& tower, std::size_t rows, std::size_t cols,
                          int max_terms, int max_degree, Level level) {
  std::vector<Polynomial> entries;
  for (std::size_t k = 0; k < rows * cols; ++k) {
    entries.push_back(polynomial(tower->ring(), max_terms, max_degree));
  }
  return RingMatrix::from_entries(tower, level, rows, cols, entries);
}

// ---- categorical data ------------------------------------------------------------------------

RandomMorphism random_morphism(Random& rng, const MatrixFactorization& a1,
                               const MatrixFactorization& a2, bool add_identity_multiple) {
  const auto& tower = a1.tower();
  RingMatrix s = rng.matrix(tower, a2.rank_f(), a1.rank_g(), 2, 2);
  RingMatrix t = rng.matrix(tower, a2.rank_g(), a1.rank_f(), 2, 2);
  RingMatrix f = s * a1.phi() + a2.psi() * t;
  RingMatrix g = t * a1.psi() + a2.phi() * s;
  if (add_identity_multiple && a1 == a2) {
    const Polynomial r = rng.polynomial(tower->ring(), 2, 2);
    f = f + RingMatrix::identity(tower, Level::S, a1.rank_f()).scaled(r);
    g = g + RingMatrix::identity(tower, Level::S, a1.rank_g()).scaled(r);
  }
  return RandomMorphism{verify_morphism(a1, a2, std::move(f), std::move(g)), std::move(s),
                        std::move(t)};
}

RandomMorphism random_homogeneous_morphism(Random& rng, const MatrixFactorization& a1,
                                           const MatrixFactorization& a2, int degree,
                                           bool add_identity_multiple) {
  const auto& tower = a1.tower();
  const auto& ring = tower->ring();
  const GradedShape sh1 = graded_shape(reduce_object(a1));
  const GradedShape sh2 = graded_shape(reduce_object(a2));
  const int dx = sh1.twist;
  RingMatrix s = RingMatrix::zero(tower, Level::S, a2.rank_f(), a1.rank_g());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t l = 0; l < s.cols(); ++l) {
      s.set(i, l, rng.homogeneous(ring, sh1.g_shifts[l] - sh2.f_shifts[i] + degree, 2));
    }
  }
  RingMatrix t = RingMatrix::zero(tower, Level::S, a2.rank_g(), a1.rank_f());
  for (std::size_t l = 0; l < t.rows(); ++l) {
    for (std::size_t j = 0; j < t.cols(); ++j) {
      t.set(l, j, rng.homogeneous(ring, sh1.f_shifts[j] - sh2.g_shifts[l] + degree - dx, 2));
    }
  }
  RingMatrix f = s * a1.phi() + a2.psi() * t;
  RingMatrix g = t * a1.psi() + a2.phi() * s;
  if (add_identity_multiple && a1 == a2) {
    const Polynomial r = rng.homogeneous(ring, degree, 2);
    f = f + RingMatrix::identity(tower, Level::S, a1.rank_f()).scaled(r);
    g = g + RingMatrix::identity(tower, Level::S, a1.rank_g()).scaled(r);
  }
  return RandomMorphism{verify_morphism(a1, a2, std::move(f), std::move(g)), std::move(s),
                        std::move(t)};
}

MatrixFactorization random_object(Random& rng, const TowerPtr& tower, int max_summands) {
  const auto base = corpus_objects(tower);
  const int n = rng.integer(1, max_summands);
  auto draw = [&] {
    MatrixFactorization a = rng.pick(base);
    return rng.coin() ? suspend(a) : a;
  };
  MatrixFactorization sum = draw();
  for (int k = 1; k < n; ++k) sum = direct_sum(sum, draw());
  return sum;
}

PeriodicComplex zero_control(const TowerPtr& tower) {
  return PeriodicComplex::make(RingMatrix::zero(tower, Level::R, 1, 1),
                               RingMatrix::zero(tower, Level::R, 1, 1));
}

}  // namespace mfw::testing
