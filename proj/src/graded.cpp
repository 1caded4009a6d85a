#include "mfw/graded.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <tuple>

#include "mfw/error.hpp"
#include "mfw/linear.hpp"

namespace mfw {

namespace {

// shift[u] - shift[v] = diff
struct ShiftEdge {
  std::size_t u, v;
  long diff;
};

std::vector<long> solve_shifts(std::size_t nodes, const std::vector<ShiftEdge>& edges) {
  std::vector<std::vector<std::pair<std::size_t, long>>> adj(nodes);
  for (const auto& e : edges) {
    adj[e.u].push_back({e.v, -e.diff});
    adj[e.v].push_back({e.u, e.diff});
  }
  std::vector<std::optional<long>> shift(nodes);
  std::vector<long> out(nodes, 0);
  for (std::size_t root = 0; root < nodes; ++root) {
    if (shift[root]) continue;
    std::vector<std::size_t> component{root};
    shift[root] = 0;
    for (std::size_t k = 0; k < component.size(); ++k) {
      const std::size_t u = component[k];
      for (const auto& [v, delta] : adj[u]) {
        const long want = *shift[u] + delta;
        if (!shift[v]) {
          shift[v] = want;
          component.push_back(v);
        } else if (*shift[v] != want) {
          throw NotHomogeneous("entry degrees admit no consistent generator shifts");
        }
      }
    }
    long lowest = *shift[root];
    for (auto u : component) lowest = std::min(lowest, *shift[u]);
    for (auto u : component) out[u] = *shift[u] - lowest;
  }
  return out;
}

int require_twist(const TowerPtr& tower) {
  if (!tower->is_graded()) {
    throw NotHomogeneous("tower is not graded: x or a defining ideal is inhomogeneous");
  }
  return *tower->x_degree();
}

long entry_degree(const RingMatrix& m, std::size_t i, std::size_t j, const char* what) {
  const Polynomial& p = m(i, j);
  if (!p.is_homogeneous()) {
    throw NotHomogeneous(std::string(what) + " entry (" + std::to_string(i + 1) + ", " +
                         std::to_string(j + 1) + ") = " + m.tower()->format(p) +
                         " is not homogeneous");
  }
  return static_cast<long>(*p.degree());
}

// Edges for a map whose entry (i, j) sends source generator j to target
// generator i with degree source_j - target_i + offset.
void add_map_edges(std::vector<ShiftEdge>& edges, const RingMatrix& m, std::size_t source_base,
                   std::size_t target_base, long offset, const char* what) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      edges.push_back({source_base + j, target_base + i, entry_degree(m, i, j, what) - offset});
    }
  }
}

std::vector<int> slice(const std::vector<long>& all, std::size_t from, std::size_t count) {
  std::vector<int> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(static_cast<int>(all[from + k]));
  return out;
}

class StandardBasis {
 public:
  StandardBasis(const RingTower& tower, const WindowBudget& budget)
      : tower_(tower), budget_(budget) {
    for (const auto& g : tower.r_basis().basis) {
      leading_.push_back(g.leading_monomial(tower.order()));
    }
  }

  const std::vector<Monomial>& monomials(int degree) {
    auto it = cache_.find(degree);
    if (it != cache_.end()) return it->second;
    std::vector<Monomial> out;
    if (degree >= 0) {
      if (degree > budget_.max_degree) {
        throw WindowTooLargeForBudget("graded piece of degree " + std::to_string(degree) +
                                      " exceeds max degree " +
                                      std::to_string(budget_.max_degree));
      }
      const std::size_t n = tower_.ring()->vars.size();
      const double count = std::exp(std::lgamma(degree + n) - std::lgamma(degree + 1.0) -
                                    std::lgamma(static_cast<double>(n)));
      if (count > 16.0 * static_cast<double>(budget_.max_unknowns)) {
        throw WindowTooLargeForBudget("too many monomials of degree " + std::to_string(degree));
      }
      std::vector<std::uint32_t> exps(n, 0);
      enumerate(exps, 0, static_cast<std::uint32_t>(degree), out);
      std::sort(out.begin(), out.end());
      if (out.size() > budget_.max_unknowns) {
        throw WindowTooLargeForBudget("graded piece of degree " + std::to_string(degree) +
                                      " has dimension " + std::to_string(out.size()));
      }
    }
    return cache_.emplace(degree, std::move(out)).first->second;
  }

 private:
  void enumerate(std::vector<std::uint32_t>& exps, std::size_t var, std::uint32_t left,
                 std::vector<Monomial>& out) const {
    if (var + 1 == exps.size()) {
      exps[var] = left;
      Monomial m(exps);
      if (std::none_of(leading_.begin(), leading_.end(),
                       [&](const Monomial& lm) { return lm.divides(m); })) {
        out.push_back(std::move(m));
      }
      exps[var] = 0;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      exps[var] = e;
      enumerate(exps, var + 1, left - e, out);
    }
    exps[var] = 0;
  }

  const RingTower& tower_;
  WindowBudget budget_;
  std::vector<Monomial> leading_;
  std::map<int, std::vector<Monomial>> cache_;
};

// Coordinates of the degree-d piece of sum_j R(-shift_j): generator j
// contributes the standard monomials of degree d - shift_j.
struct Piece {
  std::vector<std::pair<std::size_t, const Monomial*>> basis;
  std::vector<std::map<Monomial, std::size_t>> index;
};

Piece make_piece(StandardBasis& sb, const std::vector<int>& shifts, long degree) {
  Piece p;
  p.index.resize(shifts.size());
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    for (const auto& m : sb.monomials(static_cast<int>(degree - shifts[j]))) {
      p.index[j].emplace(m, p.basis.size());
      p.basis.push_back({j, &m});
    }
  }
  return p;
}

std::size_t map_rank(const RingMatrix& m, const Piece& source, const Piece& target) {
  if (source.basis.empty() || target.basis.empty()) return 0;
  const auto& tower = m.tower();
  const Field& field = tower->field();
  FieldMatrix a(target.basis.size(), FieldVector(source.basis.size(), Rational(0)));
  for (std::size_t col = 0; col < source.basis.size(); ++col) {
    const auto [j, mono] = source.basis[col];
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j).is_zero()) continue;
      const Polynomial image = tower->normal_form(m(i, j).times_term(*mono, 1), Level::R);
      for (const auto& [term, c] : image.terms()) {
        auto it = target.index[i].find(term);
        if (it == target.index[i].end()) {
          throw VerificationFailure("image term outside the target graded piece");
        }
        a[it->second][col] = field.add(a[it->second][col], c);
      }
    }
  }
  return field_rank(field, std::move(a));
}

std::vector<int> shifted(const std::vector<int>& shifts, long by) {
  std::vector<int> out(shifts);
  for (auto& s : out) s = static_cast<int>(s + by);
  return out;
}

std::vector<HomologyRow> homology_table(const PeriodicComplex& c, int dmin, int dmax,
                                        const WindowBudget& budget) {
  const GradedShape shape = graded_shape(c);
  StandardBasis sb(*c.tower(), budget);
  // F[k] in degree d is sum_j R_{d - f_j + k*twist}.
  const auto f_at = [&](int k) { return shifted(shape.f_shifts, -k * shape.twist); };
  const auto g_at = [&](int k) { return shifted(shape.g_shifts, -k * shape.twist); };
  std::vector<HomologyRow> rows;
  for (int d = dmin; d <= dmax; ++d) {
    const Piece g_prev = make_piece(sb, g_at(-1), d);
    const Piece f0 = make_piece(sb, f_at(0), d);
    const Piece g0 = make_piece(sb, g_at(0), d);
    const Piece f1 = make_piece(sb, f_at(1), d);
    const std::size_t r_psi_in = map_rank(c.psi_bar(), g_prev, f0);
    const std::size_t r_phi = map_rank(c.phi_bar(), f0, g0);
    const std::size_t r_psi_out = map_rank(c.psi_bar(), g0, f1);
    rows.push_back({d, 'F', f0.basis.size() - r_phi, r_psi_in});
    rows.push_back({d, 'G', g0.basis.size() - r_psi_out, r_phi});
  }
  return rows;
}

}  // namespace

GradedShape graded_shape(const PeriodicComplex& c) {
  const int twist = require_twist(c.tower());
  const std::size_t nf = c.rank_f(), ng = c.rank_g();
  std::vector<ShiftEdge> edges;
  add_map_edges(edges, c.phi_bar(), 0, nf, 0, "phi_bar");
  add_map_edges(edges, c.psi_bar(), nf, 0, twist, "psi_bar");
  const std::vector<long> all = solve_shifts(nf + ng, edges);
  return GradedShape{twist, slice(all, 0, nf), slice(all, nf, ng)};
}

std::vector<Monomial> standard_monomials(const RingTower& tower, int degree,
                                         const WindowBudget& budget) {
  StandardBasis sb(tower, budget);
  return sb.monomials(degree);
}

bool AcyclicityWindow::acyclic() const {
  const auto zero = [](const HomologyRow& r) { return r.homology() == 0; };
  return std::all_of(complex.begin(), complex.end(), zero) &&
         std::all_of(dual.begin(), dual.end(), zero);
}

AcyclicityWindow graded_acyclicity_window(const PeriodicComplex& c, int dmin, int dmax,
                                          const WindowBudget& budget) {
  if (dmin > dmax) throw InvalidArgument("empty degree range");
  AcyclicityWindow w;
  w.complex = homology_table(c, dmin, dmax, budget);
  w.dual = homology_table(c.transpose(), dmin, dmax, budget);
  return w;
}

std::string format_homology_table(const std::vector<HomologyRow>& rows) {
  std::string out = "degree  position  dim_ker  dim_im  homology\n";
  char line[96];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%6d  %8c  %7zu  %6zu  %8ld\n", r.degree, r.position,
                  r.dim_ker, r.dim_im, r.homology());
    out += line;
  }
  return out;
}

std::string format_homology_csv(const std::vector<HomologyRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += std::to_string(r.degree) + ',' + r.position + ',' + std::to_string(r.dim_ker) + ',' +
           std::to_string(r.dim_im) + ',' + std::to_string(r.homology()) + '\n';
  }
  return out;
}

// ---- nullhomotopy window ---------------------------------------------------------------

namespace {

struct ChainShape {
  int twist;
  std::vector<int> f1, g1, f2, g2;
};

ChainShape chain_shape(const PeriodicChainMap& delta) {
  const auto& c1 = delta.source();
  const auto& c2 = delta.target();
  if (c1.tower() != c2.tower()) throw TowerMismatch("chain map endpoints over different towers");
  const int twist = require_twist(c1.tower());
  const std::size_t nf1 = c1.rank_f(), ng1 = c1.rank_g(), nf2 = c2.rank_f(), ng2 = c2.rank_g();
  const std::size_t bf1 = 0, bg1 = nf1, bf2 = nf1 + ng1, bg2 = nf1 + ng1 + nf2;
  std::vector<ShiftEdge> edges;
  add_map_edges(edges, c1.phi_bar(), bf1, bg1, 0, "phi1_bar");
  add_map_edges(edges, c1.psi_bar(), bg1, bf1, twist, "psi1_bar");
  add_map_edges(edges, c2.phi_bar(), bf2, bg2, 0, "phi2_bar");
  add_map_edges(edges, c2.psi_bar(), bg2, bf2, twist, "psi2_bar");
  add_map_edges(edges, delta.f_bar(), bf1, bf2, 0, "f_bar");
  add_map_edges(edges, delta.g_bar(), bg1, bg2, 0, "g_bar");
  const auto all = solve_shifts(bg2 + ng2, edges);
  return ChainShape{twist, slice(all, bf1, nf1), slice(all, bg1, ng1), slice(all, bf2, nf2),
                    slice(all, bg2, ng2)};
}

bool is_even(int n) { return n % 2 == 0; }

// (position n, row, col, monomial of R)
using EqKey = std::tuple<int, std::size_t, std::size_t, Monomial>;

}  // namespace

NullhomotopyWindow graded_nullhomotopy_window(const PeriodicChainMap& delta, int first, int last,
                                              const WindowBudget& budget) {
  if (first > last) throw InvalidArgument("empty position range");
  const ChainShape shape = chain_shape(delta);
  const auto& c1 = delta.source();
  const auto& c2 = delta.target();
  const auto& tower = c1.tower();
  const Field& field = tower->field();
  StandardBasis sb(*tower, budget);

  // h_n entry (i, j) has degree a1_j - b2_i - twist (n even) or b1_j - a2_i (n odd).
  struct Unknown {
    int n;
    std::size_t i, j;
    const Monomial* mono;
  };
  std::vector<Unknown> unknowns;
  const auto h_rows = [&](int n) { return is_even(n) ? c2.rank_g() : c2.rank_f(); };
  const auto h_cols = [&](int n) { return is_even(n) ? c1.rank_f() : c1.rank_g(); };
  const auto h_degree = [&](int n, std::size_t i, std::size_t j) {
    return is_even(n) ? shape.f1[j] - shape.g2[i] - shape.twist : shape.g1[j] - shape.f2[i];
  };
  for (int n = first; n <= last + 1; ++n) {
    for (std::size_t i = 0; i < h_rows(n); ++i) {
      for (std::size_t j = 0; j < h_cols(n); ++j) {
        for (const auto& m : sb.monomials(h_degree(n, i, j))) {
          unknowns.push_back({n, i, j, &m});
          if (unknowns.size() > budget.max_unknowns) {
            throw WindowTooLargeForBudget("homotopy window needs more than " +
                                          std::to_string(budget.max_unknowns) + " unknowns");
          }
        }
      }
    }
  }

  // E_n = d2_{n-1} h_n + h_{n+1} d1_n - delta_n.
  const auto d1 = [&](int n) -> const RingMatrix& { return is_even(n) ? c1.phi_bar() : c1.psi_bar(); };
  const auto d2_before = [&](int n) -> const RingMatrix& {
    return is_even(n) ? c2.psi_bar() : c2.phi_bar();
  };
  const auto delta_at = [&](int n) -> const RingMatrix& {
    return is_even(n) ? delta.f_bar() : delta.g_bar();
  };

  std::map<EqKey, std::map<std::size_t, Rational>> lhs;
  std::map<EqKey, Rational> rhs;
  const auto accumulate = [&](int n, std::size_t r, std::size_t c, const Polynomial& p,
                              std::size_t col) {
    for (const auto& [term, coeff] : p.terms()) {
      auto& slot = lhs[EqKey{n, r, c, term}][col];
      slot = field.add(slot, coeff);
    }
  };
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& u = unknowns[col];
    if (u.n <= last) {
      const RingMatrix& d2 = d2_before(u.n);
      for (std::size_t r = 0; r < d2.rows(); ++r) {
        if (d2(r, u.i).is_zero()) continue;
        accumulate(u.n, r, u.j,
                   tower->normal_form(d2(r, u.i).times_term(*u.mono, 1), Level::R), col);
      }
    }
    if (u.n - 1 >= first) {
      const RingMatrix& d = d1(u.n - 1);
      for (std::size_t c = 0; c < d.cols(); ++c) {
        if (d(u.j, c).is_zero()) continue;
        accumulate(u.n - 1, u.i, c,
                   tower->normal_form(d(u.j, c).times_term(*u.mono, 1), Level::R), col);
      }
    }
  }
  for (int n = first; n <= last; ++n) {
    const RingMatrix& dn = delta_at(n);
    for (std::size_t r = 0; r < dn.rows(); ++r) {
      for (std::size_t c = 0; c < dn.cols(); ++c) {
        for (const auto& [term, coeff] : dn(r, c).terms()) rhs[EqKey{n, r, c, term}] = coeff;
      }
    }
  }

  std::map<EqKey, std::size_t> row_of;
  for (const auto& [key, _] : lhs) row_of.emplace(key, 0);
  for (const auto& [key, _] : rhs) row_of.emplace(key, 0);
  std::size_t next = 0;
  for (auto& [key, row] : row_of) row = next++;

  NullhomotopyWindow out;
  out.first = first;
  out.last = last;
  out.unknowns = unknowns.size();
  out.equations = row_of.size();

  std::optional<FieldVector> solution;
  if (unknowns.empty()) {
    if (rhs.empty()) solution = FieldVector{};
  } else {
    FieldMatrix a(row_of.size(), FieldVector(unknowns.size(), Rational(0)));
    FieldVector b(row_of.size(), Rational(0));
    for (const auto& [key, cols] : lhs) {
      for (const auto& [col, v] : cols) a[row_of[key]][col] = v;
    }
    for (const auto& [key, v] : rhs) b[row_of[key]] = v;
    solution = field_solve(field, std::move(a), b);
  }
  if (!solution) return out;

  for (int n = first; n <= last + 1; ++n) {
    out.diagonals.push_back(RingMatrix::zero(tower, Level::R, h_rows(n), h_cols(n)));
  }
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& u = unknowns[col];
    const Rational& v = (*solution)[col];
    if (v == 0) continue;
    RingMatrix& h = out.diagonals[static_cast<std::size_t>(u.n - first)];
    h.set(u.i, u.j, h(u.i, u.j) + Polynomial::term(tower->ring(), *u.mono, v));
  }
  for (int n = first; n <= last; ++n) {
    const RingMatrix& hn = out.diagonals[static_cast<std::size_t>(n - first)];
    const RingMatrix& hn1 = out.diagonals[static_cast<std::size_t>(n - first + 1)];
    if (!(d2_before(n) * hn + hn1 * d1(n) == delta_at(n))) {
      throw VerificationFailure("window homotopy fails at position " + std::to_string(n));
    }
  }
  out.solved = true;
  return out;
}

}  // namespace mfw
