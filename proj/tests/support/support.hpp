#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mfw/graded.hpp"
#include "mfw/groebner.hpp"
#include "mfw/mfcat.hpp"
#include "mfw/periodic.hpp"

namespace mfw::testing {

// ---- construction shorthands ------------------------------------------------------------

RingPtr ring_of(const std::vector<std::string>& vars, const Field& field = Field::rationals());
Polynomial poly(const RingPtr& ring, const std::string& text);
std::vector<Polynomial> polys(const RingPtr& ring, const std::vector<std::string>& texts);
/// Matrix literal "[[a, b], [c, d]]" at the given level.
RingMatrix mat(const TowerPtr& tower, const std::string& literal, Level level = Level::S);

// ---- corpus fixtures ----------------------------------------------------------------------

/// Q[u,v], t = uv, x = uv.
TowerPtr uv_tower(const Field& field = Field::rationals());
/// Q[u,v], t = u^2 + v^2.
TowerPtr sos_tower(const Field& field = Field::rationals());
/// Q[x,y], t = (x^2, y^2), x-element x^2: S = Q/(y^2).
TowerPtr y2_tower(const Field& field = Field::rationals());
/// Q[x,y] lex x > y, t = (x^2, y^2 - x^3), x-element x^2: S = Q/(y^2 - x^3).
TowerPtr cusp_tower(const Field& field = Field::rationals());

/// Matrix factorizations shipped in the corpus for the given tower.
std::vector<MatrixFactorization> corpus_objects(const TowerPtr& tower);
/// All four corpus towers.
std::vector<TowerPtr> corpus_towers(const Field& field = Field::rationals());

// ---- independent oracles -----------------------------------------------------------------

/// Product by explicit double loop over terms into a plain exponent map.
Polynomial schoolbook_product(const Polynomial& a, const Polynomial& b);

/// Decides whether homogeneous p lies in the ideal of homogeneous `gens` by
/// solving p = sum a_i g_i with deg a_i = deg p - deg g_i over QQ, using its
/// own Gaussian elimination.
bool brute_force_member(const Polynomial& p, const std::vector<Polynomial>& gens);

/// All monomials of total degree d in n variables.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d);

// ---- random data ---------------------------------------------------------------------------

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<int>(v.size()) - 1))];
  }

  Rational coefficient(bool fractions = false);
  Polynomial polynomial(const RingPtr& ring, int max_terms, int max_degree, bool fractions = false);
  /// Zero for negative degree.
  Polynomial homogeneous(const RingPtr& ring, int degree, int max_terms);
  RingMatrix matrix(const TowerPtr& tower, std::size_t rows, std::size_t cols, int max_terms,
                    int max_degree, Level level = Level::S);

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// ---- random categorical data -----------------------------------------------------------------

/// Null-homotopic morphism (s*phi1 + psi2*t, t*psi1 + phi2*s) between a1 and a2,
/// plus r*identity when a1 == a2.
struct RandomMorphism {
  MfMorphism theta;
  RingMatrix s;
  RingMatrix t;
};
RandomMorphism random_morphism(Random& rng, const MatrixFactorization& a1,
                               const MatrixFactorization& a2, bool add_identity_multiple);

/// Homogeneous version of degree `degree` for a graded tower: entries of f
/// have degree f1_j - f2_i + degree under the graded shapes of the reductions.
RandomMorphism random_homogeneous_morphism(Random& rng, const MatrixFactorization& a1,
                                           const MatrixFactorization& a2, int degree,
                                           bool add_identity_multiple);

/// A random corpus-derived object: sums and suspensions of corpus objects.
MatrixFactorization random_object(Random& rng, const TowerPtr& tower, int max_summands);

/// The 2-periodic complex with both differentials zero on rank 1.
PeriodicComplex zero_control(const TowerPtr& tower);

}  // namespace mfw::testing
