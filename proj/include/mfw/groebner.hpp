#pragma once

#include <cstdint>
#include <vector>

#include "mfw/polynomial.hpp"

namespace mfw {

struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;
  MonomialOrder order;
};

/// A Groebner basis; when `reduced`, elements are monic, interreduced and
/// sorted by ascending leading monomial.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> basis;
  MonomialOrder order;
  bool reduced = false;

  bool is_unit_ideal() const;
};

/// Result of multivariate division: input = remainder + sum cofactors[i] * basis[i].
struct ReductionTrace {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;
};

/// Reduced Groebner basis by Buchberger's algorithm with the normal pair
/// selection strategy (smallest lcm first, ties by pair index).
GroebnerBasis buchberger_basis(const Ideal& ideal);

/// Reduced Groebner basis together with the expression of every basis element
/// as a combination of the input generators:
/// basis[k] = sum_j representation[k][j] * generators[j].
struct ExtendedBasis {
  GroebnerBasis basis;
  std::vector<std::vector<Polynomial>> representation;
};
ExtendedBasis extended_buchberger_basis(const Ideal& ideal);

/// Fully reduced remainder of p by G.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);
ReductionTrace reduce_with_cofactors(const Polynomial& p, const GroebnerBasis& g);
bool ideal_contains(const GroebnerBasis& g, const Polynomial& p);

/// Division by an element x modulo an ideal of S, precomputed for repeated use.
class ExactDivider {
 public:
  /// `s_basis` is a Groebner basis of the ideal defining S inside Q.
  ExactDivider(Polynomial x, GroebnerBasis s_basis);

  /// Returns the normal form (modulo S) of q with p = x*q in S.
  /// Throws NotDivisible if p is not in (x) + ideal(S).
  Polynomial divide(const Polynomial& p) const;

  const Polynomial& x() const { return x_; }
  const GroebnerBasis& s_basis() const { return s_basis_; }
  const GroebnerBasis& combined_basis() const { return combined_.basis; }

 private:
  Polynomial x_;
  GroebnerBasis s_basis_;
  ExtendedBasis combined_;  // generators: x first, then s_basis
};

/// One-shot form of ExactDivider::divide.
Polynomial exact_divide_by_nzd(const Polynomial& p, const Polynomial& x,
                               const GroebnerBasis& s_ideal);

/// Krull dimension of Q/I for a homogeneous ideal I, read off the leading
/// term ideal as the size of a maximal independent set of variables.
/// Returns -1 for the unit ideal. Throws NotHomogeneous.
int quotient_dimension(const Ideal& ideal);

/// Krull dimension from the leading monomials of any Groebner basis.
int dimension_from_leading_monomials(const GroebnerBasis& g);

}  // namespace mfw
