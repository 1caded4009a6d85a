#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mfw/periodic.hpp"

namespace mfw {

/// Limits for the graded window computations. `max_degree` bounds the
/// internal degree of any graded piece of R that gets enumerated;
/// `max_unknowns` bounds the dimension of a single piece and the number of
/// unknowns in a homotopy solve.
struct WindowBudget {
  int max_degree = 40;
  std::size_t max_unknowns = 20000;
};

/// Generator degrees turning a homogeneous periodic complex into a complex of
/// graded free modules with degree-zero differentials:
///   F[k] = sum_j R(-(f_shifts[j] - k*twist)),  G[k] = sum_i R(-(g_shifts[i] - k*twist)),
/// with phi_bar[i][j] of degree f_j - g_i and psi_bar[j][i] of degree g_i - f_j + twist.
/// Each connected block of generators is normalized to minimum shift 0.
struct GradedShape {
  int twist = 0;
  std::vector<int> f_shifts;
  std::vector<int> g_shifts;
};

/// Throws NotHomogeneous for an ungraded tower, an inhomogeneous entry, or
/// degrees that admit no consistent shifts.
GradedShape graded_shape(const PeriodicComplex& c);

/// Monomials of total degree `degree` outside the leading term ideal of R,
/// in storage order. Throws WindowTooLargeForBudget.
std::vector<Monomial> standard_monomials(const RingTower& tower, int degree,
                                         const WindowBudget& budget = {});

struct HomologyRow {
  int degree = 0;
  char position = 'F';  // 'F' = F[0], 'G' = G[0]
  std::size_t dim_ker = 0;
  std::size_t dim_im = 0;
  long homology() const { return static_cast<long>(dim_ker) - static_cast<long>(dim_im); }
};

struct AcyclicityWindow {
  std::vector<HomologyRow> complex;
  /// The same table for the entrywise transpose complex.
  std::vector<HomologyRow> dual;
  bool acyclic() const;
};

/// Homology of G[-1] -psi-> F[0] -phi-> G[0] -psi-> F[1] at F[0] and G[0], in
/// internal degrees dmin..dmax, for the complex and its transpose.
/// Throws NotHomogeneous, WindowTooLargeForBudget, InvalidArgument (dmin > dmax).
AcyclicityWindow graded_acyclicity_window(const PeriodicComplex& c, int dmin, int dmax,
                                          const WindowBudget& budget = {});

/// Aligned text table: degree, position, dim_ker, dim_im, homology.
std::string format_homology_table(const std::vector<HomologyRow>& rows);
/// "degree,position,dim_ker,dim_im,homology" rows, one per line, no header.
std::string format_homology_csv(const std::vector<HomologyRow>& rows);

/// Result of searching for h with
///   delta_n = d2_{n-1} * h_n + h_{n+1} * d1_n   for first <= n <= last,
/// where position n = 2k is F[k] (differential phi, delta = f_bar) and
/// n = 2k+1 is G[k] (differential psi, delta = g_bar). h_n : M1_n -> M2_{n-1}
/// has R-linear homogeneous entries; h_n for even n is G2 x F1 shaped, odd n
/// is F2 x G1 shaped. The verdict covers the window only.
struct NullhomotopyWindow {
  bool solved = false;
  int first = 0;
  int last = 0;
  /// h_first .. h_{last+1} when solved.
  std::vector<RingMatrix> diagonals;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

/// Throws NotHomogeneous, WindowTooLargeForBudget, InvalidArgument (first > last),
/// VerificationFailure if a computed solution fails the exact check.
NullhomotopyWindow graded_nullhomotopy_window(const PeriodicChainMap& delta, int first, int last,
                                              const WindowBudget& budget = {});

}  // namespace mfw
