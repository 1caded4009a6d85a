#include "mfw/linear.hpp"

namespace mfw {

namespace {

// Reduced row echelon form in place; returns pivot columns, restricted to
// the first `ncols` columns.
std::vector<std::size_t> rref(const Field& field, FieldMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = field.inv(m[row][col]);
    for (auto& v : m[row]) {
      if (v != 0) v = field.mul(v, inv);
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) {
        if (m[row][c] != 0) m[r][c] = field.sub(m[r][c], field.mul(factor, m[row][c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t field_rank(const Field& field, FieldMatrix m) {
  if (m.empty()) return 0;
  const std::size_t ncols = m.front().size();
  return rref(field, m, ncols).size();
}

std::optional<FieldVector> field_solve(const Field& field, FieldMatrix a, const FieldVector& b) {
  const std::size_t ncols = a.empty() ? 0 : a.front().size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  const auto pivots = rref(field, a, ncols);
  for (std::size_t r = pivots.size(); r < a.size(); ++r) {
    if (a[r][ncols] != 0) return std::nullopt;
  }
  FieldVector x(ncols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
  return x;
}

}  // namespace mfw
