#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfw/tower.hpp"

namespace mfw {

/// Matrix over one level of a ring tower. Entries are kept in normal form,
/// so equality is entrywise equality in the quotient ring. Zero-sized
/// matrices are allowed; they stand in for maps to or from the zero module.
class RingMatrix {
 public:
  RingMatrix(TowerPtr tower, Level level, std::size_t rows, std::size_t cols);

  static RingMatrix zero(TowerPtr tower, Level level, std::size_t rows, std::size_t cols) {
    return RingMatrix(std::move(tower), level, rows, cols);
  }
  static RingMatrix identity(TowerPtr tower, Level level, std::size_t n);
  /// Row-major entries, normalized on entry.
  static RingMatrix from_entries(TowerPtr tower, Level level, std::size_t rows, std::size_t cols,
                                 const std::vector<Polynomial>& entries);
  /// x * identity.
  static RingMatrix x_identity(TowerPtr tower, Level level, std::size_t n);

  const TowerPtr& tower() const { return tower_; }
  Level level() const { return level_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_zero() const;

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  RingElt elt(std::size_t r, std::size_t c) const { return RingElt(tower_, level_, (*this)(r, c)); }
  void set(std::size_t r, std::size_t c, const Polynomial& value);

  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix operator-(const RingMatrix& o) const;
  RingMatrix operator*(const RingMatrix& o) const;
  RingMatrix operator-() const;
  RingMatrix scaled(const Polynomial& factor) const;
  RingMatrix transpose() const;

  bool operator==(const RingMatrix& o) const;
  /// First entry (row, col) where the two matrices differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const RingMatrix& o) const;

  /// [[a, b], [c, d]]; block dimensions must line up.
  static RingMatrix block(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c,
                          const RingMatrix& d);
  static RingMatrix block_diagonal(const RingMatrix& a, const RingMatrix& b);
  RingMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  /// Same entries viewed at a deeper level.
  RingMatrix reduced_to(Level to) const;
  /// Same entries viewed at a shallower level (normal forms are valid lifts).
  RingMatrix lifted_to(Level to) const;

  /// Entrywise q with M = x * q over S. Throws NotDivisible.
  RingMatrix divided_by_x() const;

  /// "[[a, b], [c, d]]" using the tower's order.
  std::string format() const;

 private:
  void require_same_shape(const RingMatrix& o, const char* op) const;
  void require_compatible(const RingMatrix& o) const;

  TowerPtr tower_;
  Level level_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

RingMatrix reduce_level(const RingMatrix& m, Level to);

/// Determinant by cofactor expansion with memoized column subsets; exact in
/// any commutative quotient ring. Result in normal form for the level.
Polynomial determinant(const RingMatrix& m);

enum class MatrixOp { Add, Sub, Mul, Neg, Transpose };
/// Dispatching form of the matrix algebra; `b` is ignored for unary ops.
RingMatrix matrix_algebra(MatrixOp op, const RingMatrix& a, const RingMatrix& b);

}  // namespace mfw
