#include "mfw/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "mfw/error.hpp"

namespace mfw {

RingMatrix::RingMatrix(TowerPtr tower, Level level, std::size_t rows, std::size_t cols)
    : tower_(std::move(tower)), level_(level), rows_(rows), cols_(cols),
      entries_(rows * cols, Polynomial(tower_->ring())) {}

RingMatrix RingMatrix::identity(TowerPtr tower, Level level, std::size_t n) {
  RingMatrix m(tower, level, n, n);
  const Polynomial one = tower->normal_form(Polynomial::constant(tower->ring(), 1), level);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = one;
  return m;
}

RingMatrix RingMatrix::x_identity(TowerPtr tower, Level level, std::size_t n) {
  RingMatrix m(tower, level, n, n);
  const Polynomial x = tower->normal_form(tower->x_elem(), level);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = x;
  return m;
}

RingMatrix RingMatrix::from_entries(TowerPtr tower, Level level, std::size_t rows,
                                    std::size_t cols, const std::vector<Polynomial>& entries) {
  if (entries.size() != rows * cols) {
    throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(entries.size()));
  }
  RingMatrix m(tower, level, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    require_same_ring(*tower->ring(), *entries[k].ring());
    m.entries_[k] = tower->normal_form(entries[k], level);
  }
  return m;
}

bool RingMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

void RingMatrix::set(std::size_t r, std::size_t c, const Polynomial& value) {
  entries_[r * cols_ + c] = tower_->normal_form(value, level_);
}

void RingMatrix::require_compatible(const RingMatrix& o) const {
  if (tower_ != o.tower_) throw TowerMismatch("matrices belong to different towers");
  if (level_ != o.level_) {
    throw LevelMismatch("matrices at levels " + level_name(level_) + " and " +
                        level_name(o.level_));
  }
}

void RingMatrix::require_same_shape(const RingMatrix& o, const char* op) const {
  require_compatible(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionMismatch(std::string(op) + " of " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " and " + std::to_string(o.rows_) + "x" +
                            std::to_string(o.cols_) + " matrices");
  }
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  require_same_shape(o, "sum");
  RingMatrix r(tower_, level_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    r.entries_[k] = tower_->normal_form(entries_[k] + o.entries_[k], level_);
  }
  return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
  require_same_shape(o, "difference");
  RingMatrix r(tower_, level_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    r.entries_[k] = tower_->normal_form(entries_[k] - o.entries_[k], level_);
  }
  return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  require_compatible(o);
  if (cols_ != o.rows_) {
    throw DimensionMismatch("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                            " and " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_) +
                            " matrices");
  }
  RingMatrix r(tower_, level_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Polynomial acc(tower_->ring());
      for (std::size_t k = 0; k < cols_; ++k) {
        const Polynomial& a = (*this)(i, k);
        const Polynomial& b = o(k, j);
        if (!a.is_zero() && !b.is_zero()) acc += a * b;
      }
      r.entries_[i * o.cols_ + j] = tower_->normal_form(acc, level_);
    }
  }
  return r;
}

RingMatrix RingMatrix::operator-() const {
  RingMatrix r(tower_, level_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
  return r;
}

RingMatrix RingMatrix::scaled(const Polynomial& factor) const {
  RingMatrix r(tower_, level_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    r.entries_[k] = tower_->normal_form(entries_[k] * factor, level_);
  }
  return r;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix r(tower_, level_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.entries_[j * rows_ + i] = (*this)(i, j);
  }
  return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
  return tower_ == o.tower_ && level_ == o.level_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         entries_ == o.entries_;
}

std::optional<std::pair<std::size_t, std::size_t>> RingMatrix::first_difference(
    const RingMatrix& o) const {
  require_same_shape(o, "comparison");
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!((*this)(i, j) == o(i, j))) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

RingMatrix RingMatrix::block(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c,
                             const RingMatrix& d) {
  a.require_compatible(b);
  a.require_compatible(c);
  a.require_compatible(d);
  if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ || b.cols_ != d.cols_) {
    throw DimensionMismatch("block sizes do not line up");
  }
  RingMatrix r(a.tower_, a.level_, a.rows_ + c.rows_, a.cols_ + b.cols_);
  auto place = [&r](const RingMatrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) r.entries_[(r0 + i) * r.cols_ + c0 + j] = m(i, j);
    }
  };
  place(a, 0, 0);
  place(b, 0, a.cols_);
  place(c, a.rows_, 0);
  place(d, a.rows_, a.cols_);
  return r;
}

RingMatrix RingMatrix::block_diagonal(const RingMatrix& a, const RingMatrix& b) {
  return block(a, zero(a.tower_, a.level_, a.rows_, b.cols_),
               zero(a.tower_, a.level_, b.rows_, a.cols_), b);
}

RingMatrix RingMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t rows,
                                 std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw DimensionMismatch("submatrix out of range");
  RingMatrix r(tower_, level_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) r.entries_[i * cols + j] = (*this)(row0 + i, col0 + j);
  }
  return r;
}

RingMatrix RingMatrix::reduced_to(Level to) const {
  if (static_cast<int>(to) < static_cast<int>(level_)) {
    throw LevelMismatch("cannot reduce from " + level_name(level_) + " to " + level_name(to));
  }
  RingMatrix r(tower_, to, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    r.entries_[k] = tower_->normal_form(entries_[k], to);
  }
  return r;
}

RingMatrix RingMatrix::lifted_to(Level to) const {
  if (static_cast<int>(to) > static_cast<int>(level_)) {
    throw LevelMismatch("cannot lift from " + level_name(level_) + " to " + level_name(to));
  }
  RingMatrix r(tower_, to, rows_, cols_);
  r.entries_ = entries_;
  return r;
}

RingMatrix RingMatrix::divided_by_x() const {
  if (level_ != Level::S) throw LevelMismatch("division by x happens at level S");
  RingMatrix r(tower_, level_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    r.entries_[k] = entries_[k].is_zero() ? entries_[k] : tower_->divide_by_x(entries_[k]);
  }
  return r;
}

std::string RingMatrix::format() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out += ", ";
    out += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ", ";
      out += tower_->format((*this)(i, j));
    }
    out += ']';
  }
  return out + "]";
}

RingMatrix reduce_level(const RingMatrix& m, Level to) { return m.reduced_to(to); }

Polynomial determinant(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const auto& tower = m.tower();
  if (n == 0) return tower->normal_form(Polynomial::constant(tower->ring(), 1), m.level());
  if (n > 16) throw InvalidArgument("determinant limited to 16x16 matrices");
  std::vector<Polynomial> partial(std::size_t{1} << n, Polynomial(tower->ring()));
  std::vector<bool> reached(partial.size(), false);
  partial[0] = Polynomial::constant(tower->ring(), 1);
  reached[0] = true;
  for (std::uint32_t mask = 0; mask < partial.size(); ++mask) {
    if (!reached[mask] || partial[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) continue;
      const Polynomial& entry = m(row, j);
      if (entry.is_zero()) continue;
      const std::uint32_t above = mask & ~((2u << j) - 1u);
      Polynomial term = entry * partial[mask];
      if (std::popcount(above) % 2 == 1) term = -term;
      const std::uint32_t next = mask | (1u << j);
      partial[next] = tower->normal_form(partial[next] + term, m.level());
      reached[next] = true;
    }
  }
  return partial.back();
}

RingMatrix matrix_algebra(MatrixOp op, const RingMatrix& a, const RingMatrix& b) {
  switch (op) {
    case MatrixOp::Add: return a + b;
    case MatrixOp::Sub: return a - b;
    case MatrixOp::Mul: return a * b;
    case MatrixOp::Neg: return -a;
    case MatrixOp::Transpose: return a.transpose();
  }
  return a;
}

}  // namespace mfw
