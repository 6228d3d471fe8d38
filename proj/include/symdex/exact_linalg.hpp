#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "symdex/rational.hpp"

namespace symdex {

using RatVec = std::vector<Rational>;

// Dense matrix over exact rationals. Sizes in this project stay tiny
// (ambient dimension <= 14, simple-root systems rank <= 8).
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix zero(std::size_t n) { return RatMatrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Rational trace() const {
    Rational s;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
    return s;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  RatVec flatten() const { return data_; }

 private:
  std::size_t rows_, cols_;
  RatVec data_;
};

inline RatMatrix commutator(const RatMatrix& x, const RatMatrix& y) {
  return x * y - y * x;
}

// Incrementally maintained row span in reduced row-echelon form.
// Supports rank queries and exact membership tests.
class RowSpan {
 public:
  explicit RowSpan(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }

  // Reduces v against the current basis in place; returns the index of its
  // leading column, or nullopt if it reduces to zero.
  std::optional<std::size_t> reduce(RatVec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivots_[r]];
      if (c.is_zero()) continue;
      const RatVec& row = rows_[r];
      Rational f = c;  // rows are normalized with pivot 1
      for (std::size_t j : supports_[r]) v[j] -= f * row[j];
    }
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) return j;
    return std::nullopt;
  }

  bool contains(RatVec v) const { return !reduce(v).has_value(); }

  // Returns true if the vector enlarged the span.
  bool add(RatVec v) {
    auto lead = reduce(v);
    if (!lead) return false;
    Rational p = v[*lead];
    for (auto& x : v) x /= p;
    // back-substitute into existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rational c = rows_[r][*lead];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < cols_; ++j) rows_[r][j] -= c * v[j];
      recompute_support(r);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(*lead);
    supports_.emplace_back();
    recompute_support(rows_.size() - 1);
    return true;
  }

 private:
  void recompute_support(std::size_t r) {
    supports_[r].clear();
    for (std::size_t j = 0; j < cols_; ++j)
      if (!rows_[r][j].is_zero()) supports_[r].push_back(j);
  }

  std::size_t cols_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<std::size_t>> supports_;
};

// Solves A x = b exactly, where the columns of A are linearly independent.
// Throws if the system is inconsistent.
inline RatVec solve_exact(const std::vector<RatVec>& columns, const RatVec& b) {
  const std::size_t n = columns.size();
  const std::size_t m = b.size();
  // augmented matrix [A | b]
  std::vector<RatVec> aug(m, RatVec(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != m) throw std::invalid_argument("solve_exact: column size");
    for (std::size_t i = 0; i < m; ++i) aug[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < m; ++i) aug[i][n] = b[i];

  std::vector<std::size_t> pivot_row(n);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = row;
    while (sel < m && aug[sel][col].is_zero()) ++sel;
    if (sel == m) throw std::invalid_argument("solve_exact: dependent columns");
    std::swap(aug[sel], aug[row]);
    Rational p = aug[row][col];
    for (std::size_t j = col; j <= n; ++j) aug[row][j] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      Rational c = aug[i][col];
      if (c.is_zero()) continue;
      for (std::size_t j = col; j <= n; ++j) aug[i][j] -= c * aug[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (!aug[i][n].is_zero()) throw std::invalid_argument("solve_exact: inconsistent system");
  RatVec x(n);
  for (std::size_t col = 0; col < n; ++col) x[col] = aug[pivot_row[col]][n];
  return x;
}

}  // namespace symdex
