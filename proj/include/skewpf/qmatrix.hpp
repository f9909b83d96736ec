#pragma once

#include <optional>
#include <vector>

#include "skewpf/rational.hpp"

namespace skewpf {

// Dense matrix over the rationals. All elimination is exact; reduced
// row-echelon form (leading 1 pivots, zeros above and below) is the canonical
// representative used for subspace comparisons throughout the project.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const;

  QMatrix transposed() const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-() const;
  friend bool operator==(const QMatrix& a, const QMatrix& b);

  // Gauss-Jordan in place; returns the rank and, if requested, the pivot columns.
  int rref_in_place(std::vector<int>* pivot_cols = nullptr);
  QMatrix rref(std::vector<int>* pivot_cols = nullptr) const;
  int rank() const;

  // Rows form the canonical (RREF) basis of {v : this * v^T = 0}.
  // Row count is cols() - rank().
  QMatrix kernel_basis() const;

  // Particular solution x of this * x = b (b a column vector); nullopt if inconsistent.
  std::optional<QMatrix> solve(const QMatrix& b) const;

  QMatrix inverse() const;  // requires square nonsingular

  QMatrix stacked_below(const QMatrix& o) const;    // same cols
  QMatrix augmented_right(const QMatrix& o) const;  // same rows
  QMatrix row(int i) const;
  QMatrix drop_zero_rows() const;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

}  // namespace skewpf
