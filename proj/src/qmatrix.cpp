#include "skewpf/qmatrix.hpp"

#include <algorithm>

namespace skewpf {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rational& r) { return r.is_zero(); });
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::BadInput, "matrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::BadInput, "matrix sum shape mismatch");
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

QMatrix QMatrix::operator-() const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

// Elimination runs over integers: rows are scaled to primitive integer
// vectors, updates are two-term fraction-free combinations, and each row is
// divided by its content afterwards to keep entries small. The output is the
// usual reduced row-echelon form over Q (unique, so still canonical).
namespace {

void strip_content(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& v : row) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& v : row)
    if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

int QMatrix::rref_in_place(std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  std::vector<std::vector<mpz_class>> z(rows_, std::vector<mpz_class>(cols_));
  for (int i = 0; i < rows_; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < cols_; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), at(i, j).denominator().get_mpz_t());
    for (int j = 0; j < cols_; ++j)
      z[i][j] = at(i, j).numerator() * (lcm / at(i, j).denominator());
    strip_content(z[i]);
  }

  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    // smallest pivot entry keeps the update products short
    int piv = -1;
    for (int i = lead; i < rows_; ++i) {
      if (z[i][col] == 0) continue;
      if (piv < 0 || mpz_cmpabs(z[i][col].get_mpz_t(), z[piv][col].get_mpz_t()) < 0) piv = i;
    }
    if (piv < 0) continue;
    if (piv != lead) std::swap(z[piv], z[lead]);
    const std::vector<mpz_class>& prow = z[lead];
    for (int i = lead + 1; i < rows_; ++i) {
      if (z[i][col] == 0) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), prow[col].get_mpz_t(), z[i][col].get_mpz_t());
      mpz_class a = prow[col] / g, b = z[i][col] / g;
      for (int j = col; j < cols_; ++j) z[i][j] = z[i][j] * a - prow[j] * b;
      strip_content(z[i]);
    }
    pivots.push_back(col);
    ++lead;
  }

  // back-elimination above the pivots
  for (int r = lead - 1; r >= 0; --r) {
    int col = pivots[r];
    for (int i = 0; i < r; ++i) {
      if (z[i][col] == 0) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), z[r][col].get_mpz_t(), z[i][col].get_mpz_t());
      mpz_class a = z[r][col] / g, b = z[i][col] / g;
      for (int j = 0; j < cols_; ++j) z[i][j] = z[i][j] * a - z[r][j] * b;
      strip_content(z[i]);
    }
  }

  // normalise pivots to 1 and write back
  for (int i = 0; i < rows_; ++i) {
    if (i < lead) {
      mpz_class p = z[i][pivots[i]];
      for (int j = 0; j < cols_; ++j)
        at(i, j) = Rational(mpq_class(z[i][j], p));
    } else {
      for (int j = 0; j < cols_; ++j) at(i, j) = Rational(0);
    }
  }
  if (pivot_cols) *pivot_cols = pivots;
  return lead;
}

QMatrix QMatrix::rref(std::vector<int>* pivot_cols) const {
  QMatrix copy = *this;
  copy.rref_in_place(pivot_cols);
  return copy;
}

int QMatrix::rank() const {
  QMatrix copy = *this;
  return copy.rref_in_place();
}

QMatrix QMatrix::kernel_basis() const {
  std::vector<int> pivots;
  QMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  int nullity = cols_ - static_cast<int>(pivots.size());
  QMatrix basis(nullity, cols_);
  int row = 0;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    basis.at(row, f) = Rational(1);
    for (size_t p = 0; p < pivots.size(); ++p) basis.at(row, pivots[p]) = -r.at(static_cast<int>(p), f);
    ++row;
  }
  basis.rref_in_place();
  return basis;
}

std::optional<QMatrix> QMatrix::solve(const QMatrix& b) const {
  if (b.rows_ != rows_ || b.cols_ != 1) fail(Errc::BadInput, "solve expects a matching column vector");
  std::vector<int> pivots;
  QMatrix aug = augmented_right(b).rref(&pivots);
  for (int p : pivots)
    if (p == cols_) return std::nullopt;
  QMatrix x(cols_, 1);
  for (size_t r = 0; r < pivots.size(); ++r) x.at(pivots[r], 0) = aug.at(static_cast<int>(r), cols_);
  return x;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) fail(Errc::BadInput, "inverse of non-square matrix");
  QMatrix aug = augmented_right(identity(rows_));
  int rank = aug.rref_in_place();
  if (rank != rows_) fail(Errc::BadInput, "inverse of singular matrix");
  QMatrix inv(rows_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

QMatrix QMatrix::stacked_below(const QMatrix& o) const {
  if (o.cols_ != cols_) fail(Errc::BadInput, "stack column mismatch");
  QMatrix r(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

QMatrix QMatrix::augmented_right(const QMatrix& o) const {
  if (o.rows_ != rows_) fail(Errc::BadInput, "augment row mismatch");
  QMatrix r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

QMatrix QMatrix::row(int i) const {
  QMatrix r(1, cols_);
  for (int j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
  return r;
}

QMatrix QMatrix::drop_zero_rows() const {
  std::vector<int> keep;
  for (int i = 0; i < rows_; ++i) {
    bool zero = true;
    for (int j = 0; j < cols_ && zero; ++j) zero = at(i, j).is_zero();
    if (!zero) keep.push_back(i);
  }
  QMatrix r(static_cast<int>(keep.size()), cols_);
  for (size_t i = 0; i < keep.size(); ++i)
    for (int j = 0; j < cols_; ++j) r.at(static_cast<int>(i), j) = at(keep[i], j);
  return r;
}

}  // namespace skewpf
