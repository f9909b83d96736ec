#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "skewpf/degree_piece.hpp"
#include "skewpf/polynomial.hpp"
#include "skewpf/qmatrix.hpp"

namespace skewpf {

using PolyGrid = std::vector<std::vector<Polynomial>>;

// Skew-symmetric matrix of polynomial entries; only the upper triangle is
// stored. Catalog matrices have entries linear in x0..x4; deformation
// families additionally carry the parameter t in their coefficients.
class SkewLinMatrix {
 public:
  explicit SkewLinMatrix(int n = 6);

  int size() const { return n_; }
  const Polynomial& upper(int i, int j) const;  // requires i < j
  void set(int i, int j, const Polynomial& p);  // sets (i,j) = p, (j,i) = -p
  Polynomial entry(int i, int j) const;
  bool is_zero() const;
  bool is_linear_in_x() const;  // every entry homogeneous of degree 1 in x0..x4
  bool has_parameters() const;  // any variable outside x0..x4

  SkewLinMatrix operator+(const SkewLinMatrix& o) const;
  SkewLinMatrix operator-(const SkewLinMatrix& o) const;
  SkewLinMatrix operator-() const;
  SkewLinMatrix scaled(const Polynomial& f) const;
  SkewLinMatrix scaled(const Rational& c) const;

  SkewLinMatrix conjugated(const QMatrix& B) const;   // B^T M B
  SkewLinMatrix conjugated(const PolyGrid& C) const;  // C^T M C, polynomial C
  // x_k -> sum_l C(k,l) x_l on every entry.
  SkewLinMatrix substituted_x(const QMatrix& C) const;
  SkewLinMatrix substituted(const std::map<Var, Polynomial>& images) const;
  SkewLinMatrix eval_t(const Rational& t0) const;

  // 3x3 skew block [[0,p,q],[-p,0,r],[-q,-r,0]].
  static SkewLinMatrix skew3(const Polynomial& p, const Polynomial& q, const Polynomial& r);
  // Assemble [[tl, tr],[-tr^T, br]] from 3x3 blocks; tl, br must be skew.
  static SkewLinMatrix from_blocks(const SkewLinMatrix& tl, const PolyGrid& tr, const SkewLinMatrix& br);

  PolyGrid grid() const;  // full n x n grid with signs

  friend bool operator==(const SkewLinMatrix& a, const SkewLinMatrix& b) {
    return a.n_ == b.n_ && a.upper_ == b.upper_;
  }

 private:
  int n_;
  std::vector<Polynomial> upper_;
  int uidx(int i, int j) const;
};

// Pfaffian by recursive Laplace expansion along the first row:
//   Pf(N) = sum_{j>0} (-1)^{j+1} N_{0j} Pf(N with rows/cols 0,j erased).
// Satisfies Pf(N)^2 = det(N). Fails with OddSize on odd matrices.
Polynomial pfaffian(const SkewLinMatrix& m);

// The 15 sub-Pfaffians q_{ab} of a 6x6 matrix, pairs (a,b), a<b, in
// lexicographic order: q_{ab} = Pf(m with rows and columns a, b erased).
std::vector<Polynomial> sub_pfaffians(const SkewLinMatrix& m);

// First-row Laplace identity, assembled from the stored entries and the
// sub-Pfaffians: sum_{b>0} (-1)^{b+1} m_{0b} q_{0b}. Equals pfaffian(m).
Polynomial laplace_first_row(const SkewLinMatrix& m);

// Differential pairing <L, m> = sum_{a<b} (-1)^{a+b+1} L_{ab} q_{ab}(m).
// This is the epsilon-coefficient of Pf(m + eps L); with L = m it returns
// 3 Pf(m) (the Pfaffian is cubic in the entries of a 6x6 matrix).
Polynomial laplace_pairing(const SkewLinMatrix& L, const SkewLinMatrix& m);

// Span of the 15 entry linear forms in R_1. Its vanishing locus is the
// rank-0 locus of m, a linear subspace of P^4 of dimension 4 - dim.
DegreePiece entry_span(const SkewLinMatrix& m);

// Four independent linear forms cutting out a reduced point of P^4.
struct PointIdeal {
  std::array<Polynomial, 4> forms;
  QMatrix point() const;  // 1x5 homogeneous coordinates of the common zero
};

// The unique point where m vanishes identically (entry span must have
// dimension 4; WrongSpanDimension otherwise).
PointIdeal rank0_point(const SkewLinMatrix& m);

// Columns are vectors of linear forms v with m . v = 0.
struct SyzygyMatrix {
  std::vector<std::array<Polynomial, 6>> cols;
  int col_count() const { return static_cast<int>(cols.size()); }
  // Column span as a canonical subspace of the 30 entry coefficients.
  QMatrix coefficient_span() const;
};

// Minimal linear syzygies of m, i.e. a canonical basis of
// {v : 6-vector of linear forms, m . v = 0}, via the induced rational
// linear system on the 30 coefficient unknowns. Requires Pf(m) = 0.
SyzygyMatrix linear_syzygies(const SkewLinMatrix& m);

// Linear syzygies of the transpose of a 6xk matrix of linear forms given by
// its columns; returns the canonical kernel basis of {w : S^T w = 0}.
SyzygyMatrix linear_syzygies_of_transpose(const SyzygyMatrix& s);

std::array<Polynomial, 6> mat_vec(const SkewLinMatrix& m, const std::array<Polynomial, 6>& v);

// Degree-2 span of the 2x2 minors of a 6xk matrix of linear forms.
DegreePiece minors2_span(const SyzygyMatrix& s);

// Coordinates of a pure matrix of linear forms as a row vector of the 75
// coefficients a_{ijk} (column 5*pair_index(i,j)+k).
QMatrix flatten_coords(const SkewLinMatrix& m);
SkewLinMatrix unflatten_coords(const QMatrix& row);

// Skew matrix whose (i,j) entry is sum_k base_var(i,j,k) * x_k for the chosen
// symbolic block ('a' or 'b').
SkewLinMatrix symbolic_skew(char block);

}  // namespace skewpf
