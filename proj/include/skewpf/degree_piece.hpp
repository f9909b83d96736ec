#pragma once

#include <vector>

#include "skewpf/polynomial.hpp"
#include "skewpf/qmatrix.hpp"

namespace skewpf {

// A linear subspace of polynomials supported on a fixed ordered monomial list,
// held as a reduced row-echelon basis so equality is bit-exact comparison.
// The standard ambient is the full degree-d piece R_d of the polynomial ring
// in a chosen variable block (grevlex-descending monomial order).
class DegreePiece {
 public:
  DegreePiece() = default;

  // Span inside R_d over `vars`; inputs must be homogeneous of degree d.
  static DegreePiece span(const std::vector<Polynomial>& polys, int d, const std::vector<Var>& vars);
  // Span over an explicit ambient monomial list (used for parametric pieces).
  static DegreePiece span_on(const std::vector<Monomial>& ambient, const std::vector<Polynomial>& polys);

  int dim() const { return basis_.rows(); }
  int degree() const { return degree_; }
  const std::vector<Monomial>& ambient() const { return ambient_; }
  const QMatrix& basis_matrix() const { return basis_; }
  const std::vector<int>& pivot_columns() const { return pivots_; }
  std::vector<Polynomial> basis_polynomials() const;

  DegreePiece sum(const DegreePiece& o) const;
  DegreePiece intersect(const DegreePiece& o) const;
  bool contains(const Polynomial& p) const;
  bool contains(const DegreePiece& o) const;

  // Coordinate row vector of p in the ambient basis; fails on unsupported monomials.
  QMatrix coords(const Polynomial& p) const;
  // p reduced modulo the subspace (pivot elimination); zero iff contains(p).
  Polynomial residue(const Polynomial& p) const;

  friend bool operator==(const DegreePiece& a, const DegreePiece& b) {
    return a.degree_ == b.degree_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int degree_ = 0;
  std::vector<Monomial> ambient_;
  QMatrix basis_;  // RREF rows, dim x ambient.size()
  std::vector<int> pivots_;
  void require_same_ambient(const DegreePiece& o) const;
};

enum class PieceOp { Sum, Intersection, ContainsTest };

// Dispatcher mirroring the three variants of the subspace operation.
// ContainsTest reports a <= b through `contains` and returns b unchanged.
DegreePiece piece_ops(const DegreePiece& a, const DegreePiece& b, PieceOp op, bool* contains = nullptr);

}  // namespace skewpf
