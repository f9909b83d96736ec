#include "skewpf/degree_piece.hpp"

#include <map>

namespace skewpf {

namespace {
QMatrix coord_rows(const std::vector<Monomial>& ambient, const std::vector<Polynomial>& polys) {
  std::map<Monomial, int, GrevlexLess> index;
  for (size_t i = 0; i < ambient.size(); ++i) index.emplace(ambient[i], static_cast<int>(i));
  QMatrix m(static_cast<int>(polys.size()), static_cast<int>(ambient.size()));
  for (size_t r = 0; r < polys.size(); ++r)
    for (const auto& [mon, c] : polys[r].terms()) {
      auto it = index.find(mon);
      if (it == index.end()) fail(Errc::DegreeMismatch, "monomial " + mon.str() + " outside ambient basis");
      m.at(static_cast<int>(r), it->second) = c;
    }
  return m;
}
}  // namespace

DegreePiece DegreePiece::span(const std::vector<Polynomial>& polys, int d, const std::vector<Var>& vars) {
  for (const auto& p : polys) {
    int pd = 0;
    if (!p.is_homogeneous(&pd)) fail(Errc::NonHomogeneous, "piece_span input has mixed degree");
    if (!p.is_zero() && pd != d) fail(Errc::NonHomogeneous, "piece_span input degree != piece degree");
  }
  DegreePiece piece;
  piece.degree_ = d;
  piece.ambient_ = monomial_basis(d, vars);
  piece.basis_ = coord_rows(piece.ambient_, polys);
  piece.basis_.rref_in_place(&piece.pivots_);
  piece.basis_ = piece.basis_.drop_zero_rows();
  return piece;
}

DegreePiece DegreePiece::span_on(const std::vector<Monomial>& ambient, const std::vector<Polynomial>& polys) {
  DegreePiece piece;
  piece.degree_ = ambient.empty() ? 0 : ambient.front().degree();
  piece.ambient_ = ambient;
  piece.basis_ = coord_rows(ambient, polys);
  piece.basis_.rref_in_place(&piece.pivots_);
  piece.basis_ = piece.basis_.drop_zero_rows();
  return piece;
}

std::vector<Polynomial> DegreePiece::basis_polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(basis_.rows());
  for (int r = 0; r < basis_.rows(); ++r) {
    Polynomial p;
    for (int j = 0; j < basis_.cols(); ++j) p += Polynomial::term(ambient_[j], basis_.at(r, j));
    out.push_back(p);
  }
  return out;
}

void DegreePiece::require_same_ambient(const DegreePiece& o) const {
  if (degree_ != o.degree_ || ambient_ != o.ambient_)
    fail(Errc::DegreeMismatch, "subspaces live in different graded pieces");
}

DegreePiece DegreePiece::sum(const DegreePiece& o) const {
  require_same_ambient(o);
  DegreePiece out;
  out.degree_ = degree_;
  out.ambient_ = ambient_;
  out.basis_ = basis_.stacked_below(o.basis_);
  out.basis_.rref_in_place(&out.pivots_);
  out.basis_ = out.basis_.drop_zero_rows();
  return out;
}

// Zassenhaus: row-reduce [A A; B 0]; rows with zero left half carry the
// intersection in their right half.
DegreePiece DegreePiece::intersect(const DegreePiece& o) const {
  require_same_ambient(o);
  int n = static_cast<int>(ambient_.size());
  QMatrix top = basis_.augmented_right(basis_);
  QMatrix bottom = o.basis_.augmented_right(QMatrix(o.basis_.rows(), n));
  QMatrix z = top.stacked_below(bottom);
  z.rref_in_place();
  std::vector<Polynomial> gens;
  for (int r = 0; r < z.rows(); ++r) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j) left_zero = z.at(r, j).is_zero();
    if (!left_zero) continue;
    Polynomial p;
    for (int j = 0; j < n; ++j) p += Polynomial::term(ambient_[j], z.at(r, n + j));
    if (!p.is_zero()) gens.push_back(p);
  }
  return span_on(ambient_, gens);
}

QMatrix DegreePiece::coords(const Polynomial& p) const {
  return coord_rows(ambient_, {p});
}

Polynomial DegreePiece::residue(const Polynomial& p) const {
  QMatrix v = coords(p);
  for (int r = 0; r < basis_.rows(); ++r) {
    const Rational& lead = v.at(0, pivots_[r]);
    if (lead.is_zero()) continue;
    Rational f = lead;
    for (int j = 0; j < v.cols(); ++j) v.at(0, j) -= f * basis_.at(r, j);
  }
  Polynomial out;
  for (int j = 0; j < v.cols(); ++j) out += Polynomial::term(ambient_[j], v.at(0, j));
  return out;
}

bool DegreePiece::contains(const Polynomial& p) const { return residue(p).is_zero(); }

bool DegreePiece::contains(const DegreePiece& o) const {
  require_same_ambient(o);
  for (const auto& p : o.basis_polynomials())
    if (!contains(p)) return false;
  return true;
}

DegreePiece piece_ops(const DegreePiece& a, const DegreePiece& b, PieceOp op, bool* contains) {
  switch (op) {
    case PieceOp::Sum:
      return a.sum(b);
    case PieceOp::Intersection:
      return a.intersect(b);
    case PieceOp::ContainsTest:
      if (contains) *contains = b.contains(a);
      return b;
  }
  fail(Errc::BadInput, "unknown piece op");
}

}  // namespace skewpf
