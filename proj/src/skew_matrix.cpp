#include "skewpf/skew_matrix.hpp"

#include "skewpf/pfaffian_detail.hpp"

namespace skewpf {

SkewLinMatrix::SkewLinMatrix(int n) : n_(n), upper_(static_cast<size_t>(n) * (n - 1) / 2) {
  if (n < 1) fail(Errc::BadInput, "matrix size must be positive");
}

int SkewLinMatrix::uidx(int i, int j) const {
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

const Polynomial& SkewLinMatrix::upper(int i, int j) const {
  if (!(0 <= i && i < j && j < n_)) fail(Errc::BadInput, "upper-triangle index out of range");
  return upper_[uidx(i, j)];
}

void SkewLinMatrix::set(int i, int j, const Polynomial& p) {
  if (!(0 <= i && i < j && j < n_)) fail(Errc::BadInput, "upper-triangle index out of range");
  upper_[uidx(i, j)] = p;
}

Polynomial SkewLinMatrix::entry(int i, int j) const {
  if (i == j) return Polynomial();
  if (i < j) return upper(i, j);
  return -upper(j, i);
}

bool SkewLinMatrix::is_zero() const {
  for (const auto& p : upper_)
    if (!p.is_zero()) return false;
  return true;
}

bool SkewLinMatrix::is_linear_in_x() const {
  for (const auto& p : upper_) {
    if (p.is_zero()) continue;
    int d = 0;
    if (!p.is_homogeneous(&d) || d != 1) return false;
  }
  return true;
}

bool SkewLinMatrix::has_parameters() const {
  for (const auto& p : upper_)
    for (const auto& [m, c] : p.terms())
      for (const auto& [v, e] : m.factors())
        if (!is_x(v)) return true;
  return false;
}

SkewLinMatrix SkewLinMatrix::operator+(const SkewLinMatrix& o) const {
  if (n_ != o.n_) fail(Errc::BadInput, "size mismatch");
  SkewLinMatrix r(n_);
  for (size_t i = 0; i < upper_.size(); ++i) r.upper_[i] = upper_[i] + o.upper_[i];
  return r;
}

SkewLinMatrix SkewLinMatrix::operator-(const SkewLinMatrix& o) const { return *this + (-o); }

SkewLinMatrix SkewLinMatrix::operator-() const {
  SkewLinMatrix r(n_);
  for (size_t i = 0; i < upper_.size(); ++i) r.upper_[i] = -upper_[i];
  return r;
}

SkewLinMatrix SkewLinMatrix::scaled(const Polynomial& f) const {
  SkewLinMatrix r(n_);
  for (size_t i = 0; i < upper_.size(); ++i) r.upper_[i] = upper_[i] * f;
  return r;
}

SkewLinMatrix SkewLinMatrix::scaled(const Rational& c) const { return scaled(Polynomial(c)); }

SkewLinMatrix SkewLinMatrix::conjugated(const QMatrix& B) const {
  if (B.rows() != n_ || B.cols() != n_) fail(Errc::BadInput, "conjugator size mismatch");
  SkewLinMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Polynomial s;
      for (int k = 0; k < n_; ++k) {
        if (B.at(k, i).is_zero()) continue;
        for (int l = 0; l < n_; ++l) {
          if (k == l || B.at(l, j).is_zero()) continue;
          s += entry(k, l) * (B.at(k, i) * B.at(l, j));
        }
      }
      r.set(i, j, s);
    }
  return r;
}

SkewLinMatrix SkewLinMatrix::conjugated(const PolyGrid& C) const {
  SkewLinMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Polynomial s;
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
          if (k == l) continue;
          s += C[k][i] * entry(k, l) * C[l][j];
        }
      r.set(i, j, s);
    }
  return r;
}

SkewLinMatrix SkewLinMatrix::substituted_x(const QMatrix& C) const {
  if (C.rows() != kNumX || C.cols() != kNumX) fail(Errc::BadInput, "coordinate change must be 5x5");
  std::map<Var, Polynomial> images;
  for (int k = 0; k < kNumX; ++k) {
    Polynomial img;
    for (int l = 0; l < kNumX; ++l) img += Polynomial::var(x_var(l)) * C.at(k, l);
    images.emplace(x_var(k), img);
  }
  return substituted(images);
}

SkewLinMatrix SkewLinMatrix::substituted(const std::map<Var, Polynomial>& images) const {
  SkewLinMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) r.set(i, j, upper(i, j).substituted(images));
  return r;
}

SkewLinMatrix SkewLinMatrix::eval_t(const Rational& t0) const {
  SkewLinMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) r.set(i, j, upper(i, j).eval_var(kTVar, t0));
  return r;
}

SkewLinMatrix SkewLinMatrix::skew3(const Polynomial& p, const Polynomial& q, const Polynomial& r) {
  SkewLinMatrix m(3);
  m.set(0, 1, p);
  m.set(0, 2, q);
  m.set(1, 2, r);
  return m;
}

SkewLinMatrix SkewLinMatrix::from_blocks(const SkewLinMatrix& tl, const PolyGrid& tr,
                                         const SkewLinMatrix& br) {
  if (tl.size() != 3 || br.size() != 3 || tr.size() != 3) fail(Errc::BadInput, "blocks must be 3x3");
  SkewLinMatrix m(6);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      m.set(i, j, tl.upper(i, j));
      m.set(3 + i, 3 + j, br.upper(i, j));
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.set(i, 3 + j, tr[i][j]);
  return m;
}

PolyGrid SkewLinMatrix::grid() const {
  PolyGrid g(n_, std::vector<Polynomial>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) g[i][j] = entry(i, j);
  return g;
}

Polynomial pfaffian(const SkewLinMatrix& m) {
  if (m.size() % 2 != 0) fail(Errc::OddSize, "pfaffian of odd-size matrix");
  return detail::pfaffian_grid(m.grid());
}

std::vector<Polynomial> sub_pfaffians(const SkewLinMatrix& m) {
  if (m.size() != 6) fail(Errc::BadInput, "sub_pfaffians expects a 6x6 matrix");
  PolyGrid g = m.grid();
  std::vector<Polynomial> out;
  out.reserve(15);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) out.push_back(detail::sub_pfaffian_grid(g, a, b));
  return out;
}

Polynomial laplace_first_row(const SkewLinMatrix& m) {
  std::vector<Polynomial> q = sub_pfaffians(m);
  Polynomial s;
  for (int b = 1; b < 6; ++b) {
    Polynomial term = m.entry(0, b) * q[pair_index(0, b)];
    s += (b % 2 == 1) ? term : -term;
  }
  return s;
}

Polynomial laplace_pairing(const SkewLinMatrix& L, const SkewLinMatrix& m) {
  std::vector<Polynomial> q = sub_pfaffians(m);
  Polynomial s;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      Polynomial term = L.entry(a, b) * q[pair_index(a, b)];
      s += ((a + b) % 2 == 0) ? -term : term;  // sign (-1)^{a+b+1}
    }
  return s;
}

DegreePiece entry_span(const SkewLinMatrix& m) {
  std::vector<Polynomial> entries;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) entries.push_back(m.upper(i, j));
  return DegreePiece::span(entries, 1, x_vars());
}

QMatrix PointIdeal::point() const {
  QMatrix rows(4, kNumX);
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < kNumX; ++k) rows.at(r, k) = forms[r].coeff(Monomial::var(x_var(k)));
  QMatrix kernel = rows.kernel_basis();
  if (kernel.rows() != 1) fail(Errc::BadInput, "point ideal does not cut out a single point");
  return kernel;
}

PointIdeal rank0_point(const SkewLinMatrix& m) {
  DegreePiece span = entry_span(m);
  if (span.dim() != 4)
    fail(Errc::WrongSpanDimension,
         "entry span has dimension " + std::to_string(span.dim()) + ", expected 4");
  PointIdeal p;
  std::vector<Polynomial> basis = span.basis_polynomials();
  for (int i = 0; i < 4; ++i) p.forms[i] = basis[i];
  return p;
}

std::array<Polynomial, 6> mat_vec(const SkewLinMatrix& m, const std::array<Polynomial, 6>& v) {
  std::array<Polynomial, 6> out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out[i] += m.entry(i, j) * v[j];
  return out;
}

QMatrix SyzygyMatrix::coefficient_span() const {
  QMatrix m(col_count(), 30);
  for (int c = 0; c < col_count(); ++c)
    for (int e = 0; e < 6; ++e)
      for (int k = 0; k < kNumX; ++k)
        m.at(c, 5 * e + k) = cols[c][e].coeff(Monomial::var(x_var(k)));
  m.rref_in_place();
  return m.drop_zero_rows();
}

namespace {
// Kernel of a list of "sum_e entry_poly[i][e] * v_e = 0" conditions on a
// 6-vector v of linear forms; unknowns are the 30 coefficients v[e][k].
SyzygyMatrix linear_kernel(const std::vector<std::array<Polynomial, 6>>& rows) {
  std::vector<Monomial> quad = monomial_basis(2, x_vars());
  std::map<Monomial, int, GrevlexLess> qidx;
  for (size_t q = 0; q < quad.size(); ++q) qidx.emplace(quad[q], static_cast<int>(q));
  int nrows = static_cast<int>(rows.size()) * 15;
  QMatrix sys(nrows, 30);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int e = 0; e < 6; ++e) {
      const Polynomial& coef = rows[r][e];
      if (coef.is_zero()) continue;
      for (int k = 0; k < kNumX; ++k) {
        Polynomial prod = coef * Polynomial::var(x_var(k));
        for (const auto& [mon, c] : prod.terms())
          sys.at(static_cast<int>(r) * 15 + qidx.at(mon), 5 * e + k) += c;
      }
    }
  QMatrix kernel = sys.kernel_basis();
  SyzygyMatrix s;
  for (int r = 0; r < kernel.rows(); ++r) {
    std::array<Polynomial, 6> col;
    for (int e = 0; e < 6; ++e)
      for (int k = 0; k < kNumX; ++k)
        col[e] += Polynomial::var(x_var(k)) * kernel.at(r, 5 * e + k);
    s.cols.push_back(col);
  }
  return s;
}
}  // namespace

SyzygyMatrix linear_syzygies(const SkewLinMatrix& m) {
  if (m.size() != 6) fail(Errc::BadInput, "linear_syzygies expects a 6x6 matrix");
  if (m.has_parameters()) fail(Errc::BadInput, "linear_syzygies expects entries in x only");
  if (!pfaffian(m).is_zero()) fail(Errc::NoPfaffianZero, "matrix has nonzero Pfaffian");
  std::vector<std::array<Polynomial, 6>> rows(6);
  for (int i = 0; i < 6; ++i)
    for (int e = 0; e < 6; ++e) rows[i][e] = m.entry(i, e);
  return linear_kernel(rows);
}

SyzygyMatrix linear_syzygies_of_transpose(const SyzygyMatrix& s) {
  // Conditions S^T w = 0: one row of conditions per column of S.
  std::vector<std::array<Polynomial, 6>> rows;
  for (const auto& col : s.cols) rows.push_back(col);
  return linear_kernel(rows);
}

DegreePiece minors2_span(const SyzygyMatrix& s) {
  std::vector<Polynomial> minors;
  int k = s.col_count();
  for (int c0 = 0; c0 < k; ++c0)
    for (int c1 = c0 + 1; c1 < k; ++c1)
      for (int r0 = 0; r0 < 6; ++r0)
        for (int r1 = r0 + 1; r1 < 6; ++r1)
          minors.push_back(s.cols[c0][r0] * s.cols[c1][r1] - s.cols[c1][r0] * s.cols[c0][r1]);
  return DegreePiece::span(minors, 2, x_vars());
}

QMatrix flatten_coords(const SkewLinMatrix& m) {
  if (m.size() != 6) fail(Errc::BadInput, "flatten_coords expects a 6x6 matrix");
  QMatrix row(1, 75);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = 0; k < kNumX; ++k)
        row.at(0, 5 * pair_index(i, j) + k) = m.upper(i, j).coeff(Monomial::var(x_var(k)));
  return row;
}

SkewLinMatrix unflatten_coords(const QMatrix& row) {
  if (row.rows() != 1 || row.cols() != 75) fail(Errc::BadInput, "expected a 1x75 coordinate row");
  SkewLinMatrix m(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      Polynomial p;
      for (int k = 0; k < kNumX; ++k)
        p += Polynomial::var(x_var(k)) * row.at(0, 5 * pair_index(i, j) + k);
      m.set(i, j, p);
    }
  return m;
}

SkewLinMatrix symbolic_skew(char block) {
  SkewLinMatrix m(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      Polynomial p;
      for (int k = 0; k < kNumX; ++k) {
        Var v = block == 'a' ? a_var(i, j, k) : b_var(i, j, k);
        p += Polynomial::var(v) * Polynomial::var(x_var(k));
      }
      m.set(i, j, p);
    }
  return m;
}

}  // namespace skewpf
