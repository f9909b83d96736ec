#include "skewpf/jets.hpp"

#include <algorithm>

#include "skewpf/pfaffian_detail.hpp"

namespace skewpf {

bool JetPolynomial::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

JetPolynomial JetPolynomial::operator+(const JetPolynomial& o) const {
  int n = std::min(order(), o.order());
  JetPolynomial r(n);
  for (int k = 0; k <= n; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

JetPolynomial JetPolynomial::operator-(const JetPolynomial& o) const { return *this + (-o); }

JetPolynomial JetPolynomial::operator-() const {
  JetPolynomial r(order());
  for (int k = 0; k <= order(); ++k) r.c_[k] = -c_[k];
  return r;
}

JetPolynomial JetPolynomial::operator*(const JetPolynomial& o) const {
  int n = std::min(order(), o.order());
  JetPolynomial r(n);
  for (int i = 0; i <= n; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n && j <= o.order(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

JetPolynomial JetPolynomial::operator*(const Rational& c) const {
  JetPolynomial r(order());
  for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] * c;
  return r;
}

JetPolynomial JetPolynomial::truncate(int m) const {
  if (m > order()) fail(Errc::OrderTooLarge, "truncation order exceeds jet order");
  if (m < 0) fail(Errc::BadInput, "negative truncation order");
  return JetPolynomial(std::vector<Polynomial>(c_.begin(), c_.begin() + m + 1));
}

JetPolynomial JetPolynomial::cover(int r) const {
  if (r < 1) fail(Errc::BadInput, "covering multiplicity must be >= 1");
  JetPolynomial out(r * order());
  for (int k = 0; k <= order(); ++k) out.c_[r * k] = c_[k];
  return out;
}

std::optional<std::pair<int, Polynomial>> JetPolynomial::first_nonzero() const {
  for (int k = 0; k <= order(); ++k)
    if (!c_[k].is_zero()) return std::make_pair(k, c_[k]);
  return std::nullopt;
}

std::optional<Rational> poly_proportional(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) fail(Errc::BadInput, "proportionality against the zero polynomial");
  if (p.is_zero()) return Rational(0);
  const auto& lead = *q.terms().begin();
  Rational c = p.coeff(lead.first) / lead.second;
  if (p == q * c) return c;
  return std::nullopt;
}

bool proportionality_check(const JetPolynomial& jP, const JetPolynomial& jF,
                           std::vector<Rational>* unit) {
  int n = std::min(jP.order(), jF.order());
  // Strip the common eps^s factor forced by jF: u a unit means jP and jF
  // first become nonzero at the same index.
  auto fz = jF.truncate(n).first_nonzero();
  if (!fz) {
    if (unit) *unit = {Rational(1)};
    return jP.truncate(n).is_zero();
  }
  int s = fz->first;
  for (int k = 0; k < s; ++k)
    if (!jP.coeff(k).is_zero()) return false;
  const Polynomial& f0 = fz->second;
  std::vector<Rational> u(n - s + 1, Rational(0));
  for (int k = 0; k + s <= n; ++k) {
    Polynomial rhs = jP.coeff(k + s);
    for (int i = 0; i < k; ++i) rhs -= jF.coeff(k - i + s) * u[i];
    auto c = poly_proportional(rhs, f0);
    if (!c) return false;
    u[k] = *c;
  }
  if (u[0].is_zero()) return false;
  if (unit) *unit = u;
  return true;
}

JetMatrix JetMatrix::truncate(int m) const {
  if (m > order()) fail(Errc::OrderTooLarge, "truncation order exceeds jet order");
  if (m < 0) fail(Errc::BadInput, "negative truncation order");
  return JetMatrix(std::vector<SkewLinMatrix>(c_.begin(), c_.begin() + m + 1));
}

JetMatrix JetMatrix::cover(int r) const {
  if (r < 1) fail(Errc::BadInput, "covering multiplicity must be >= 1");
  std::vector<SkewLinMatrix> out(static_cast<size_t>(r) * order() + 1, SkewLinMatrix(size()));
  for (int k = 0; k <= order(); ++k) out[static_cast<size_t>(r) * k] = c_[k];
  return JetMatrix(std::move(out));
}

JetPolynomial JetMatrix::entry_jet(int i, int j) const {
  JetPolynomial p(order());
  for (int k = 0; k <= order(); ++k) p.set_coeff(k, c_[k].entry(i, j));
  return p;
}

namespace {
std::vector<std::vector<JetPolynomial>> jet_grid(const JetMatrix& j) {
  int n = j.size();
  std::vector<std::vector<JetPolynomial>> g(n, std::vector<JetPolynomial>(n, JetPolynomial(j.order())));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g[r][c] = j.entry_jet(r, c);
  return g;
}
}  // namespace

JetPolynomial jet_pfaffian(const JetMatrix& j) {
  if (j.size() % 2 != 0) fail(Errc::OddSize, "pfaffian of odd-size matrix");
  return detail::pfaffian_grid(jet_grid(j));
}

std::vector<JetPolynomial> jet_sub_pfaffians(const JetMatrix& j) {
  if (j.size() != 6) fail(Errc::BadInput, "sub_pfaffians expects 6x6 jets");
  auto g = jet_grid(j);
  std::vector<JetPolynomial> out;
  out.reserve(15);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) out.push_back(detail::sub_pfaffian_grid(g, a, b));
  return out;
}

}  // namespace skewpf
