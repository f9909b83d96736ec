#include "skewpf/random_gen.hpp"

namespace skewpf {

Rational Rng::rational(long max_num, long max_den) {
  return Rational(integer(-max_num, max_num), integer(1, max_den));
}

Rational Rng::nonzero_rational(long max_num, long max_den) {
  for (;;) {
    Rational r = rational(max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

Polynomial Rng::linear_form(bool allow_zero) {
  for (;;) {
    Polynomial p;
    for (int k = 0; k < kNumX; ++k) p += Polynomial::var(x_var(k)) * rational(3, 2);
    if (allow_zero || !p.is_zero()) return p;
  }
}

Polynomial Rng::cubic_form() {
  for (;;) {
    Polynomial p;
    for (const auto& m : monomial_basis(3, x_vars()))
      if (integer(0, 2) == 0) p += Polynomial::term(m, rational(5, 2));
    if (!p.is_zero()) return p;
  }
}

QMatrix Rng::matrix(int rows, int cols, long max_num) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(integer(-max_num, max_num));
  return m;
}

QMatrix Rng::invertible(int n) {
  for (;;) {
    QMatrix m = matrix(n, n, 3);
    if (m.rank() == n) return m;
  }
}

SkewLinMatrix Rng::skew_rational(int n) {
  SkewLinMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set(i, j, Polynomial(rational(9, 3)));
  return m;
}

SkewLinMatrix Rng::skew_linear(int n) {
  SkewLinMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set(i, j, linear_form(true));
  return m;
}

}  // namespace skewpf
