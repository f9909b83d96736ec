#pragma once

#include <random>

#include "skewpf/qmatrix.hpp"
#include "skewpf/skew_matrix.hpp"

namespace skewpf {

// Seeded generator for the randomized property checks. Numerators and
// denominators are kept small so exact arithmetic stays fast.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  Rational rational(long max_num = 9, long max_den = 4);
  Rational nonzero_rational(long max_num = 9, long max_den = 4);
  Polynomial linear_form(bool allow_zero = false);
  Polynomial cubic_form();
  QMatrix matrix(int rows, int cols, long max_num = 9);
  QMatrix invertible(int n);           // retries until nonsingular
  SkewLinMatrix skew_rational(int n);  // constant rational entries
  SkewLinMatrix skew_linear(int n = 6);

 private:
  std::mt19937_64 g_;
};

}  // namespace skewpf
