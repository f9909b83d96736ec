#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skewpf/vars.hpp"

namespace skewpf {

// Sparse monomial: sorted (variable, exponent) pairs, exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(Var v, int exp = 1);

  bool is_one() const { return f_.empty(); }
  int degree() const;
  int exponent(Var v) const;
  // Total degree contributed by variables in [lo, hi).
  int degree_in(Var lo, Var hi) const;

  Monomial operator*(const Monomial& o) const;
  // Exact division; fails if not divisible.
  Monomial divided_by(const Monomial& o) const;
  bool divides(const Monomial& o) const;

  // Split into (part with vars satisfying pred, rest).
  template <class Pred>
  std::pair<Monomial, Monomial> split(Pred pred) const {
    Monomial in, out;
    for (const auto& [v, e] : f_) (pred(v) ? in : out).f_.emplace_back(v, e);
    return {in, out};
  }

  const std::vector<std::pair<Var, std::uint16_t>>& factors() const { return f_; }

  // Graded reverse lexicographic comparison: returns <0, 0, >0 as a < b, a == b, a > b.
  static int cmp(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.f_ != b.f_; }

  std::string str() const;  // e.g. "x0^2*x3", "1" for the unit

 private:
  std::vector<std::pair<Var, std::uint16_t>> f_;
};

// Comparator for std::map keys: strict "less" in grevlex.
struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) < 0; }
};

// All monomials of total degree d in the given variables, grevlex descending.
std::vector<Monomial> monomial_basis(int d, const std::vector<Var>& vars);

}  // namespace skewpf
