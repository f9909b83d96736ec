#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewpf/monomial.hpp"
#include "skewpf/rational.hpp"

namespace skewpf {

// Sparse multivariate polynomial over Q. No zero coefficients are stored.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}
  static Polynomial var(Var v, int exp = 1);
  static Polynomial term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  int degree() const;  // -1 for the zero polynomial
  // Homogeneity in total degree; optionally restricted to a variable window.
  bool is_homogeneous(int* deg = nullptr) const;
  int degree_in(Var lo, Var hi) const;

  Rational coeff(const Monomial& m) const;
  const std::map<Monomial, Rational, GrevlexLess>& terms() const { return terms_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator*(const Monomial& m) const;
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.terms_ != b.terms_; }

  // Substitute images[v] for each variable v present in images; others unchanged.
  Polynomial substituted(const std::map<Var, Polynomial>& images) const;
  Polynomial eval_var(Var v, const Rational& value) const;
  Rational eval(const std::vector<Rational>& xs) const;  // xs indexed by x0..x4; other vars must be absent

  // Coefficient of each monomial in the `outer` block, as a polynomial in the rest:
  // p = sum_m  collect(m) * m, m running over monomials in variables with pred true.
  std::map<Monomial, Polynomial, GrevlexLess> collect(const std::function<bool(Var)>& pred) const;

  std::string str() const;

 private:
  std::map<Monomial, Rational, GrevlexLess> terms_;
  void add_term(const Monomial& m, const Rational& c);
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace skewpf
