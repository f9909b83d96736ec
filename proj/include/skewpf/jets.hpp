#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewpf/skew_matrix.hpp"

namespace skewpf {

// Polynomial with coefficients in the truncated ring Q[eps]/(eps^{n+1}):
// f = f_0 + f_1 eps + ... + f_n eps^n. Multiplication drops terms above
// order n; mixed-order operands truncate to the smaller order.
class JetPolynomial {
 public:
  explicit JetPolynomial(int order) : c_(order + 1) {
    if (order < 0) fail(Errc::BadInput, "jet order must be >= 0");
  }
  explicit JetPolynomial(std::vector<Polynomial> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) fail(Errc::BadInput, "jet needs at least the constant coefficient");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Polynomial& coeff(int k) const { return c_[k]; }
  void set_coeff(int k, const Polynomial& p) { c_[k] = p; }
  bool is_zero() const;

  JetPolynomial operator+(const JetPolynomial& o) const;
  JetPolynomial operator-(const JetPolynomial& o) const;
  JetPolynomial operator-() const;
  JetPolynomial operator*(const JetPolynomial& o) const;
  JetPolynomial operator*(const Rational& c) const;
  friend bool operator==(const JetPolynomial& a, const JetPolynomial& b) { return a.c_ == b.c_; }

  // Coefficients above m dropped; m must not exceed the order.
  JetPolynomial truncate(int m) const;
  // r-fold covering (substitution eps -> s^r): order becomes r*order, the
  // coefficient of s^k is f_{k/r} when r divides k and zero otherwise.
  JetPolynomial cover(int r) const;

  // Smallest index with nonzero coefficient and that coefficient;
  // nullopt for the zero jet.
  std::optional<std::pair<int, Polynomial>> first_nonzero() const;

 private:
  std::vector<Polynomial> c_;
};

// True iff jP = u * jF for some unit u = u_0 + u_1 eps + ... with rational
// coefficients and u_0 != 0, solved coefficient by coefficient. If found,
// *unit receives the coefficients of u (values beyond the constrained range
// are set to zero).
bool proportionality_check(const JetPolynomial& jP, const JetPolynomial& jF,
                           std::vector<Rational>* unit = nullptr);

// If p == c * q for a scalar c, returns c; nullopt otherwise. q must be nonzero.
std::optional<Rational> poly_proportional(const Polynomial& p, const Polynomial& q);

// n-jet of skew matrices: M_0 + eps M_1 + ... + eps^n M_n.
class JetMatrix {
 public:
  explicit JetMatrix(std::vector<SkewLinMatrix> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) fail(Errc::BadInput, "jet needs at least the constant coefficient");
    for (const auto& m : c_)
      if (m.size() != c_.front().size()) fail(Errc::BadInput, "jet coefficients of mixed size");
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  int size() const { return c_.front().size(); }
  const SkewLinMatrix& coeff(int k) const { return c_[k]; }

  JetMatrix truncate(int m) const;
  JetMatrix cover(int r) const;
  JetPolynomial entry_jet(int i, int j) const;

  friend bool operator==(const JetMatrix& a, const JetMatrix& b) { return a.c_ == b.c_; }

 private:
  std::vector<SkewLinMatrix> c_;
};

// Pfaffian computed in the truncated coefficient ring.
JetPolynomial jet_pfaffian(const JetMatrix& j);

// The 15 sub-Pfaffians of a 6x6 jet matrix, pairs (a,b) lexicographic.
std::vector<JetPolynomial> jet_sub_pfaffians(const JetMatrix& j);

}  // namespace skewpf
