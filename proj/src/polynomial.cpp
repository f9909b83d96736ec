#include "skewpf/polynomial.hpp"

namespace skewpf {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial::one(), c);
}

Polynomial Polynomial::var(Var v, int exp) { return term(Monomial::var(v, exp), Rational(1)); }

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous(int* deg) const {
  if (terms_.empty()) {
    if (deg) *deg = 0;
    return true;  // zero is homogeneous of every degree
  }
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  if (deg) *deg = d;
  return true;
}

int Polynomial::degree_in(Var lo, Var hi) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(lo, hi));
  return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
  Polynomial r;
  for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) fail(Errc::BadInput, "negative power");
  Polynomial r(Rational(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::substituted(const std::map<Var, Polynomial>& images) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial t(c);
    Monomial untouched;
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end())
        untouched = untouched * Monomial::var(v, e);
      else
        t = t * it->second.pow(e);
    }
    out += t * untouched;
  }
  return out;
}

Polynomial Polynomial::eval_var(Var v, const Rational& value) const {
  std::map<Var, Polynomial> images;
  images.emplace(v, Polynomial(value));
  return substituted(images);
}

Rational Polynomial::eval(const std::vector<Rational>& xs) const {
  Rational out(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      if (v >= xs.size()) fail(Errc::BadInput, "eval: variable outside point");
      for (int i = 0; i < e; ++i) t *= xs[v];
    }
    out += t;
  }
  return out;
}

std::map<Monomial, Polynomial, GrevlexLess> Polynomial::collect(
    const std::function<bool(Var)>& pred) const {
  std::map<Monomial, Polynomial, GrevlexLess> groups;
  for (const auto& [m, c] : terms_) {
    auto [outer, inner] = m.split(pred);
    groups[outer] += Polynomial::term(inner, c);
  }
  return groups;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  // print leading (grevlex-largest) terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    std::string cs = abs(c).str_pretty();
    if (s.empty())
      s += c.sign() < 0 ? "-" : "";
    else
      s += c.sign() < 0 ? " - " : " + ";
    if (it->first.is_one())
      s += cs;
    else if (cs == "1")
      s += it->first.str();
    else
      s += cs + "*" + it->first.str();
  }
  return s;
}

}  // namespace skewpf
