#include "skewpf/monomial.hpp"

#include <algorithm>
#include <functional>

namespace skewpf {

Monomial Monomial::var(Var v, int exp) {
  Monomial m;
  if (exp < 0) fail(Errc::BadInput, "negative exponent");
  if (exp > 0) m.f_.emplace_back(v, static_cast<std::uint16_t>(exp));
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : f_) d += e;
  return d;
}

int Monomial::exponent(Var v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

int Monomial::degree_in(Var lo, Var hi) const {
  int d = 0;
  for (const auto& [v, e] : f_)
    if (v >= lo && v < hi) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() && b != o.f_.end()) {
    if (a->first < b->first)
      r.f_.push_back(*a++);
    else if (b->first < a->first)
      r.f_.push_back(*b++);
    else {
      r.f_.emplace_back(a->first, static_cast<std::uint16_t>(a->second + b->second));
      ++a;
      ++b;
    }
  }
  r.f_.insert(r.f_.end(), a, f_.end());
  r.f_.insert(r.f_.end(), b, o.f_.end());
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [v, e] : f_)
    if (o.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end()) {
    if (b == o.f_.end() || a->first < b->first) {
      r.f_.push_back(*a++);
    } else if (a->first == b->first) {
      if (a->second < b->second) fail(Errc::BadInput, "monomial not divisible");
      if (a->second > b->second) r.f_.emplace_back(a->first, static_cast<std::uint16_t>(a->second - b->second));
      ++a;
      ++b;
    } else {
      fail(Errc::BadInput, "monomial not divisible");
    }
  }
  if (b != o.f_.end()) fail(Errc::BadInput, "monomial not divisible");
  return r;
}

// Grevlex: a > b iff deg a > deg b, or degrees tie and the highest-index
// variable with differing exponent has the *smaller* exponent in a.
int Monomial::cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  auto ia = a.f_.rbegin(), ib = b.f_.rbegin();
  while (ia != a.f_.rend() && ib != b.f_.rend()) {
    if (ia->first > ib->first) return -1;  // a has positive exponent where b has zero
    if (ib->first > ia->first) return 1;
    if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  if (ia != a.f_.rend()) return -1;
  if (ib != b.f_.rend()) return 1;
  return 0;
}

std::string Monomial::str() const {
  if (f_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : f_) {
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::vector<Monomial> monomial_basis(int d, const std::vector<Var>& vars) {
  std::vector<Monomial> out;
  std::vector<std::pair<Var, std::uint16_t>> cur;
  std::function<void(size_t, int)> rec = [&](size_t idx, int rem) {
    if (rem == 0) {
      Monomial m;
      for (const auto& f : cur) m = m * Monomial::var(f.first, f.second);
      out.push_back(m);
      return;
    }
    if (idx == vars.size()) return;
    if (idx + 1 == vars.size()) {
      cur.emplace_back(vars[idx], static_cast<std::uint16_t>(rem));
      rec(idx + 1, 0);
      cur.pop_back();
      return;
    }
    for (int e = rem; e >= 0; --e) {
      if (e > 0) cur.emplace_back(vars[idx], static_cast<std::uint16_t>(e));
      rec(idx + 1, rem - e);
      if (e > 0) cur.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return Monomial::cmp(a, b) > 0; });
  return out;
}

}  // namespace skewpf
