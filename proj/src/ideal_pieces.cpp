#include "skewpf/ideal_pieces.hpp"

#include <functional>
#include <map>
#include <set>

namespace skewpf {

DegreePiece ideal_piece(const std::vector<Polynomial>& gens, int d) {
  std::vector<Polynomial> products;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int gd = 0;
    if (!g.is_homogeneous(&gd)) fail(Errc::NonHomogeneous, "ideal generator has mixed degree");
    if (gd > d) fail(Errc::BadInput, "ideal generator degree exceeds piece degree");
    for (const auto& m : monomial_basis(d - gd, x_vars())) products.push_back(g * m);
  }
  return DegreePiece::span(products, d, x_vars());
}

namespace {

// { f in R_e : l_i * f in U for all i }, U a subspace of R_{e+1}.
DegreePiece colon_step(const DegreePiece& U, const PointIdeal& p, int e) {
  std::vector<Monomial> dom = monomial_basis(e, x_vars());
  const std::vector<Monomial>& cod = U.ambient();
  std::map<Monomial, int, GrevlexLess> cod_idx;
  for (size_t i = 0; i < cod.size(); ++i) cod_idx.emplace(cod[i], static_cast<int>(i));

  // Quotient map R_{e+1} -> R_{e+1}/U in non-pivot coordinates:
  // res[c] = v[c] - sum_r basis[r][c] * v[pivot_r].
  const QMatrix& B = U.basis_matrix();
  const std::vector<int>& pivots = U.pivot_columns();
  std::vector<bool> is_pivot(cod.size(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> qcoord;  // non-pivot codomain coordinates
  for (size_t c = 0; c < cod.size(); ++c)
    if (!is_pivot[c]) qcoord.push_back(static_cast<int>(c));

  QMatrix sys(static_cast<int>(qcoord.size()) * 4, static_cast<int>(dom.size()));
  for (int i = 0; i < 4; ++i) {
    const Polynomial& l = p.forms[i];
    for (size_t m = 0; m < dom.size(); ++m) {
      Polynomial prod = l * dom[m];
      // image coordinates of l * mu_m, then the quotient functionals
      std::vector<Rational> v(cod.size());
      for (const auto& [mon, c] : prod.terms()) v[cod_idx.at(mon)] = c;
      for (size_t q = 0; q < qcoord.size(); ++q) {
        Rational val = v[qcoord[q]];
        for (int r = 0; r < B.rows(); ++r) {
          const Rational& piv_val = v[pivots[r]];
          if (!piv_val.is_zero()) val -= B.at(r, qcoord[q]) * piv_val;
        }
        sys.at(i * static_cast<int>(qcoord.size()) + static_cast<int>(q), static_cast<int>(m)) = val;
      }
    }
  }
  QMatrix kernel = sys.kernel_basis();
  std::vector<Polynomial> basis;
  for (int r = 0; r < kernel.rows(); ++r) {
    Polynomial f;
    for (size_t m = 0; m < dom.size(); ++m) f += Polynomial::term(dom[m], kernel.at(r, static_cast<int>(m)));
    basis.push_back(f);
  }
  return DegreePiece::span(basis, e, x_vars());
}

}  // namespace

DegreePiece saturate_piece(const std::vector<Polynomial>& gens, const PointIdeal& p, int d, int cap) {
  if (d < 2) fail(Errc::BadInput, "saturate_piece needs degree >= 2");
  if (cap < 2) fail(Errc::BadInput, "iteration cap too small");
  // T(k, e) = (I : m_p^k)_e; T(k, e) = colon(T(k-1, e+1)), T(0, e) = I_e.
  std::map<std::pair<int, int>, DegreePiece> memo;
  std::function<const DegreePiece&(int, int)> piece = [&](int k, int e) -> const DegreePiece& {
    auto key = std::make_pair(k, e);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    DegreePiece result = k == 0 ? ideal_piece(gens, e) : colon_step(piece(k - 1, e + 1), p, e);
    return memo.emplace(key, std::move(result)).first->second;
  };

  int stable = 0;
  int prev_dim = piece(0, d).dim();
  for (int k = 1; k <= cap; ++k) {
    int dim = piece(k, d).dim();
    stable = dim == prev_dim ? stable + 1 : 0;
    prev_dim = dim;
    if (stable >= 2) return piece(k, d);
  }
  fail(Errc::NonStabilizing, "colon iteration still growing at cap " + std::to_string(cap));
}

bool span_contains(const std::vector<Polynomial>& spanning, const Polynomial& target) {
  std::set<Monomial, GrevlexLess> mons;
  for (const auto& p : spanning)
    for (const auto& [m, c] : p.terms()) mons.insert(m);
  for (const auto& [m, c] : target.terms()) mons.insert(m);
  std::vector<Monomial> ambient(mons.rbegin(), mons.rend());  // grevlex descending
  DegreePiece piece = DegreePiece::span_on(ambient, spanning);
  return piece.contains(target);
}

bool parametric_quadric_membership(const std::vector<Polynomial>& gens, const Polynomial& target,
                                   int tcap) {
  if (target.degree_in(0, kABase) != 2 && !target.is_zero())
    fail(Errc::BadInput, "target must have x-degree 2");
  std::vector<Polynomial> spanning;
  Polynomial t = Polynomial::var(kTVar);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int xd = g.degree_in(0, kABase);
    if (xd > 2) fail(Errc::BadInput, "generator x-degree exceeds 2");
    std::vector<Monomial> mults = monomial_basis(2 - xd, x_vars());
    Polynomial tp(Rational(1));
    for (int k = 0; k <= tcap; ++k) {
      for (const auto& m : mults) spanning.push_back(g * m * tp);
      tp = tp * t;
    }
  }
  return span_contains(spanning, target);
}

}  // namespace skewpf
