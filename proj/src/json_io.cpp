#include "skewpf/json_io.hpp"

#include <sstream>

namespace skewpf {

namespace {

Monomial x_monomial(const std::vector<int>& exps) {
  if (exps.size() != kNumX) fail(Errc::BadInput, "exponent vector must have 5 entries");
  Monomial m;
  for (int k = 0; k < kNumX; ++k) m = m * Monomial::var(x_var(k), exps[k]);
  return m;
}

std::vector<int> x_exponents(const Monomial& m) {
  std::vector<int> e(kNumX, 0);
  for (const auto& [v, exp] : m.factors()) {
    if (!is_x(v)) fail(Errc::BadInput, "polynomial has non-x variables");
    e[v] = exp;
  }
  return e;
}

std::vector<int> parse_exponent_key(const std::string& key) {
  std::vector<int> e;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) e.push_back(std::stoi(item));
  return e;
}

}  // namespace

Json skew_to_json(const SkewLinMatrix& m) {
  if (m.has_parameters()) fail(Errc::BadInput, "interchange format covers x-linear matrices only");
  Json entries = Json::array();
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) {
      Json coeffs = Json::array();
      for (int k = 0; k < kNumX; ++k)
        coeffs.push_back(m.upper(i, j).coeff(Monomial::var(x_var(k))).str());
      entries.push_back(Json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  return Json{{"entries", entries}};
}

SkewLinMatrix skew_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
    fail(Errc::BadInput, "skew matrix JSON needs an 'entries' array");
  SkewLinMatrix m(6);
  for (const auto& e : j["entries"]) {
    if (!e.contains("i") || !e.contains("j") || !e.contains("coeffs"))
      fail(Errc::BadInput, "entry needs fields i, j, coeffs");
    int i = e["i"].get<int>(), jj = e["j"].get<int>();
    if (!(0 <= i && i < jj && jj < 6)) fail(Errc::BadInput, "entry indices must satisfy 0 <= i < j < 6");
    const auto& coeffs = e["coeffs"];
    if (!coeffs.is_array() || coeffs.size() != kNumX)
      fail(Errc::BadInput, "coeffs must list 5 rationals");
    Polynomial p;
    for (int k = 0; k < kNumX; ++k)
      p += Polynomial::var(x_var(k)) * Rational::parse(coeffs[k].get<std::string>());
    m.set(i, jj, p);
  }
  return m;
}

Json cubic_to_json(const Polynomial& f) {
  Json coeffs = Json::object();
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e = x_exponents(m);
    std::string key;
    for (int k = 0; k < kNumX; ++k) key += (k ? "," : "") + std::to_string(e[k]);
    coeffs[key] = c.str();
  }
  return Json{{"coeffs", coeffs}};
}

Polynomial cubic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
    fail(Errc::BadInput, "cubic JSON needs a 'coeffs' object");
  Polynomial p;
  for (const auto& [key, val] : j["coeffs"].items()) {
    std::vector<int> e = parse_exponent_key(key);
    p += Polynomial::term(x_monomial(e), Rational::parse(val.get<std::string>()));
  }
  return p;
}

Json xpoly_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json::array({x_exponents(m), c.str()}));
  return terms;
}

Polynomial xpoly_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::BadInput, "polynomial JSON must be a term array");
  Polynomial p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) fail(Errc::BadInput, "term must be [exponents, coeff]");
    p += Polynomial::term(x_monomial(t[0].get<std::vector<int>>()),
                          Rational::parse(t[1].get<std::string>()));
  }
  return p;
}

Json jet_to_json(const JetMatrix& j) {
  Json coeffs = Json::array();
  for (int k = 0; k <= j.order(); ++k) coeffs.push_back(skew_to_json(j.coeff(k)));
  return Json{{"order", j.order()}, {"coefficients", coeffs}};
}

JetMatrix jet_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coefficients"))
    fail(Errc::BadInput, "jet JSON needs 'order' and 'coefficients'");
  int order = j["order"].get<int>();
  const auto& coeffs = j["coefficients"];
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1)
    fail(Errc::BadInput, "jet needs order + 1 coefficient matrices");
  std::vector<SkewLinMatrix> ms;
  for (const auto& c : coeffs) ms.push_back(skew_from_json(c));
  return JetMatrix(std::move(ms));
}

Json fingerprint_to_json(const Fingerprint& fp) {
  return Json{{"d1", fp.d1}, {"e2", fp.e2}, {"e3", fp.e3}, {"e4", fp.e4}, {"s", fp.s}};
}

Json verdict_to_json(const ClosureVerdict& v) {
  Json out{{"answer", v.yes ? "yes" : "no"}, {"branch", branch_name(v.branch)}};
  if (v.witness) out["witness"] = skew_to_json(*v.witness);
  if (v.membership_coords) {
    Json coords = Json::array();
    for (int c = 0; c < v.membership_coords->cols(); ++c)
      coords.push_back(v.membership_coords->at(0, c).str());
    out["membership_coords"] = coords;
  }
  return out;
}

}  // namespace skewpf
