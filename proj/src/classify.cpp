#include "skewpf/classify.hpp"

#include <array>
#include <map>

#include "skewpf/ideal_pieces.hpp"
#include "skewpf/tangent.hpp"

namespace skewpf {

char label_char(TypeLabel t) { return static_cast<char>('a' + static_cast<int>(t)); }

TypeLabel parse_label(const std::string& s) {
  if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'f') return static_cast<TypeLabel>(s[0] - 'a');
  fail(Errc::UnknownLabel, "unknown type label '" + s + "'");
}

std::string stability_name(Stability s) {
  switch (s) {
    case Stability::Stable:
      return "stable";
    case Stability::StrictlySemistableNotPolystable:
      return "strictly semistable, not polystable";
    case Stability::Polystable:
      return "polystable";
  }
  return "?";
}

namespace {

Polynomial X(int k) { return Polynomial::var(x_var(k)); }

SyzygyMatrix make_s(const std::array<std::array<Polynomial, 6>, 2>& cols) {
  SyzygyMatrix s;
  s.cols.assign(cols.begin(), cols.end());
  return s;
}

std::map<TypeLabel, NormalForm> build_catalog() {
  std::map<TypeLabel, NormalForm> cat;
  Polynomial z;
  SkewLinMatrix A = SkewLinMatrix::skew3(X(0), X(1), X(2));
  PolyGrid Agrid = A.grid();
  SkewLinMatrix zero3(3);

  {  // (a): [[x3 E, A],[A, x4 E]] with E the elementary skew block
    SkewLinMatrix m(6);
    m.set(0, 1, X(3));
    m.set(0, 4, X(0));
    m.set(0, 5, X(1));
    m.set(1, 3, -X(0));
    m.set(1, 5, X(2));
    m.set(2, 3, -X(1));
    m.set(2, 4, -X(2));
    m.set(3, 4, X(4));
    NormalForm nf{TypeLabel::a, m,
                  make_s({{{X(2), -X(1), X(0), z, z, X(3)}, {z, z, X(4), X(2), -X(1), X(0)}}}),
                  "a smooth conic", Stability::Stable};
    cat.emplace(TypeLabel::a, nf);
  }
  {  // (b): diag(skew3(x0,x1,x2), skew3(x2,x3,x4))
    SkewLinMatrix m = SkewLinMatrix::from_blocks(A, PolyGrid(3, std::vector<Polynomial>(3)),
                                                 SkewLinMatrix::skew3(X(2), X(3), X(4)));
    NormalForm nf{TypeLabel::b, m,
                  make_s({{{X(2), -X(1), X(0), z, z, z}, {z, z, z, X(4), -X(3), X(2)}}}),
                  "two skew lines", Stability::Stable};
    cat.emplace(TypeLabel::b, nf);
  }
  {  // (c): diag(skew3(x0,x1,x2), skew3(x1,x2,x3))
    SkewLinMatrix m = SkewLinMatrix::from_blocks(A, PolyGrid(3, std::vector<Polynomial>(3)),
                                                 SkewLinMatrix::skew3(X(1), X(2), X(3)));
    NormalForm nf{TypeLabel::c, m,
                  make_s({{{X(2), -X(1), X(0), z, z, z}, {z, z, z, X(3), -X(2), X(1)}}}),
                  "two distinct intersecting lines with an embedded point at the intersection, "
                  "spanning the ambient P4",
                  Stability::Stable};
    cat.emplace(TypeLabel::c, nf);
  }
  {  // (d): [[0, A],[A, skew3(x3,x4,0)]]
    SkewLinMatrix m = SkewLinMatrix::from_blocks(zero3, Agrid, SkewLinMatrix::skew3(X(3), X(4), z));
    NormalForm nf{TypeLabel::d, m,
                  make_s({{{X(2), -X(1), X(0), z, z, z}, {z, -X(4), X(3), X(2), -X(1), X(0)}}}),
                  "a double line lying on a smooth quadric surface",
                  Stability::StrictlySemistableNotPolystable};
    cat.emplace(TypeLabel::d, nf);
  }
  {  // (e): [[0, A],[A, skew3(x3,0,0)]]
    SkewLinMatrix m = SkewLinMatrix::from_blocks(zero3, Agrid, SkewLinMatrix::skew3(X(3), z, z));
    NormalForm nf{TypeLabel::e, m,
                  make_s({{{X(2), -X(1), X(0), z, z, z}, {z, z, X(3), X(2), -X(1), X(0)}}}),
                  "a plane double line with an embedded point, spanning the ambient P4",
                  Stability::StrictlySemistableNotPolystable};
    cat.emplace(TypeLabel::e, nf);
  }
  {  // (f): [[0, A],[A, 0]]
    SkewLinMatrix m = SkewLinMatrix::from_blocks(zero3, Agrid, zero3);
    NormalForm nf{TypeLabel::f, m,
                  make_s({{{X(2), -X(1), X(0), z, z, z}, {z, z, z, X(2), -X(1), X(0)}}}),
                  "a line together with its full first order infinitesimal neighbourhood",
                  Stability::Polystable};
    cat.emplace(TypeLabel::f, nf);
  }
  return cat;
}

const std::map<TypeLabel, NormalForm>& catalog_map() {
  static const std::map<TypeLabel, NormalForm> cat = build_catalog();
  return cat;
}

// Frozen fingerprint fixtures, computed once from the catalog normal forms by
// independent span enumeration and kept as regression data. The pairs (b,d)
// and (c,e) genuinely collide: the sub-Pfaffian schemes are flat limits of
// one another and share their Hilbert function, so no dimension of an ideal
// piece separates them. The tie-break chain below (minors of the syzygy
// matrix, then the orbit codimension) resolves both collisions.
const std::map<TypeLabel, Fingerprint>& fingerprint_table() {
  static const std::map<TypeLabel, Fingerprint> table = [] {
    std::map<TypeLabel, Fingerprint> t;
    t.emplace(TypeLabel::a, Fingerprint{5, 10, 28, 61, 2});
    t.emplace(TypeLabel::b, Fingerprint{5, 9, 27, 60, 2});
    t.emplace(TypeLabel::c, Fingerprint{4, 8, 26, 59, 2});
    t.emplace(TypeLabel::d, Fingerprint{5, 9, 27, 60, 2});
    t.emplace(TypeLabel::e, Fingerprint{4, 8, 26, 59, 2});
    t.emplace(TypeLabel::f, Fingerprint{3, 6, 22, 53, 2});
    return t;
  }();
  return table;
}

// Frozen tie-break fixtures: (minors2 span dim, orbit codimension). The first
// equals e2 on every catalog type (the minors of S generate the same ideal as
// the sub-Pfaffians); the orbit codimension is what actually separates (b)
// from (d) and (c) from (e).
const std::map<TypeLabel, std::pair<int, int>>& tiebreak_table() {
  static const std::map<TypeLabel, std::pair<int, int>> table = [] {
    std::map<TypeLabel, std::pair<int, int>> t;
    t.emplace(TypeLabel::a, std::make_pair(10, 28));
    t.emplace(TypeLabel::b, std::make_pair(9, 27));
    t.emplace(TypeLabel::c, std::make_pair(8, 29));
    t.emplace(TypeLabel::d, std::make_pair(9, 28));
    t.emplace(TypeLabel::e, std::make_pair(8, 30));
    t.emplace(TypeLabel::f, std::make_pair(6, 34));
    // The classifier is only sound if fingerprint + tie-break data are
    // pairwise distinct; abort loudly otherwise.
    const auto& fp = fingerprint_table();
    for (auto i = t.begin(); i != t.end(); ++i)
      for (auto j = std::next(i); j != t.end(); ++j)
        if (fp.at(i->first) == fp.at(j->first) && i->second == j->second)
          fail(Errc::Unclassified, std::string("classification fixtures collide for types ") +
                                       label_char(i->first) + " and " + label_char(j->first));
    return t;
  }();
  return table;
}

}  // namespace

const NormalForm& catalog(TypeLabel t) { return catalog_map().at(t); }

const std::vector<TypeLabel>& all_types() {
  static const std::vector<TypeLabel> types{TypeLabel::a, TypeLabel::b, TypeLabel::c,
                                            TypeLabel::d, TypeLabel::e, TypeLabel::f};
  return types;
}

std::string Fingerprint::str() const {
  return "(d1=" + std::to_string(d1) + ", e2=" + std::to_string(e2) + ", e3=" + std::to_string(e3) +
         ", e4=" + std::to_string(e4) + ", s=" + std::to_string(s) + ")";
}

Fingerprint fingerprint(const SkewLinMatrix& m) {
  if (!pfaffian(m).is_zero()) fail(Errc::PfaffianNonZero, "fingerprint needs vanishing Pfaffian");
  std::vector<Polynomial> q = sub_pfaffians(m);
  Fingerprint fp;
  fp.d1 = entry_span(m).dim();
  fp.e2 = ideal_piece(q, 2).dim();
  fp.e3 = ideal_piece(q, 3).dim();
  fp.e4 = ideal_piece(q, 4).dim();
  fp.s = linear_syzygies(m).col_count();
  return fp;
}

Fingerprint catalog_fingerprint(TypeLabel t) { return fingerprint_table().at(t); }

int tiebreak_invariant(const SkewLinMatrix& m) { return minors2_span(linear_syzygies(m)).dim(); }

MatrixType classify(const SkewLinMatrix& m) {
  Fingerprint fp = fingerprint(m);
  std::vector<TypeLabel> hits;
  for (TypeLabel t : all_types())
    if (fingerprint_table().at(t) == fp) hits.push_back(t);
  if (hits.size() > 1) {
    int tb = tiebreak_invariant(m);
    std::vector<TypeLabel> refined;
    for (TypeLabel t : hits)
      if (tiebreak_table().at(t).first == tb) refined.push_back(t);
    hits = std::move(refined);
  }
  if (hits.size() > 1) {
    int oc = orbit_codim(m);
    std::vector<TypeLabel> refined;
    for (TypeLabel t : hits)
      if (tiebreak_table().at(t).second == oc) refined.push_back(t);
    hits = std::move(refined);
  }
  if (hits.size() != 1)
    fail(Errc::Unclassified,
         "no catalog type matches fingerprint " + fp.str() +
             "; the matrix is not semistable or lies outside the classified cases");
  return MatrixType{hits[0], catalog(hits[0]).stability};
}

Table1Report verify_table1(TypeLabel t) {
  const NormalForm& nf = catalog(t);
  Table1Report rep{};
  rep.type = t;

  rep.ms_zero = true;
  for (const auto& col : nf.S.cols)
    for (const auto& p : mat_vec(nf.M, col))
      if (!p.is_zero()) rep.ms_zero = false;

  SyzygyMatrix computed = linear_syzygies(nf.M);
  rep.syzygy_span =
      computed.col_count() == nf.S.col_count() && computed.coefficient_span() == nf.S.coefficient_span();

  DegreePiece minors = minors2_span(nf.S);
  DegreePiece subpf = DegreePiece::span(sub_pfaffians(nf.M), 2, x_vars());
  rep.minors_vs_subpf = minors == subpf;

  int d1 = entry_span(nf.M).dim();
  int expected;  // 5: empty rank-0 locus, 4: point, 3: line
  switch (t) {
    case TypeLabel::a:
    case TypeLabel::b:
    case TypeLabel::d:
      expected = 5;
      break;
    case TypeLabel::c:
    case TypeLabel::e:
      expected = 4;
      break;
    default:
      expected = 3;
      break;
  }
  rep.rank0_tag = d1 == expected;
  return rep;
}

}  // namespace skewpf
