#pragma once

#include <string>

#include "skewpf/skew_matrix.hpp"

namespace skewpf {

// The six normal-form types of semistable 6x6 skew matrices of linear forms
// with vanishing Pfaffian, with their stability behaviour.
enum class TypeLabel { a, b, c, d, e, f };

enum class Stability { Stable, StrictlySemistableNotPolystable, Polystable };

struct MatrixType {
  TypeLabel label;
  Stability stability;
};

char label_char(TypeLabel t);
TypeLabel parse_label(const std::string& s);  // UnknownLabel
std::string stability_name(Stability s);

struct NormalForm {
  TypeLabel type;
  SkewLinMatrix M;        // normal form with l_i = x_i
  SyzygyMatrix S;         // reference kernel matrix, two columns
  std::string geometry;   // description of the rank <= 2 locus
  Stability stability;
};

const NormalForm& catalog(TypeLabel t);
const std::vector<TypeLabel>& all_types();

// Conjugation/coordinate-change invariants that separate the six types:
//   d1       dim of the entry span,
//   e2,e3,e4 dims of the degree-d pieces of the sub-Pfaffian ideal,
//   s        number of linear syzygies.
struct Fingerprint {
  int d1, e2, e3, e4, s;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string str() const;
};

Fingerprint fingerprint(const SkewLinMatrix& m);  // PfaffianNonZero

// The frozen fingerprint of each catalog type (regression fixtures). Types
// (b),(d) share a fingerprint and so do (c),(e): their sub-Pfaffian schemes
// are flat limits of one another, so the tie-break chain decides.
Fingerprint catalog_fingerprint(TypeLabel t);

// First tie-breaker: dim of the degree-2 span of the 2x2 minors of the
// syzygy matrix. On the catalog types this coincides with e2 (the minors
// generate the same ideal as the sub-Pfaffians), so a second tie-breaker,
// the orbit codimension, resolves the surviving collisions.
int tiebreak_invariant(const SkewLinMatrix& m);

// Unique catalog type whose fingerprint (plus tie-break chain) matches;
// Unclassified when none does (the input is not semistable, or lies outside
// the classification's scope).
MatrixType classify(const SkewLinMatrix& m);

struct Table1Report {
  TypeLabel type;
  bool ms_zero;            // M . S = 0 as a polynomial identity
  bool syzygy_span;        // computed linear syzygies span = catalog S span
  bool minors_vs_subpf;    // degree-2 span of minors_2(S) = span of sub-Pfaffians
  bool rank0_tag;          // rank-0 locus dimension matches the geometric tag
  bool all() const { return ms_zero && syzygy_span && minors_vs_subpf && rank0_tag; }
};

Table1Report verify_table1(TypeLabel t);

}  // namespace skewpf
