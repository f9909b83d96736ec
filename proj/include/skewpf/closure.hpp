#pragma once

#include <optional>

#include "skewpf/classify.hpp"
#include "skewpf/jets.hpp"
#include "skewpf/skew_matrix.hpp"

namespace skewpf {

// Nonzero homogeneous cubic in x0..x4.
struct CubicForm {
  Polynomial f;
  explicit CubicForm(const Polynomial& p) : f(p) {
    if (p.is_zero()) fail(Errc::ZeroCubic, "cubic form must be nonzero");
    int d = 0;
    if (!p.is_homogeneous(&d) || d != 3 || p.degree_in(kABase, kNumVars) > 0)
      fail(Errc::BadInput, "expected a homogeneous cubic in x0..x4");
  }
};

enum class ClosureBranch { PfaffianNonzero, TypeABD, TypeCE, TypeF };

std::string branch_name(ClosureBranch b);

struct ClosureVerdict {
  bool yes = false;
  ClosureBranch branch;
  // Yes-verdicts on the type-abd branch carry a 1-jet witness matrix M1 with
  // Pf(M + eps M1) = eps c F, c != 0.
  std::optional<SkewLinMatrix> witness;
  // Yes-verdicts on the other Pfaffian-zero branches carry the coordinates of
  // F in the canonical basis of the test piece.
  std::optional<QMatrix> membership_coords;
};

// Degree-3 piece of the ideal of the unique degree-2 curve attached to m:
//   (a),(b),(d): the sub-Pfaffian ideal piece;
//   (c),(e):     the same with the embedded point saturated away;
//   (f):         the cube of the reduced line, i.e. the degree-3 piece of the
//                linear ideal spanned by the entries.
DegreePiece test_piece(const SkewLinMatrix& m, int colon_cap = 10);

// Membership of ([m],[F]) in the closure of the incidence correspondence over
// the Pfaffian-zero locus. For Pf(m) != 0 the pair is in the correspondence
// itself iff Pf(m) and F are proportional.
ClosureVerdict in_closure(const SkewLinMatrix& m, const CubicForm& F, int colon_cap = 10);

// Order-1 jet [m, M1] with first_nonzero(jet_pfaffian) = (1, F), for types
// (a),(b),(d) and F in the test piece; NotInPiece otherwise.
JetMatrix witness_jet(const SkewLinMatrix& m, const CubicForm& F);

}  // namespace skewpf
