#pragma once

#include <optional>

#include "skewpf/classify.hpp"
#include "skewpf/skew_matrix.hpp"

namespace skewpf {

// The explicit one-parameter degenerations between catalog strata, plus the
// block-conjugation family used for the type-(e) closure witnesses.
enum class Arrow { b_to_c, d_to_e, e_to_f, a_to_c, b_to_d, c_to_e, case3 };

std::string arrow_name(Arrow a);
Arrow parse_arrow(const std::string& s);  // UnknownArrow
const std::vector<Arrow>& all_arrows();

struct DeformationFamily {
  Arrow arrow;
  SkewLinMatrix Mt;             // entries linear in x, polynomial in t
  TypeLabel generic_type;       // classification at t != 0
  TypeLabel special_type;       // classification at t = 0
  // Reference generators of the reduced rank-2 locus, one generator list per
  // irreducible branch; empty when the family has no reference generators.
  std::vector<std::vector<Polynomial>> reference_ideals;
};

DeformationFamily family(Arrow a);

// Case-3 block family: A_t = A + tB, M_t = [[-t^2 B, A + A_t],[A + A_t, -B]].
// Construction verifies the conjugation identities
//   C1^T diag(A, -A_t) C1 = [[A - A_t, A + A_t],[A + A_t, A - A_t]],
//   C2^T (that) C2 = t * M_t  with C2 = diag(t,t,t,1,1,1),
// as exact polynomial identities, and that M_0 = [[0, 2A],[2A, -B]].
// NotSkew if A or B is not a skew 3x3 matrix of linear forms.
DeformationFamily case3_family(const SkewLinMatrix& A, const SkewLinMatrix& B, int order = 1);

struct FamilyReport {
  Arrow arrow;
  bool pf_zero;                         // Pf(M_t) == 0 in Q[x, t]
  std::optional<bool> subpf_in_ideals;  // parametric containment, when reference
  bool endpoints;                       // classify(M_0), classify(M_{t0}) as claimed
  bool rank2_jet;                       // case3 only: [[0,-2eB],[-2eB,-B]] has rank 2 mod eps^2
  bool all() const {
    return pf_zero && endpoints && (!subpf_in_ideals || *subpf_in_ideals) && rank2_jet;
  }
};

// Runs the reference checks for one arrow; t0 for the generic-fibre
// classification is drawn from the seed and never zero.
FamilyReport verify_family(Arrow a, std::uint64_t seed = 0);

}  // namespace skewpf
