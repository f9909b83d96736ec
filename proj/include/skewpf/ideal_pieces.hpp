#pragma once

#include <vector>

#include "skewpf/degree_piece.hpp"
#include "skewpf/skew_matrix.hpp"

namespace skewpf {

// Degree-d piece of the ideal generated by homogeneous gens in x0..x4:
// span of (monomial of degree d - deg g) * g over all generators g.
DegreePiece ideal_piece(const std::vector<Polynomial>& gens, int d);

// Degree-d piece of the saturation (I : m_p^infinity) for I generated by
// gens, computed as an iterated colon:
//   V_0 = ideal_piece(gens, d),
//   V_{k+1} = { f in R_d : l * f in (degree d+1 piece at colon depth k)
//               for all four generators l of p },
// iterating until the dimension is unchanged for two consecutive steps.
// NonStabilizing if the dimension still grows at the iteration cap.
DegreePiece saturate_piece(const std::vector<Polynomial>& gens, const PointIdeal& p, int d,
                           int cap = 10);

// Exact membership of target in the Q-span of the given polynomials (ambient
// = all monomials that occur). Used for parametric ideal containments where
// coefficients live in Q[t].
bool span_contains(const std::vector<Polynomial>& spanning, const Polynomial& target);

// Membership of a degree-2-in-x polynomial in the degree-2 piece of the ideal
// generated by gens over the parameter ring Q[t], with multiplier t-degree
// bounded by tcap: target in span{ g * (x-monomial of degree 2 - xdeg g) * t^k }.
bool parametric_quadric_membership(const std::vector<Polynomial>& gens, const Polynomial& target,
                                   int tcap = 8);

}  // namespace skewpf
