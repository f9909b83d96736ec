#pragma once

#include "skewpf/classify.hpp"
#include "skewpf/degree_piece.hpp"
#include "skewpf/jets.hpp"
#include "skewpf/skew_matrix.hpp"

namespace skewpf {

// Linearisation of the Pfaffian at a point M with Pf(M) = 0: the coefficient
// matrix of M' |-> F' where Pf(M + eps M') = eps F'. Rows are the 35 cubic
// monomials (grevlex descending), columns the 75 coordinates a_{ijk}.
struct TangentSystem {
  SkewLinMatrix base;
  QMatrix coeff;              // 35 x 75
  int codim = 0;              // rank of coeff
  QMatrix kernel;             // RREF basis of the tangent space, (75 - codim) x 75
  std::vector<int> free_cols; // pivot columns of the kernel = free a-coordinates

  // Substitution realising "restricted to the tangent space": every a_{ijk}
  // is replaced by its expression in the free coordinates.
  std::map<Var, Polynomial> restriction() const;
  // Skew matrix of linear forms whose a-coefficients run over the tangent
  // space (the kernel parametrisation with free a-variables as parameters).
  SkewLinMatrix symbolic_tangent_vector() const;
};

TangentSystem tangent_system(const SkewLinMatrix& m);  // PfaffianNonZero

// Codimension of the tangent space of the Pfaffian-zero locus at [m] inside
// the 74-dimensional ambient projective space of skew matrices.
int tangent_codim(const SkewLinMatrix& m);

// Canonical span of the degree-2 part of the tangent-cone approximation,
// as quadrics in the 75 a-variables (supported on the free coordinates).
struct ConeQuadrics {
  DegreePiece piece;
};

ConeQuadrics cone_deg2(const SkewLinMatrix& m);  // PfaffianNonZero

// Span of the given quadrics in the a-variables after restriction to the
// tangent space of m (for comparisons against reference generators).
DegreePiece restricted_quadric_span(const TangentSystem& sys, const std::vector<Polynomial>& quadrics);

// For a matrix of type (c) or (e): writes Pf(M + eps M1 + eps^2 M2) = eps^2 G
// with M1 the symbolic tangent parametrisation and M2 fully symbolic, and
// checks that the residue of G's cubic coefficient vector modulo
// saturate_piece(sub_pfaffians(M), rank0_point(M), 3) vanishes identically in
// all parameters. WrongType on other inputs.
bool parametric_2jet_check(const SkewLinMatrix& m);

// Infinitesimal action gl6 + gl5 -> S at m: columns are the 36 conjugation
// directions E_rs^T m + m E_rs followed by the 25 coordinate-change
// directions (75 x 61).
QMatrix orbit_action_matrix(const SkewLinMatrix& m);

// Codimension of the projective orbit of [m] under simultaneous conjugation
// and coordinate changes. The affine image of the action map contains m
// itself (take g = id), so the projective orbit has dimension rank - 1 and
// the codimension in P(S) = P^74 is 74 - (rank - 1) = 75 - rank.
int orbit_codim(const SkewLinMatrix& m);

// Coordinate action of conjugation by B on the 75-dimensional space of skew
// matrices of linear forms: row r |-> coords(B^T unflatten(e_r) B).
QMatrix conjugation_coordinate_map(const QMatrix& B);

}  // namespace skewpf
