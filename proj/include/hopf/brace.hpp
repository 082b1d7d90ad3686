#pragma once

#include "hopf/hopf_algebra.hpp"

namespace hopf {

struct LinearAction;

/* Hopf brace: two Hopf algebra structures on one coalgebra.  The first
 * multiplication is written as juxtaposition, the second as the circle
 * product; a verified brace satisfies x o (yz) = (x1 o y) S(x2) (x3 o z)
 * and shares its unit (1 = 1o). */
struct HopfBraceData {
  CoalgebraData co;
  SparseMatrix mult, unit, antipode;                 // (m, 1, S)
  SparseMatrix mult_circ, unit_circ, antipode_circ;  // (o, 1o, T)
  std::vector<std::string> basis;

  std::size_t dim() const { return co.dim; }
  const Field& field() const { return co.field(); }
  HopfAlgebraData dot_structure() const;
  HopfAlgebraData circ_structure() const;
  void check_shapes() const;
};

Step step_mult_circ(const HopfBraceData& b, std::size_t pos);

// Both Hopf structures, unit coincidence, and the compatibility law in its
// composition form applied to every basis triple.
AxiomReport verify_hopf_brace(const HopfBraceData& b);

bool is_cocommutative(const HopfBraceData& b);

// x o y = xy; T = S.
HopfBraceData make_trivial_brace(const HopfAlgebraData& h);

// x o y = yx; refused unless S^2 = id (witnessed).
HopfBraceData make_opposite_brace(const HopfAlgebraData& h);

/* Braid operator of a cocommutative brace on H (x) H:
 * c(x,y) = S(x1)(x2 o y1)  (x)  T(S(x3)(x4 o y2)) o x5 o y3.
 * Assembled column by column; non-cocommutative input is refused. */
struct BraidOperator {
  std::size_t dim = 0;       // dim of H; matrix is dim^2 x dim^2
  SparseMatrix matrix;
};

BraidOperator braid_operator(const HopfBraceData& b);

/* Closed-form solutions printed for the specialized families, built
 * directly from the displayed formulas (never via braid_operator).
 * ids: "ex1.1-1" (trivial brace), "ex1.1-2" (opposite brace) over one
 * cocommutative Hopf algebra; "gen-1"/"gen-2"/"gen-3" over (A, H, action)
 * with the action playing the role the family's brace construction uses. */
SparseMatrix specialized_braid(const std::string& id, const HopfAlgebraData& h);
SparseMatrix specialized_braid(const std::string& id, const HopfAlgebraData& a,
                               const HopfAlgebraData& h,
                               const LinearAction& act);

// Applies both sides of the braid equation (c1)(1c)(c1) = (1c)(c1)(1c)
// to every basis vector of the d^3 cube.
AxiomReport check_braid(const SparseMatrix& c);

// R12 R13 R23 = R23 R13 R12 on the same cube.
AxiomReport check_qybe(const SparseMatrix& r);

// c solves the braid equation iff c o tau solves QYBE; both directions
// are this same composition with the flip.
SparseMatrix compose_flip(const SparseMatrix& c);

}  // namespace hopf
