#pragma once

#include <optional>

#include "hopf/action.hpp"
#include "hopf/brace.hpp"

namespace hopf {

/* Bicrossed product A |><| H on the tensor coalgebra:
 *   (a (x) x)(b (x) y) = a (x1 |> b1) (x) (x2 <| b2) y
 * with unit 1 (x) 1 and antipode
 *   S(a (x) x) = S_H(x2) |> S_A(a2) (x) S_H(x1) <| S_A(a1).
 * Refused (report embedded) unless the matched pair verifies. */
HopfAlgebraData bicrossed_product(const MatchedPair& mp);

/* Smash product A # H: the bicrossed product along the trivial right
 * action.  Needs a left module-bialgebra action whose actor legs commute
 * through the action (cond-smash1); multiplication collapses to
 *   (a # x)(b # y) = a (x1 |> b) # x2 y. */
HopfAlgebraData smash_product(const LinearAction& left);

/* Antipode of the bialgebra (co, mult, unit), solved columnwise from
 * mult (S (x) I) delta = unit . counit and validated against both
 * antipode laws; nullopt when none exists. */
std::optional<SparseMatrix> solve_antipode(const CoalgebraData& co,
                                           const SparseMatrix& mult,
                                           const SparseMatrix& unit);

/* Ingredients for one brace construction on A (x) H.  Slots per id:
 *   main0      A_brace, H_hopf, black_left, black_right
 *   cor-11.00  A_brace, H_hopf, black_left
 *   cor-22.00  A_brace, H_hopf, black_right
 *   main       A_hopf, H_brace, tri_left, tri_right, black_left
 *   cor-11.11  A_hopf, H_hopf, tri_left, tri_right
 *   cor-22.22  A_hopf, H_hopf, tri_left, black_left
 *   cor-33.33  A_hopf, H_hopf, black_left, tri_right
 *   gen-1      A_hopf, H_hopf, tri_left
 *   gen-2      A_hopf, H_hopf, black_left
 *   gen-3      A_hopf, H_hopf, tri_right
 * Action slots contribute side + tensor; their actor/target must carry
 * the same coalgebras as the A/H slots and are rebound to whichever of
 * the two multiplications each hypothesis quantifies over. */
struct BraceRecipe {
  std::string id;
  std::optional<HopfBraceData> A_brace, H_brace;
  std::optional<HopfAlgebraData> A_hopf, H_hopf;
  std::optional<LinearAction> tri_left, tri_right;
  std::optional<LinearAction> black_left, black_right;
};

const std::vector<std::string>& brace_recipe_ids();

/* Verifies every hypothesis of the recipe's theorem, refusing with the
 * violated hypothesis by name, then assembles the brace.  Corollary ids
 * delegate to their parent theorem with trivial actions filled in.  The
 * circle antipode is solved from the antipode linear system. */
HopfBraceData build_brace(const BraceRecipe& r);

}  // namespace hopf
