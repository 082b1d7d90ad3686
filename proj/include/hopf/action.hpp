#pragma once

#include "hopf/hopf_algebra.hpp"

namespace hopf {

struct HopfBraceData;

enum class ActionSide { left, right };
enum class ActionKind { module_algebra, module_coalgebra, module_bialgebra };

std::string to_string(ActionSide s);
std::string to_string(ActionKind k);
ActionSide action_side_from_string(const std::string& s);
ActionKind action_kind_from_string(const std::string& s);

/* Linear action by structure constants.  Both sides consume the pair
 * (target-of-H-position, actor) in H (x) A order:
 *   left  |> : H (x) A -> A, actor H, target A,
 *              tensor dim(A) x (dim(H)*dim(A)), column h*dim(A)+a;
 *   right <| : H (x) A -> H, actor A, target H,
 *              tensor dim(H) x (dim(H)*dim(A)), column h*dim(A)+a. */
struct LinearAction {
  ActionSide side = ActionSide::left;
  HopfAlgebraData actor;
  HopfAlgebraData target;
  SparseMatrix tensor;
  std::vector<ActionKind> kinds;  // claimed compatibilities

  void check_shapes() const;
  // Pipeline stage consuming the (H, A) leg pair at pos.
  Step step(std::size_t pos) const;
};

LinearAction trivial_action(ActionSide side, const HopfAlgebraData& actor,
                            const HopfAlgebraData& target);

// Module laws plus the compatibilities the kind claims.
AxiomReport verify_action(const LinearAction& act, ActionKind kind);

/* Matched pair (A, H, |>, <|): both actions are module coalgebras and
 * (mp1)-(mp4) hold.  left.actor, right target must be H; left.target,
 * right.actor must be A (tensor equality is checked). */
struct MatchedPair {
  HopfAlgebraData A, H;
  LinearAction left;   // |> : H (x) A -> A
  LinearAction right;  // <| : H (x) A -> H

  void check_shapes() const;
};

AxiomReport verify_matched_pair(const MatchedPair& mp);

/* Named side conditions; each id checks one identity:
 *   cond-1.4.6  x <| aa' = (x1 <| a) S(x2) (x3 <| a')      [A, H, black_right]
 *   cond-2.1    x |>> (x' |> a) = ((x1 o x') S(x2)) |> (x3 |>> a)
 *                                            [H_brace, tri_left, black_left]
 *   cond-2.2    x o (x' <| a) = (((x1 o x') S(x2)) <| (x3 |>> a)) x4
 *                                          [H_brace, tri_right, black_left]
 *   cond-1.1.1  x |>> (x' |> a) = x' |> (x |>> a)      [tri_left, black_left]
 *   cond-2.2.2  (x' <| a) x = (x' <| (x1 |>> a)) x2    [H, tri_right, black_left]
 *   cond-smash1 x1 (x) (x2 |> a) = x2 (x) (x1 |> a)    [tri_left]            */
struct SideConditionData {
  const HopfAlgebraData* A = nullptr;
  const HopfAlgebraData* H = nullptr;
  const HopfBraceData* H_brace = nullptr;
  const LinearAction* tri_left = nullptr;    // |>
  const LinearAction* tri_right = nullptr;   // <|
  const LinearAction* black_left = nullptr;  // |>>
  const LinearAction* black_right = nullptr; // <<|
};

AxiomReport verify_side_condition(const std::string& id,
                                  const SideConditionData& data);

const std::vector<std::string>& side_condition_ids();

}  // namespace hopf
