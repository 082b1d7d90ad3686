#include <doctest.h>

#include <algorithm>

#include "hopf/constructions.hpp"
#include "hopf/zoo.hpp"

using namespace hopf;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("bicrossed product along trivial actions is the tensor product") {
  auto c2 = cyclic_group_algebra(Q, 2);
  auto h4 = sweedler_h4(Q);
  MatchedPair mp;
  mp.A = h4;
  mp.H = c2;
  mp.left = trivial_action(ActionSide::left, c2, h4);
  mp.right = trivial_action(ActionSide::right, h4, c2);
  HopfAlgebraData twisted = bicrossed_product(mp);
  HopfAlgebraData plain = tensor_hopf(h4, c2);
  CHECK(twisted.mult == plain.mult);
  CHECK(twisted.unit == plain.unit);
  CHECK(twisted.co.delta == plain.co.delta);
  CHECK(twisted.co.counit == plain.co.counit);
  CHECK(twisted.antipode == plain.antipode);
}

TEST_CASE("bicrossed product of the C3/C6 pair, with a pinned product") {
  MatchedPair mp = c3_c6_matched_pair(Q);
  HopfAlgebraData bic = bicrossed_product(mp);
  CHECK(bic.dim() == 18);
  CHECK(verify_hopf(bic).all_passed());
  // (1 (x) b)(a (x) 1) = (b |> a) (x) (b <| a) = a^2 (x) b^3
  const std::size_t col = (0 * 6 + 1) * 18 + (1 * 6 + 0);
  const auto* entries = bic.mult.column(col);
  REQUIRE(entries != nullptr);
  REQUIRE(entries->size() == 1);
  CHECK(entries->begin()->first == 2 * 6 + 3);
  CHECK(entries->begin()->second.is_one());
}

TEST_CASE("bicrossed product refuses a broken pair with the failing law") {
  MatchedPair mp = c3_c6_matched_pair(Q);
  mp.right.tensor.set(3, 1 * 3 + 1, Scalar::zero(Q));
  mp.right.tensor.set(1, 1 * 3 + 1, Scalar::one(Q));
  try {
    bicrossed_product(mp);
    FAIL("broken matched pair must be refused");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis == "matched-pair");
    REQUIRE(e.report.first_failure() != nullptr);
    CHECK_FALSE(e.report.first_failure()->witness.empty());
  }
}

TEST_CASE("smash product of the sign scaling on the Sweedler algebra") {
  auto acts = cn_actions_on_h4(2, Scalar::of(Q, -1), Scalar::one(Q));
  HopfAlgebraData sm = smash_product(acts.first);
  CHECK(sm.dim() == 8);
  CHECK(verify_hopf(sm).all_passed());
  // (1 # c)(x # 1) = (c |> x) # c = -x # c
  const std::size_t col = (0 * 2 + 1) * 8 + (2 * 2 + 0);
  CHECK(sm.mult.at(2 * 2 + 1, col) == Scalar::of(Q, -1));
  // trivial scaling gives the plain tensor product
  auto triv = cn_actions_on_h4(2, Scalar::one(Q), Scalar::one(Q));
  CHECK(smash_product(triv.first).mult ==
        tensor_hopf(sweedler_h4(Q), cyclic_group_algebra(Q, 2)).mult);
}

TEST_CASE("antipode solver reproduces the Sweedler antipode exactly") {
  auto h4 = sweedler_h4(Q);
  auto s = solve_antipode(h4.co, h4.mult, h4.unit);
  REQUIRE(s.has_value());
  CHECK(*s == h4.antipode);
  auto s3 = symmetric_group_algebra(Q, 3);
  auto t = solve_antipode(s3.co, s3.mult, s3.unit);
  REQUIRE(t.has_value());
  CHECK(*t == s3.antipode);
}

TEST_CASE("antipode solver reports bialgebras without antipodes") {
  // the two-element monoid {1, z}, z absorbing: no antipode can exist
  CoalgebraData co;
  co.dim = 2;
  co.delta = SparseMatrix(Q, 4, 2);
  co.delta.set(0, 0, Scalar::one(Q));
  co.delta.set(3, 1, Scalar::one(Q));
  co.counit = SparseMatrix(Q, 1, 2);
  co.counit.set(0, 0, Scalar::one(Q));
  co.counit.set(0, 1, Scalar::one(Q));
  SparseMatrix mult(Q, 2, 4);
  mult.set(0, 0, Scalar::one(Q));
  mult.set(1, 1, Scalar::one(Q));
  mult.set(1, 2, Scalar::one(Q));
  mult.set(1, 3, Scalar::one(Q));
  SparseMatrix unit(Q, 2, 1);
  unit.set(0, 0, Scalar::one(Q));
  CHECK_FALSE(solve_antipode(co, mult, unit).has_value());
}

TEST_CASE("the two theorem readings of C3/C6 swap the twisted side") {
  MatchedPair mp = c3_c6_matched_pair(Q);
  auto c3 = cyclic_group_algebra(Q, 3);
  auto c6 = cyclic_group_algebra(Q, 6);

  BraceRecipe r0;
  r0.id = "main0";
  r0.A_brace = make_trivial_brace(c3);
  r0.H_hopf = c6;
  r0.black_left = mp.left;
  r0.black_right = mp.right;
  HopfBraceData b0 = build_brace(r0);

  BraceRecipe r1;
  r1.id = "cor-11.11";
  r1.A_hopf = c3;
  r1.H_hopf = c6;
  r1.tri_left = mp.left;
  r1.tri_right = mp.right;
  HopfBraceData b1 = build_brace(r1);

  CHECK(verify_hopf_brace(b0).all_passed());
  CHECK(verify_hopf_brace(b1).all_passed());
  CHECK(b0.unit == b0.unit_circ);
  CHECK(b1.unit == b1.unit_circ);

  HopfAlgebraData plain = tensor_hopf(c3, c6);
  HopfAlgebraData twisted = bicrossed_product(mp);
  CHECK(b0.mult == plain.mult);
  CHECK(b0.mult_circ == twisted.mult);
  CHECK(b1.mult == twisted.mult);
  CHECK(b1.mult_circ == plain.mult);
  // solved circle antipodes match the closed-form ones
  CHECK(b0.antipode_circ == twisted.antipode);
  CHECK(b1.antipode_circ == plain.antipode);
}

TEST_CASE("spelling out the parent theorem matches its corollary") {
  MatchedPair mp = c3_c6_matched_pair(Q);
  auto c3 = cyclic_group_algebra(Q, 3);
  auto c6 = cyclic_group_algebra(Q, 6);

  BraceRecipe direct;
  direct.id = "main";
  direct.A_hopf = c3;
  direct.H_brace = make_trivial_brace(c6);
  direct.tri_left = mp.left;
  direct.tri_right = mp.right;
  direct.black_left = trivial_action(ActionSide::left, c6, c3);
  HopfBraceData bm = build_brace(direct);

  BraceRecipe cor;
  cor.id = "cor-11.11";
  cor.A_hopf = c3;
  cor.H_hopf = c6;
  cor.tri_left = mp.left;
  cor.tri_right = mp.right;
  HopfBraceData bc = build_brace(cor);

  CHECK(bm.mult == bc.mult);
  CHECK(bm.mult_circ == bc.mult_circ);
  CHECK(bm.antipode == bc.antipode);
  CHECK(bm.antipode_circ == bc.antipode_circ);
  CHECK(bm.unit == bc.unit);
  CHECK(bm.co.delta == bc.co.delta);
}

TEST_CASE("recipe hypotheses are enforced by name") {
  auto c3 = cyclic_group_algebra(Q, 3);
  auto c6 = cyclic_group_algebra(Q, 6);
  auto h4 = sweedler_h4(Q);
  MatchedPair mp = c3_c6_matched_pair(Q);

  BraceRecipe bad;
  bad.id = "main0";
  bad.A_brace = make_trivial_brace(c3);
  bad.H_hopf = h4;
  bad.black_left = trivial_action(ActionSide::left, h4, c3);
  bad.black_right = trivial_action(ActionSide::right, c3, h4);
  CHECK_THROWS_WITH_AS(build_brace(bad), "hypothesis violated: H-commutative",
                       HypothesisError);

  BraceRecipe bad2;
  bad2.id = "cor-22.00";
  bad2.A_brace = make_trivial_brace(h4);
  bad2.H_hopf = c6;
  bad2.black_right = trivial_action(ActionSide::right, h4, c6);
  CHECK_THROWS_WITH_AS(build_brace(bad2),
                       "hypothesis violated: A-cocommutative",
                       HypothesisError);

  BraceRecipe bad3;
  bad3.id = "gen-1";
  bad3.A_hopf = c3;
  bad3.H_hopf = h4;
  bad3.tri_left = trivial_action(ActionSide::left, h4, c3);
  CHECK_THROWS_WITH_AS(build_brace(bad3),
                       "hypothesis violated: H-cocommutative",
                       HypothesisError);

  // missing slot and unknown id are input errors, not axiom failures
  BraceRecipe missing;
  missing.id = "cor-11.11";
  missing.A_hopf = c3;
  missing.H_hopf = c6;
  missing.tri_left = mp.left;
  CHECK_THROWS_AS(build_brace(missing), ValueError);
  BraceRecipe unknown;
  unknown.id = "cor-44.44";
  CHECK_THROWS_AS(build_brace(unknown), ValueError);

  // action attached to the wrong coalgebra
  BraceRecipe mismatched;
  mismatched.id = "gen-1";
  mismatched.A_hopf = c3;
  mismatched.H_hopf = c6;
  mismatched.tri_left = trivial_action(ActionSide::left, c6,
                                       cyclic_group_algebra(Q, 2));
  CHECK_THROWS_AS(build_brace(mismatched), ValueError);
}

TEST_CASE("tensoring with the one-dimensional Hopf algebra changes nothing") {
  auto c3 = cyclic_group_algebra(Q, 3);
  auto k = cyclic_group_algebra(Q, 1);
  BraceRecipe r;
  r.id = "main0";
  r.A_brace = make_trivial_brace(c3);
  r.H_hopf = k;
  r.black_left = trivial_action(ActionSide::left, k, c3);
  r.black_right = trivial_action(ActionSide::right, c3, k);
  HopfBraceData b = build_brace(r);
  CHECK(b.dim() == 3);
  CHECK(b.mult == c3.mult);
  CHECK(b.mult_circ == c3.mult);
  CHECK(b.antipode == c3.antipode);
  CHECK(b.antipode_circ == c3.antipode);
}

TEST_CASE("recipe id list is frozen") {
  const auto& ids = brace_recipe_ids();
  CHECK(ids.size() == 10);
  CHECK(ids.front() == "main0");
  CHECK(std::find(ids.begin(), ids.end(), "gen-3") != ids.end());
}
