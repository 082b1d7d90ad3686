#include "hopf/constructions.hpp"

#include "hopf/subspace.hpp"

namespace hopf {

namespace {

void refuse(const std::string& hypothesis, AxiomReport rep) {
  if (!rep.all_passed()) throw HypothesisError(hypothesis, std::move(rep));
}

AxiomReport cocommutativity_report(const HopfAlgebraData& h,
                                   const std::string& axiom) {
  IdentitySpec spec{axiom,
                    {h.dim()},
                    {step_delta(h.co, 0)},
                    {step_delta(h.co, 0), permute_step({1, 0})},
                    h.basis.empty()
                        ? std::vector<std::vector<std::string>>{}
                        : std::vector<std::vector<std::string>>{h.basis}};
  AxiomReport rep;
  rep.add(check_identity(h.field(), spec));
  return rep;
}

AxiomReport commutativity_report(const HopfAlgebraData& h,
                                 const std::string& axiom) {
  IdentitySpec spec{
      axiom,
      {h.dim(), h.dim()},
      {step_mult(h, 0)},
      {permute_step({1, 0}), step_mult(h, 0)},
      h.basis.empty()
          ? std::vector<std::vector<std::string>>{}
          : std::vector<std::vector<std::string>>{h.basis, h.basis}};
  AxiomReport rep;
  rep.add(check_identity(h.field(), spec));
  return rep;
}

// Recipe action slots are rebound to the structure each hypothesis
// quantifies over; only the coalgebra halves must agree beforehand.
LinearAction rebind(const LinearAction& act, ActionSide side,
                    const HopfAlgebraData& actor,
                    const HopfAlgebraData& target, const std::string& id,
                    const std::string& slot) {
  if (act.side != side)
    throw ValueError("recipe " + id + ": " + slot + " must be a " +
                     to_string(side) + " action");
  if (act.actor.co.delta != actor.co.delta ||
      act.actor.co.counit != actor.co.counit ||
      act.target.co.delta != target.co.delta ||
      act.target.co.counit != target.co.counit)
    throw ValueError("recipe " + id + ": " + slot +
                     " acts on different coalgebras than the given factors");
  LinearAction out = act;
  out.actor = actor;
  out.target = target;
  out.check_shapes();
  return out;
}

const HopfBraceData& slot(const std::optional<HopfBraceData>& s,
                          const std::string& id, const std::string& name) {
  if (!s) throw ValueError("recipe " + id + " requires the " + name + " slot");
  return *s;
}
const HopfAlgebraData& slot(const std::optional<HopfAlgebraData>& s,
                            const std::string& id, const std::string& name) {
  if (!s) throw ValueError("recipe " + id + " requires the " + name + " slot");
  return *s;
}
const LinearAction& slot(const std::optional<LinearAction>& s,
                         const std::string& id, const std::string& name) {
  if (!s) throw ValueError("recipe " + id + " requires the " + name + " slot");
  return *s;
}

HopfBraceData assemble(const HopfAlgebraData& dot, const HopfAlgebraData& circ,
                       const std::string& id) {
  if (dot.co.delta != circ.co.delta || dot.co.counit != circ.co.counit)
    throw ShapeError("recipe " + id +
                     ": the two multiplications disagree on the coalgebra");
  auto T = solve_antipode(dot.co, circ.mult, circ.unit);
  if (!T)
    throw ValueError("recipe " + id +
                     ": the circle multiplication admits no antipode");
  HopfBraceData out;
  out.co = dot.co;
  out.mult = dot.mult;
  out.unit = dot.unit;
  out.antipode = dot.antipode;
  out.mult_circ = circ.mult;
  out.unit_circ = circ.unit;
  out.antipode_circ = *T;
  out.basis = dot.basis;
  return out;
}

/*   (a (x) x) (b (x) y) = ab (x) xy
 *   (a (x) x) o (b (x) y) = a o (x1 |>> b1) (x) (x2 <<| b2) y   */
HopfBraceData build_main0(const HopfBraceData& Ab, const HopfAlgebraData& H,
                          const LinearAction& bl, const LinearAction& br,
                          const std::string& id) {
  if (Ab.field() != H.field())
    throw FieldError("recipe " + id + ": ingredients over different fields");
  refuse("brace-A", verify_hopf_brace(Ab));
  refuse("hopf-H", verify_hopf(H));
  refuse("H-commutative", commutativity_report(H, "commutative"));
  refuse("H-cocommutative", cocommutativity_report(H, "cocommutative"));

  HopfAlgebraData Adot = Ab.dot_structure();
  HopfAlgebraData Acirc = Ab.circ_structure();

  LinearAction bl_dot = rebind(bl, ActionSide::left, H, Adot, id, "black_left");
  refuse("black-left-module-algebra",
         verify_action(bl_dot, ActionKind::module_algebra));

  LinearAction bl_circ =
      rebind(bl, ActionSide::left, H, Acirc, id, "black_left");
  LinearAction br_circ =
      rebind(br, ActionSide::right, Acirc, H, id, "black_right");
  MatchedPair mp{Acirc, H, bl_circ, br_circ};
  refuse("matched-pair", verify_matched_pair(mp));

  LinearAction br_dot =
      rebind(br, ActionSide::right, Adot, H, id, "black_right");
  SideConditionData sd;
  sd.A = &Adot;
  sd.H = &H;
  sd.black_right = &br_dot;
  refuse("cond-1.4.6", verify_side_condition("cond-1.4.6", sd));

  HopfAlgebraData dot = tensor_hopf(Adot, H);
  HopfAlgebraData circ = bicrossed_product(mp);
  return assemble(dot, circ, id);
}

/*   (a (x) x) (b (x) y) = a (x1 |> b1) (x) (x2 <| b2) y
 *   (a (x) x) o (b (x) y) = a (x1 |>> b) (x) x2 o y   */
HopfBraceData build_main(const HopfAlgebraData& A, const HopfBraceData& Hb,
                         const LinearAction& tl, const LinearAction& tr,
                         const LinearAction& bl, const std::string& id) {
  if (A.field() != Hb.field())
    throw FieldError("recipe " + id + ": ingredients over different fields");
  refuse("hopf-A", verify_hopf(A));
  refuse("brace-H", verify_hopf_brace(Hb));

  HopfAlgebraData Hdot = Hb.dot_structure();
  HopfAlgebraData Hcirc = Hb.circ_structure();
  refuse("H-cocommutative", cocommutativity_report(Hdot, "cocommutative"));

  LinearAction tl_b = rebind(tl, ActionSide::left, Hdot, A, id, "tri_left");
  LinearAction tr_b = rebind(tr, ActionSide::right, A, Hdot, id, "tri_right");
  MatchedPair mp{A, Hdot, tl_b, tr_b};
  refuse("matched-pair", verify_matched_pair(mp));

  LinearAction bl_circ =
      rebind(bl, ActionSide::left, Hcirc, A, id, "black_left");
  refuse("black-left-module-bialgebra",
         verify_action(bl_circ, ActionKind::module_bialgebra));

  SideConditionData sd;
  sd.H_brace = &Hb;
  sd.tri_left = &tl_b;
  sd.black_left = &bl_circ;
  refuse("cond-2.1", verify_side_condition("cond-2.1", sd));
  SideConditionData sd2;
  sd2.H_brace = &Hb;
  sd2.tri_right = &tr_b;
  sd2.black_left = &bl_circ;
  refuse("cond-2.2", verify_side_condition("cond-2.2", sd2));

  HopfAlgebraData dot = bicrossed_product(mp);
  HopfAlgebraData circ = smash_product(bl_circ);
  return assemble(dot, circ, id);
}

}  // namespace

HopfAlgebraData bicrossed_product(const MatchedPair& mp) {
  refuse("matched-pair", verify_matched_pair(mp));
  const HopfAlgebraData& A = mp.A;
  const HopfAlgebraData& H = mp.H;
  const std::size_t dA = A.dim(), dH = H.dim();

  HopfAlgebraData out = tensor_hopf(A, H);  // keeps coalgebra, unit, labels

  Pipeline mult = {step_delta(H.co, 1),
                   step_delta(A.co, 3),
                   permute_step({0, 1, 3, 2, 4, 5}),
                   mp.left.step(1),
                   step_mult(A, 0),
                   mp.right.step(1),
                   step_mult(H, 1)};
  out.mult = pipeline_matrix(A.field(), {dA, dH, dA, dH}, mult);

  Pipeline antipode = {step_delta(A.co, 0),
                       step_delta(H.co, 2),
                       permute_step({3, 1, 2, 0}),
                       step_antipode(H, 0),
                       step_antipode(A, 1),
                       step_antipode(H, 2),
                       step_antipode(A, 3),
                       mp.left.step(0),
                       mp.right.step(1)};
  out.antipode = pipeline_matrix(A.field(), {dA, dH}, antipode);
  return out;
}

HopfAlgebraData smash_product(const LinearAction& left) {
  if (left.side != ActionSide::left)
    throw ValueError("smash product needs a left action");
  refuse("module-bialgebra",
         verify_action(left, ActionKind::module_bialgebra));
  SideConditionData sd;
  sd.tri_left = &left;
  refuse("cond-smash1", verify_side_condition("cond-smash1", sd));
  MatchedPair mp{left.target, left.actor, left,
                 trivial_action(ActionSide::right, left.target, left.actor)};
  return bicrossed_product(mp);
}

std::optional<SparseMatrix> solve_antipode(const CoalgebraData& co,
                                           const SparseMatrix& mult,
                                           const SparseMatrix& unit) {
  co.check_shapes();
  const std::size_t d = co.dim;
  const Field f = co.field();
  if (mult.rows() != d || mult.cols() != d * d || unit.rows() != d ||
      unit.cols() != 1)
    throw ShapeError("solve_antipode: mismatched structure tensors");

  /* Unknown S is vectorized as (r, c) -> r*d + c; the law
   * mult (S (x) I) delta = unit . counit gives, per output i and input j,
   * sum_{j1, j2} delta[(j1, j2), j] sum_r S[r, j1] mult[i, (r, j2)]. */
  SparseMatrix C(f, d * d, d * d);
  co.delta.for_each([&](std::size_t q, std::size_t j, const Scalar& dv) {
    const std::size_t j1 = q / d, j2 = q % d;
    for (std::size_t r = 0; r < d; ++r) {
      const auto* col = mult.column(r * d + j2);
      if (!col) continue;
      for (const auto& [i, mv] : *col) C.add_to(i * d + j, r * d + j1, dv * mv);
    }
  });
  SparseMatrix B(f, d * d, 1);
  unit.for_each([&](std::size_t i, std::size_t, const Scalar& uv) {
    co.counit.for_each([&](std::size_t, std::size_t j, const Scalar& ev) {
      B.add_to(i * d + j, 0, uv * ev);
    });
  });

  auto X = solve_exact(C, B);
  if (!X) return std::nullopt;
  SparseMatrix S(f, d, d);
  X->for_each([&](std::size_t rc, std::size_t, const Scalar& v) {
    S.set(rc / d, rc % d, v);
  });

  // Validate both antipode laws before handing the solution out.
  Step delta = apply_step(co.delta, 0, 1, {d, d});
  Step counit = apply_step(co.counit, 0, 1, {});
  Step m0 = apply_step(mult, 0, 2, {d});
  Step u0 = apply_step(unit, 0, 0, {d});
  for (std::size_t posn = 0; posn < 2; ++posn) {
    IdentitySpec spec{"antipode",
                      {d},
                      {delta, step_matrix(S, posn), m0},
                      {counit, u0},
                      {}};
    if (!check_identity(f, spec).pass) return std::nullopt;
  }
  return S;
}

const std::vector<std::string>& brace_recipe_ids() {
  static const std::vector<std::string> ids = {
      "main0",     "cor-11.00", "cor-22.00", "main",  "cor-11.11",
      "cor-22.22", "cor-33.33", "gen-1",     "gen-2", "gen-3"};
  return ids;
}

HopfBraceData build_brace(const BraceRecipe& r) {
  const std::string& id = r.id;

  if (id == "main0")
    return build_main0(slot(r.A_brace, id, "A_brace"),
                       slot(r.H_hopf, id, "H_hopf"),
                       slot(r.black_left, id, "black_left"),
                       slot(r.black_right, id, "black_right"), id);

  if (id == "cor-11.00") {
    const HopfBraceData& Ab = slot(r.A_brace, id, "A_brace");
    const HopfAlgebraData& H = slot(r.H_hopf, id, "H_hopf");
    LinearAction br =
        trivial_action(ActionSide::right, Ab.circ_structure(), H);
    return build_main0(Ab, H, slot(r.black_left, id, "black_left"), br, id);
  }

  if (id == "cor-22.00") {
    const HopfBraceData& Ab = slot(r.A_brace, id, "A_brace");
    const HopfAlgebraData& H = slot(r.H_hopf, id, "H_hopf");
    refuse("A-cocommutative",
           cocommutativity_report(Ab.dot_structure(), "cocommutative"));
    LinearAction bl = trivial_action(ActionSide::left, H, Ab.circ_structure());
    return build_main0(Ab, H, bl, slot(r.black_right, id, "black_right"), id);
  }

  if (id == "main")
    return build_main(slot(r.A_hopf, id, "A_hopf"),
                      slot(r.H_brace, id, "H_brace"),
                      slot(r.tri_left, id, "tri_left"),
                      slot(r.tri_right, id, "tri_right"),
                      slot(r.black_left, id, "black_left"), id);

  if (id == "cor-11.11" || id == "cor-22.22" || id == "cor-33.33" ||
      id == "gen-1" || id == "gen-2" || id == "gen-3") {
    const HopfAlgebraData& A = slot(r.A_hopf, id, "A_hopf");
    const HopfAlgebraData& H = slot(r.H_hopf, id, "H_hopf");
    refuse("H-cocommutative", cocommutativity_report(H, "cocommutative"));
    HopfBraceData Hb = make_opposite_brace(H);
    LinearAction triv_tl = trivial_action(ActionSide::left, H, A);
    LinearAction triv_tr = trivial_action(ActionSide::right, A, H);

    if (id == "cor-11.11")
      return build_main(A, Hb, slot(r.tri_left, id, "tri_left"),
                        slot(r.tri_right, id, "tri_right"), triv_tl, id);

    if (id == "cor-22.22" || id == "gen-1") {
      const LinearAction& tl = slot(r.tri_left, id, "tri_left");
      LinearAction bl = id == "gen-1"
                            ? triv_tl
                            : slot(r.black_left, id, "black_left");
      LinearAction tl_b = rebind(tl, ActionSide::left, H, A, id, "tri_left");
      LinearAction bl_b = rebind(bl, ActionSide::left, H, A, id, "black_left");
      SideConditionData sd;
      sd.tri_left = &tl_b;
      sd.black_left = &bl_b;
      refuse("cond-1.1.1", verify_side_condition("cond-1.1.1", sd));
      return build_main(A, Hb, tl, triv_tr, bl, id);
    }

    // cor-33.33, gen-2, gen-3
    const LinearAction& tr =
        id == "gen-2" ? triv_tr : slot(r.tri_right, id, "tri_right");
    const LinearAction& bl =
        id == "gen-3" ? triv_tl : slot(r.black_left, id, "black_left");
    LinearAction tr_b = rebind(tr, ActionSide::right, A, H, id, "tri_right");
    LinearAction bl_b = rebind(bl, ActionSide::left, H, A, id, "black_left");
    SideConditionData sd;
    sd.H = &H;
    sd.tri_right = &tr_b;
    sd.black_left = &bl_b;
    refuse("cond-2.2.2", verify_side_condition("cond-2.2.2", sd));
    return build_main(A, Hb, triv_tl, tr, bl, id);
  }

  throw ValueError("unknown recipe id: " + id);
}

}  // namespace hopf
