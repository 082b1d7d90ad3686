#include "hopf/action.hpp"

#include "hopf/brace.hpp"

namespace hopf {

namespace {

std::vector<std::string> labels_or_default(const std::vector<std::string>& l,
                                           std::size_t d) {
  if (!l.empty()) return l;
  std::vector<std::string> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

// One label set per leg; empty when no leg has named basis vectors.
std::vector<std::vector<std::string>> mixed_legs(
    const std::vector<const HopfAlgebraData*>& legs) {
  bool any = false;
  for (const auto* h : legs) any = any || !h->basis.empty();
  if (!any) return {};
  std::vector<std::vector<std::string>> out;
  out.reserve(legs.size());
  for (const auto* h : legs)
    out.push_back(labels_or_default(h->basis, h->dim()));
  return out;
}

bool same_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  return a.dim() == b.dim() && a.field() == b.field() &&
         a.co.delta == b.co.delta && a.co.counit == b.co.counit &&
         a.mult == b.mult && a.unit == b.unit && a.antipode == b.antipode;
}

}  // namespace

std::string to_string(ActionSide s) {
  return s == ActionSide::left ? "left" : "right";
}

std::string to_string(ActionKind k) {
  switch (k) {
    case ActionKind::module_algebra: return "module-algebra";
    case ActionKind::module_coalgebra: return "module-coalgebra";
    default: return "module-bialgebra";
  }
}

ActionSide action_side_from_string(const std::string& s) {
  if (s == "left") return ActionSide::left;
  if (s == "right") return ActionSide::right;
  throw ValueError("unknown action side: " + s);
}

ActionKind action_kind_from_string(const std::string& s) {
  if (s == "module-algebra") return ActionKind::module_algebra;
  if (s == "module-coalgebra") return ActionKind::module_coalgebra;
  if (s == "module-bialgebra") return ActionKind::module_bialgebra;
  throw ValueError("unknown action kind: " + s);
}

void LinearAction::check_shapes() const {
  actor.check_shapes();
  target.check_shapes();
  if (actor.field() != target.field())
    throw FieldError("action actor and target over different fields");
  if (tensor.field() != actor.field())
    throw FieldError("action tensor over a different field");
  if (tensor.rows() != target.dim() ||
      tensor.cols() != actor.dim() * target.dim())
    throw ShapeError("action tensor must be dim(target) x "
                     "(dim(actor)*dim(target))");
}

Step LinearAction::step(std::size_t pos) const {
  return apply_step(tensor, pos, 2, {target.dim()});
}

LinearAction trivial_action(ActionSide side, const HopfAlgebraData& actor,
                            const HopfAlgebraData& target) {
  LinearAction act;
  act.side = side;
  act.actor = actor;
  act.target = target;
  // h |> a = eps(h) a resp. x <| a = eps(a) x: the actor leg is erased.
  if (side == ActionSide::left)
    act.tensor = kron(actor.co.counit,
                      SparseMatrix::identity(target.field(), target.dim()));
  else
    act.tensor = kron(SparseMatrix::identity(target.field(), target.dim()),
                      actor.co.counit);
  act.kinds = {ActionKind::module_algebra, ActionKind::module_coalgebra,
               ActionKind::module_bialgebra};
  return act;
}

AxiomReport verify_action(const LinearAction& act, ActionKind kind) {
  act.check_shapes();
  // Leg order is always (H, A) regardless of which one is the actor.
  const HopfAlgebraData& Hh =
      act.side == ActionSide::left ? act.actor : act.target;
  const HopfAlgebraData& Aa =
      act.side == ActionSide::left ? act.target : act.actor;
  const std::size_t dH = Hh.dim(), dA = Aa.dim();

  std::vector<IdentitySpec> specs;
  if (act.side == ActionSide::left) {
    specs.push_back({"module-unit",
                     {dA},
                     {step_unit(Hh, 0), act.step(0)},
                     {},
                     mixed_legs({&Aa})});
    specs.push_back({"module-assoc",
                     {dH, dH, dA},
                     {step_mult(Hh, 0), act.step(0)},
                     {act.step(1), act.step(0)},
                     mixed_legs({&Hh, &Hh, &Aa})});
  } else {
    specs.push_back({"module-unit",
                     {dH},
                     {step_unit(Aa, 1), act.step(0)},
                     {},
                     mixed_legs({&Hh})});
    specs.push_back({"module-assoc",
                     {dH, dA, dA},
                     {act.step(0), act.step(0)},
                     {step_mult(Aa, 1), act.step(0)},
                     mixed_legs({&Hh, &Aa, &Aa})});
  }

  const bool want_coalg = kind == ActionKind::module_coalgebra ||
                          kind == ActionKind::module_bialgebra;
  const bool want_alg = kind == ActionKind::module_algebra ||
                        kind == ActionKind::module_bialgebra;

  if (want_coalg) {
    specs.push_back({"module-coalgebra-delta",
                     {dH, dA},
                     {act.step(0), step_delta(act.target.co, 0)},
                     {step_delta(Hh.co, 0), step_delta(Aa.co, 2),
                      permute_step({0, 2, 1, 3}), act.step(0), act.step(1)},
                     mixed_legs({&Hh, &Aa})});
    specs.push_back({"module-coalgebra-counit",
                     {dH, dA},
                     {act.step(0), step_counit(act.target.co, 0)},
                     {step_counit(Hh.co, 0), step_counit(Aa.co, 0)},
                     mixed_legs({&Hh, &Aa})});
  }

  if (want_alg) {
    if (act.side == ActionSide::left) {
      specs.push_back({"module-algebra-unit",
                       {dH},
                       {step_unit(Aa, 1), act.step(0)},
                       {step_counit(Hh.co, 0), step_unit(Aa, 0)},
                       mixed_legs({&Hh})});
      specs.push_back({"module-algebra-mult",
                       {dH, dA, dA},
                       {step_mult(Aa, 1), act.step(0)},
                       {step_delta(Hh.co, 0), permute_step({0, 2, 1, 3}),
                        act.step(0), act.step(1), step_mult(Aa, 0)},
                       mixed_legs({&Hh, &Aa, &Aa})});
    } else {
      specs.push_back({"module-algebra-unit",
                       {dA},
                       {step_unit(Hh, 0), act.step(0)},
                       {step_counit(Aa.co, 0), step_unit(Hh, 0)},
                       mixed_legs({&Aa})});
      specs.push_back({"module-algebra-mult",
                       {dH, dH, dA},
                       {step_mult(Hh, 0), act.step(0)},
                       {step_delta(Aa.co, 2), permute_step({0, 2, 1, 3}),
                        act.step(0), act.step(1), step_mult(Hh, 0)},
                       mixed_legs({&Hh, &Hh, &Aa})});
    }
  }

  AxiomReport report;
  run_identities(act.tensor.field(), specs, report);
  return report;
}

void MatchedPair::check_shapes() const {
  A.check_shapes();
  H.check_shapes();
  left.check_shapes();
  right.check_shapes();
  if (left.side != ActionSide::left || right.side != ActionSide::right)
    throw ValueError("matched pair actions have swapped sides");
  if (!same_hopf(left.actor, H) || !same_hopf(right.target, H))
    throw ValueError("matched pair H disagrees with its actions");
  if (!same_hopf(left.target, A) || !same_hopf(right.actor, A))
    throw ValueError("matched pair A disagrees with its actions");
}

AxiomReport verify_matched_pair(const MatchedPair& mp) {
  mp.check_shapes();
  const std::size_t dA = mp.A.dim(), dH = mp.H.dim();
  const LinearAction& tl = mp.left;
  const LinearAction& tr = mp.right;

  AxiomReport report;
  report.absorb("left:", verify_action(tl, ActionKind::module_coalgebra));
  report.absorb("right:", verify_action(tr, ActionKind::module_coalgebra));

  std::vector<IdentitySpec> specs;
  specs.push_back({"mp1-left",
                   {dH},
                   {step_unit(mp.A, 1), tl.step(0)},
                   {step_counit(mp.H.co, 0), step_unit(mp.A, 0)},
                   mixed_legs({&mp.H})});
  specs.push_back({"mp1-right",
                   {dA},
                   {step_unit(mp.H, 0), tr.step(0)},
                   {step_counit(mp.A.co, 0), step_unit(mp.H, 0)},
                   mixed_legs({&mp.A})});
  specs.push_back({"mp2",
                   {dH, dA, dA},
                   {step_mult(mp.A, 1), tl.step(0)},
                   {step_delta(mp.H.co, 0), step_delta(mp.A.co, 2),
                    permute_step({0, 2, 1, 3, 4}), tl.step(0), tr.step(1),
                    tl.step(1), step_mult(mp.A, 0)},
                   mixed_legs({&mp.H, &mp.A, &mp.A})});
  specs.push_back({"mp3",
                   {dH, dH, dA},
                   {step_mult(mp.H, 0), tr.step(0)},
                   {step_delta(mp.H.co, 1), step_delta(mp.A.co, 3),
                    permute_step({0, 1, 3, 2, 4}), tl.step(1), tr.step(0),
                    tr.step(1), step_mult(mp.H, 0)},
                   mixed_legs({&mp.H, &mp.H, &mp.A})});
  specs.push_back({"mp4",
                   {dH, dA},
                   {step_delta(mp.H.co, 0), step_delta(mp.A.co, 2),
                    permute_step({0, 2, 1, 3}), tr.step(0), tl.step(1)},
                   {step_delta(mp.H.co, 0), step_delta(mp.A.co, 2),
                    permute_step({1, 3, 0, 2}), tr.step(0), tl.step(1)},
                   mixed_legs({&mp.H, &mp.A})});

  run_identities(mp.A.field(), specs, report);
  return report;
}

namespace {

void need(const void* p, const std::string& id, const std::string& slot) {
  if (!p) throw ValueError("side condition " + id + " requires " + slot);
}

}  // namespace

AxiomReport verify_side_condition(const std::string& id,
                                  const SideConditionData& data) {
  std::vector<IdentitySpec> specs;
  Field f;

  if (id == "cond-1.4.6") {
    need(data.A, id, "A");
    need(data.H, id, "H");
    need(data.black_right, id, "black_right");
    const HopfAlgebraData& A = *data.A;
    const HopfAlgebraData& H = *data.H;
    const LinearAction& br = *data.black_right;
    f = A.field();
    specs.push_back(
        {id,
         {H.dim(), A.dim(), A.dim()},
         {step_mult(A, 1), br.step(0)},
         {step_delta(H.co, 0), step_delta(H.co, 0),
          permute_step({0, 3, 1, 2, 4}), br.step(0), step_antipode(H, 1),
          br.step(2), step_mult(H, 0), step_mult(H, 0)},
         mixed_legs({&H, &A, &A})});
  } else if (id == "cond-2.1") {
    need(data.H_brace, id, "H_brace");
    need(data.tri_left, id, "tri_left");
    need(data.black_left, id, "black_left");
    const HopfBraceData& b = *data.H_brace;
    HopfAlgebraData dot = b.dot_structure();
    const LinearAction& tl = *data.tri_left;
    const LinearAction& bl = *data.black_left;
    const std::size_t dA = tl.target.dim();
    f = b.field();
    specs.push_back(
        {id,
         {b.dim(), b.dim(), dA},
         {tl.step(1), bl.step(0)},
         {step_delta(b.co, 0), step_delta(b.co, 0),
          permute_step({0, 3, 1, 2, 4}), step_mult_circ(b, 0),
          step_antipode(dot, 1), bl.step(2), step_mult(dot, 0), tl.step(0)},
         mixed_legs({&dot, &dot, &tl.target})});
  } else if (id == "cond-2.2") {
    need(data.H_brace, id, "H_brace");
    need(data.tri_right, id, "tri_right");
    need(data.black_left, id, "black_left");
    const HopfBraceData& b = *data.H_brace;
    HopfAlgebraData dot = b.dot_structure();
    const LinearAction& tr = *data.tri_right;
    const LinearAction& bl = *data.black_left;
    const std::size_t dA = tr.actor.dim();
    f = b.field();
    specs.push_back(
        {id,
         {b.dim(), b.dim(), dA},
         {tr.step(1), step_mult_circ(b, 0)},
         {step_delta(b.co, 0), step_delta(b.co, 0), step_delta(b.co, 0),
          permute_step({0, 4, 1, 2, 5, 3}), step_mult_circ(b, 0),
          step_antipode(dot, 1), bl.step(2), step_mult(dot, 0), tr.step(0),
          step_mult(dot, 0)},
         mixed_legs({&dot, &dot, &tr.actor})});
  } else if (id == "cond-1.1.1") {
    need(data.tri_left, id, "tri_left");
    need(data.black_left, id, "black_left");
    const LinearAction& tl = *data.tri_left;
    const LinearAction& bl = *data.black_left;
    f = tl.tensor.field();
    specs.push_back({id,
                     {tl.actor.dim(), tl.actor.dim(), tl.target.dim()},
                     {tl.step(1), bl.step(0)},
                     {permute_step({1, 0, 2}), bl.step(1), tl.step(0)},
                     mixed_legs({&tl.actor, &tl.actor, &tl.target})});
  } else if (id == "cond-2.2.2") {
    need(data.H, id, "H");
    need(data.tri_right, id, "tri_right");
    need(data.black_left, id, "black_left");
    const HopfAlgebraData& H = *data.H;
    const LinearAction& tr = *data.tri_right;
    const LinearAction& bl = *data.black_left;
    const std::size_t dA = tr.actor.dim();
    f = H.field();
    specs.push_back({id,
                     {H.dim(), dA, H.dim()},
                     {tr.step(0), step_mult(H, 0)},
                     {step_delta(H.co, 2), permute_step({0, 2, 1, 3}),
                      bl.step(1), tr.step(0), step_mult(H, 0)},
                     mixed_legs({&H, &tr.actor, &H})});
  } else if (id == "cond-smash1") {
    need(data.tri_left, id, "tri_left");
    const LinearAction& tl = *data.tri_left;
    f = tl.tensor.field();
    specs.push_back({id,
                     {tl.actor.dim(), tl.target.dim()},
                     {step_delta(tl.actor.co, 0), tl.step(1)},
                     {step_delta(tl.actor.co, 0), permute_step({1, 0, 2}),
                      tl.step(1)},
                     mixed_legs({&tl.actor, &tl.target})});
  } else {
    throw ValueError("unknown side condition: " + id);
  }

  AxiomReport report;
  run_identities(f, specs, report);
  return report;
}

const std::vector<std::string>& side_condition_ids() {
  static const std::vector<std::string> ids = {
      "cond-1.4.6", "cond-2.1", "cond-2.2",
      "cond-1.1.1", "cond-2.2.2", "cond-smash1"};
  return ids;
}

}  // namespace hopf
