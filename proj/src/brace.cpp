#include "hopf/brace.hpp"

#include <cmath>

#include "hopf/action.hpp"

namespace hopf {

namespace {

void refuse(const std::string& hypothesis, AxiomCheck evidence) {
  AxiomReport r;
  r.add(std::move(evidence));
  throw HypothesisError(hypothesis, std::move(r));
}

void require_cocommutative(const CoalgebraData& c) {
  if (is_cocommutative(c)) return;
  IdentitySpec spec{"cocommutativity",
                    {c.dim},
                    {step_delta(c, 0)},
                    {step_delta(c, 0), permute_step({1, 0})},
                    {}};
  refuse("cocommutativity", check_identity(c.field(), spec));
}

std::size_t square_side(const SparseMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw ShapeError(std::string(what) + " must be square");
  auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(m.cols()))));
  while (d * d < m.cols()) ++d;
  if (d * d != m.cols())
    throw ShapeError(std::string(what) + " must act on a tensor square");
  return d;
}

}  // namespace

HopfAlgebraData HopfBraceData::dot_structure() const {
  return HopfAlgebraData{co, mult, unit, antipode, basis};
}

HopfAlgebraData HopfBraceData::circ_structure() const {
  return HopfAlgebraData{co, mult_circ, unit_circ, antipode_circ, basis};
}

void HopfBraceData::check_shapes() const {
  dot_structure().check_shapes();
  circ_structure().check_shapes();
}

Step step_mult_circ(const HopfBraceData& b, std::size_t pos) {
  return apply_step(b.mult_circ, pos, 2, {b.dim()});
}

AxiomReport verify_hopf_brace(const HopfBraceData& b) {
  b.check_shapes();
  std::size_t d = b.dim();
  HopfAlgebraData dot = b.dot_structure();
  HopfAlgebraData circ = b.circ_structure();
  AxiomReport report;
  report.absorb("dot:", verify_hopf(dot));
  report.absorb("circ:", verify_hopf(circ));
  {
    IdentitySpec spec{
        "units-equal", {}, {step_unit(dot, 0)}, {step_unit(circ, 0)}, {}};
    report.add(check_identity(b.field(), spec));
  }
  // x o (yz) = (x1 o y) S(x2) (x3 o z), composed on every basis triple
  IdentitySpec compat{
      "brace-compatibility",
      {d, d, d},
      {step_mult(dot, 1), step_mult_circ(b, 0)},
      {step_delta(b.co, 0), step_delta(b.co, 0), permute_step({0, 3, 1, 2, 4}),
       step_mult_circ(b, 0), step_antipode(dot, 1), step_mult_circ(b, 2),
       step_mult(dot, 0), step_mult(dot, 0)},
      {}};
  if (!b.basis.empty()) compat.leg_labels = {b.basis, b.basis, b.basis};
  report.add(check_identity(b.field(), compat));
  return report;
}

bool is_cocommutative(const HopfBraceData& b) { return is_cocommutative(b.co); }

HopfBraceData make_trivial_brace(const HopfAlgebraData& h) {
  h.check_shapes();
  return HopfBraceData{h.co,    h.mult, h.unit,     h.antipode,
                       h.mult,  h.unit, h.antipode, h.basis};
}

HopfBraceData make_opposite_brace(const HopfAlgebraData& h) {
  h.check_shapes();
  IdentitySpec involutive{"antipode-involutive",
                          {h.dim()},
                          {step_antipode(h, 0), step_antipode(h, 0)},
                          {},
                          h.basis.empty()
                              ? std::vector<std::vector<std::string>>{}
                              : std::vector<std::vector<std::string>>{h.basis}};
  AxiomCheck c = check_identity(h.field(), involutive);
  if (!c.pass) refuse("antipode-involutive", std::move(c));
  SparseMatrix tau = flip_map(h.field(), h.dim(), h.dim());
  return HopfBraceData{h.co,          h.mult, h.unit,     h.antipode,
                       h.mult * tau,  h.unit, h.antipode, h.basis};
}

BraidOperator braid_operator(const HopfBraceData& b) {
  b.check_shapes();
  require_cocommutative(b.co);
  std::size_t d = b.dim();
  HopfAlgebraData dot = b.dot_structure();
  Step T = apply_step(b.antipode_circ, 1, 1, {d});
  Pipeline pipe;
  for (int i = 0; i < 4; ++i) pipe.push_back(step_delta(b.co, 0));
  for (int i = 0; i < 2; ++i) pipe.push_back(step_delta(b.co, 5));
  pipe.push_back(permute_step({0, 1, 5, 2, 3, 6, 4, 7}));
  pipe.push_back(step_mult_circ(b, 1));      // x2 o y1
  pipe.push_back(step_antipode(dot, 0));     // S(x1)
  pipe.push_back(step_mult(dot, 0));         // first factor
  pipe.push_back(step_antipode(dot, 1));     // S(x3)
  pipe.push_back(step_mult_circ(b, 2));      // x4 o y2
  pipe.push_back(step_mult(dot, 1));         // S(x3)(x4 o y2)
  pipe.push_back(T);
  pipe.push_back(step_mult_circ(b, 1));      // ... o x5
  pipe.push_back(step_mult_circ(b, 1));      // ... o y3
  BraidOperator out;
  out.dim = d;
  out.matrix = pipeline_matrix(b.field(), {d, d}, pipe);
  return out;
}

SparseMatrix specialized_braid(const std::string& id,
                               const HopfAlgebraData& h) {
  h.check_shapes();
  require_cocommutative(h.co);
  std::size_t d = h.dim();
  Pipeline pipe;
  if (id == "ex1.1-1") {
    // c(x,y) = y1 (x) S(y2) x y3
    pipe.push_back(step_delta(h.co, 1));
    pipe.push_back(step_delta(h.co, 1));
    pipe.push_back(permute_step({1, 2, 0, 3}));
    pipe.push_back(step_antipode(h, 1));
    pipe.push_back(step_mult(h, 1));
    pipe.push_back(step_mult(h, 1));
  } else if (id == "ex1.1-2") {
    // c(x,y) = S(x1) y x2 (x) x3
    pipe.push_back(step_delta(h.co, 0));
    pipe.push_back(step_delta(h.co, 0));
    pipe.push_back(permute_step({0, 3, 1, 2}));
    pipe.push_back(step_antipode(h, 0));
    pipe.push_back(step_mult(h, 0));
    pipe.push_back(step_mult(h, 0));
  } else {
    throw ValueError("unknown one-algebra braid family '" + id + "'");
  }
  return pipeline_matrix(h.field(), {d, d}, pipe);
}

SparseMatrix specialized_braid(const std::string& id, const HopfAlgebraData& a,
                               const HopfAlgebraData& h,
                               const LinearAction& act) {
  a.check_shapes();
  h.check_shapes();
  require_cocommutative(a.co);
  require_cocommutative(h.co);
  if (a.field() != h.field() || act.tensor.field() != a.field())
    throw FieldError("braid family over mixed fields");
  std::size_t da = a.dim(), dh = h.dim();
  const Field& f = a.field();
  Pipeline pipe;
  auto act_at = [&](std::size_t pos) {
    return apply_step(act.tensor, pos, 2, {act.tensor.rows()});
  };
  if (id == "gen-1") {
    if (act.tensor.rows() != da || act.tensor.cols() != dh * da)
      throw ShapeError("gen-1 wants a left action of H on A");
    // (a,x,b,y) with x -> 5 legs, b -> 3 legs:
    // S(x2)|>b1 (x) S(x1) y x3 (x) T(S(x5)|>b2) a b3 (x) T(S(x4))
    for (int i = 0; i < 4; ++i) pipe.push_back(step_delta(h.co, 1));
    for (int i = 0; i < 2; ++i) pipe.push_back(step_delta(a.co, 6));
    // legs: a x1..x5 b1 b2 b3 y
    pipe.push_back(permute_step({2, 6, 1, 9, 3, 5, 7, 0, 8, 4}));
    // legs: x2 b1 x1 y x3 x5 b2 a b3 x4
    pipe.push_back(step_antipode(h, 0));
    pipe.push_back(act_at(0));
    // first H factor: S(x1) y x3
    pipe.push_back(step_antipode(h, 1));
    pipe.push_back(step_mult(h, 1));
    pipe.push_back(step_mult(h, 1));
    // legs: A1 H1 x5 b2 a b3 x4
    pipe.push_back(step_antipode(h, 2));
    pipe.push_back(act_at(2));
    pipe.push_back(apply_step(a.antipode, 2, 1, {da}));  // T = S_A
    pipe.push_back(step_mult(a, 2));
    pipe.push_back(step_mult(a, 2));
    // legs: A1 H1 A2 x4
    pipe.push_back(step_antipode(h, 3));
    pipe.push_back(step_antipode(h, 3));  // T = S_H on the last leg
  } else if (id == "gen-2") {
    if (act.tensor.rows() != da || act.tensor.cols() != dh * da)
      throw ShapeError("gen-2 wants a left action of H on A");
    // x -> 8 legs, y -> 2, b -> 3:
    // x2|>b1 (x) S(x1) y1 x3
    // (x) [T(x6) T(y2) T(S(x4))] |> [T(x7|>b2) a (x8|>b3)]
    // (x) T(S(x5))
    for (int i = 0; i < 7; ++i) pipe.push_back(step_delta(h.co, 1));
    for (int i = 0; i < 2; ++i) pipe.push_back(step_delta(a.co, 9));
    pipe.push_back(step_delta(h.co, 12));
    // legs: a x1..x8 b1 b2 b3 y1 y2
    pipe.push_back(permute_step({2, 9, 1, 12, 3, 6, 13, 4, 7, 10, 0, 8, 11, 5}));
    // legs: x2 b1 x1 y1 x3 x6 y2 x4 x7 b2 a x8 b3 x5
    pipe.push_back(act_at(0));  // A1 = x2|>b1
    pipe.push_back(step_antipode(h, 1));
    pipe.push_back(step_mult(h, 1));
    pipe.push_back(step_mult(h, 1));  // H1 = S(x1) y1 x3
    // legs: A1 H1 x6 y2 x4 x7 b2 a x8 b3 x5
    pipe.push_back(step_antipode(h, 2));  // T(x6)
    pipe.push_back(step_antipode(h, 3));  // T(y2)
    pipe.push_back(step_antipode(h, 4));
    pipe.push_back(step_antipode(h, 4));  // T(S(x4))
    pipe.push_back(step_mult(h, 3));
    pipe.push_back(step_mult(h, 2));  // actor product in H
    // legs: A1 H1 P x7 b2 a x8 b3 x5
    pipe.push_back(act_at(3));
    pipe.push_back(apply_step(a.antipode, 3, 1, {da}));  // T(x7|>b2)
    pipe.push_back(act_at(5));
    pipe.push_back(step_mult(a, 4));
    pipe.push_back(step_mult(a, 3));
    // legs: A1 H1 P Q x5
    pipe.push_back(act_at(2));  // A2 = P |> Q
    pipe.push_back(step_antipode(h, 3));
    pipe.push_back(step_antipode(h, 3));  // T(S(x5))
  } else if (id == "gen-3") {
    if (act.tensor.rows() != dh || act.tensor.cols() != dh * da)
      throw ShapeError("gen-3 wants a right action of A on H");
    // b -> 5 legs, x -> 3:
    // b1 (x) S(x1<|b2) y x2 (x) T(b3) a b5 (x) T(S(x3)<|b4)
    for (int i = 0; i < 2; ++i) pipe.push_back(step_delta(h.co, 1));
    for (int i = 0; i < 4; ++i) pipe.push_back(step_delta(a.co, 4));
    // legs: a x1 x2 x3 b1..b5 y
    pipe.push_back(permute_step({4, 1, 5, 9, 2, 6, 0, 8, 3, 7}));
    // legs: b1 x1 b2 y x2 b3 a b5 x3 b4
    pipe.push_back(act_at(1));            // x1 <| b2
    pipe.push_back(step_antipode(h, 1));  // S(x1<|b2)
    pipe.push_back(step_mult(h, 1));
    pipe.push_back(step_mult(h, 1));  // H1
    // legs: b1 H1 b3 a b5 x3 b4
    pipe.push_back(apply_step(a.antipode, 2, 1, {da}));  // T(b3)
    pipe.push_back(step_mult(a, 2));
    pipe.push_back(step_mult(a, 2));  // A2
    // legs: b1 H1 A2 x3 b4
    pipe.push_back(step_antipode(h, 3));  // S(x3)
    pipe.push_back(act_at(3));            // S(x3) <| b4
    pipe.push_back(step_antipode(h, 3));  // T = S_H
  } else {
    throw ValueError("unknown action braid family '" + id + "'");
  }
  return pipeline_matrix(f, {da, dh, da, dh}, pipe);
}

AxiomReport check_braid(const SparseMatrix& c) {
  std::size_t d = square_side(c, "braid operator");
  Step C0 = apply_step(c, 0, 2, {d, d});
  Step C1 = apply_step(c, 1, 2, {d, d});
  IdentitySpec spec{
      "braid-equation", {d, d, d}, {C0, C1, C0}, {C1, C0, C1}, {}};
  AxiomReport report;
  report.add(check_identity(c.field(), spec));
  return report;
}

AxiomReport check_qybe(const SparseMatrix& r) {
  std::size_t d = square_side(r, "R-matrix");
  Step R12 = apply_step(r, 0, 2, {d, d});
  Step R23 = apply_step(r, 1, 2, {d, d});
  Step swap23 = permute_step({0, 2, 1});
  IdentitySpec spec{"qybe",
                    {d, d, d},
                    {R23, swap23, R12, swap23, R12},
                    {R12, swap23, R12, swap23, R23},
                    {}};
  AxiomReport report;
  report.add(check_identity(r.field(), spec));
  return report;
}

SparseMatrix compose_flip(const SparseMatrix& c) {
  std::size_t d = square_side(c, "operator");
  return c * flip_map(c.field(), d, d);
}

}  // namespace hopf
