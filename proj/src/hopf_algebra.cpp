#include "hopf/hopf_algebra.hpp"

#include "hopf/subspace.hpp"

namespace hopf {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ShapeError(what);
}

std::vector<std::vector<std::string>> legs(
    const std::vector<std::string>& labels, std::size_t n) {
  if (labels.empty()) return {};
  return std::vector<std::vector<std::string>>(n, labels);
}

}  // namespace

void CoalgebraData::check_shapes() const {
  require(delta.rows() == dim * dim && delta.cols() == dim,
          "delta must be dim^2 x dim");
  require(counit.rows() == 1 && counit.cols() == dim, "counit must be 1 x dim");
  if (delta.field() != counit.field())
    throw FieldError("delta and counit over different fields");
}

void HopfAlgebraData::check_shapes() const {
  co.check_shapes();
  require(mult.rows() == dim() && mult.cols() == dim() * dim(),
          "mult must be dim x dim^2");
  require(unit.rows() == dim() && unit.cols() == 1, "unit must be dim x 1");
  require(antipode.rows() == dim() && antipode.cols() == dim(),
          "antipode must be dim x dim");
  require(basis.empty() || basis.size() == dim(),
          "basis labels must match dim");
  if (mult.field() != field() || unit.field() != field() ||
      antipode.field() != field())
    throw FieldError("structure tensors over different fields");
}

Step step_delta(const CoalgebraData& c, std::size_t pos) {
  return apply_step(c.delta, pos, 1, {c.dim, c.dim});
}

Step step_counit(const CoalgebraData& c, std::size_t pos) {
  return apply_step(c.counit, pos, 1, {});
}

Step step_mult(const HopfAlgebraData& h, std::size_t pos) {
  return apply_step(h.mult, pos, 2, {h.dim()});
}

Step step_unit(const HopfAlgebraData& h, std::size_t pos) {
  return apply_step(h.unit, pos, 0, {h.dim()});
}

Step step_antipode(const HopfAlgebraData& h, std::size_t pos) {
  return apply_step(h.antipode, pos, 1, {h.dim()});
}

Step step_matrix(const SparseMatrix& m, std::size_t pos) {
  return apply_step(m, pos, 1, {m.rows()});
}

AxiomReport verify_coalgebra(const CoalgebraData& c) {
  c.check_shapes();
  std::size_t d = c.dim;
  std::vector<IdentitySpec> specs;
  specs.push_back({"coassociativity",
                   {d},
                   {step_delta(c, 0), step_delta(c, 0)},
                   {step_delta(c, 0), step_delta(c, 1)},
                   {}});
  specs.push_back(
      {"counit-left", {d}, {step_delta(c, 0), step_counit(c, 0)}, {}, {}});
  specs.push_back(
      {"counit-right", {d}, {step_delta(c, 0), step_counit(c, 1)}, {}, {}});
  AxiomReport report;
  run_identities(c.field(), specs, report);
  return report;
}

AxiomReport verify_hopf(const HopfAlgebraData& h) {
  h.check_shapes();
  std::size_t d = h.dim();
  const CoalgebraData& c = h.co;
  AxiomReport report = verify_coalgebra(c);
  std::vector<IdentitySpec> specs;
  specs.push_back({"associativity",
                   {d, d, d},
                   {step_mult(h, 0), step_mult(h, 0)},
                   {step_mult(h, 1), step_mult(h, 0)},
                   {}});
  specs.push_back(
      {"unit-left", {d}, {step_unit(h, 0), step_mult(h, 0)}, {}, {}});
  specs.push_back(
      {"unit-right", {d}, {step_unit(h, 1), step_mult(h, 0)}, {}, {}});
  // Delta(xy) = Delta(x) Delta(y) in H (x) H
  specs.push_back({"delta-multiplicative",
                   {d, d},
                   {step_mult(h, 0), step_delta(c, 0)},
                   {step_delta(c, 0), step_delta(c, 2),
                    permute_step({0, 2, 1, 3}), step_mult(h, 0),
                    step_mult(h, 1)},
                   {}});
  specs.push_back({"counit-multiplicative",
                   {d, d},
                   {step_mult(h, 0), step_counit(c, 0)},
                   {step_counit(c, 0), step_counit(c, 0)},
                   {}});
  specs.push_back({"delta-preserves-unit",
                   {},
                   {step_unit(h, 0), step_delta(c, 0)},
                   {step_unit(h, 0), step_unit(h, 0)},
                   {}});
  specs.push_back({"counit-preserves-unit",
                   {},
                   {step_unit(h, 0), step_counit(c, 0)},
                   {},
                   {}});
  specs.push_back({"antipode-left",
                   {d},
                   {step_delta(c, 0), step_antipode(h, 0), step_mult(h, 0)},
                   {step_counit(c, 0), step_unit(h, 0)},
                   {}});
  specs.push_back({"antipode-right",
                   {d},
                   {step_delta(c, 0), step_antipode(h, 1), step_mult(h, 0)},
                   {step_counit(c, 0), step_unit(h, 0)},
                   {}});
  for (auto& s : specs) s.leg_labels = legs(h.basis, s.in_dims.size());
  run_identities(h.field(), specs, report);
  return report;
}

bool is_cocommutative(const CoalgebraData& c) {
  c.check_shapes();
  return flip_map(c.field(), c.dim, c.dim) * c.delta == c.delta;
}

bool is_commutative(const HopfAlgebraData& h) {
  h.check_shapes();
  return h.mult * flip_map(h.field(), h.dim(), h.dim()) == h.mult;
}

SparseMatrix delta_iter(const CoalgebraData& c, std::size_t k) {
  c.check_shapes();
  Pipeline pipe;
  for (std::size_t i = 0; i < k; ++i) pipe.push_back(step_delta(c, 0));
  return pipeline_matrix(c.field(), {c.dim}, pipe);
}

std::vector<std::string> tensor_labels(const std::vector<std::string>& a,
                                       std::size_t da,
                                       const std::vector<std::string>& b,
                                       std::size_t db) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::string> out;
  out.reserve(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) out.push_back(a[i] + "(x)" + b[j]);
  return out;
}

HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  a.check_shapes();
  b.check_shapes();
  if (a.field() != b.field()) throw FieldError("tensor over mixed fields");
  std::size_t da = a.dim(), db = b.dim();
  const Field& f = a.field();
  // (a (x) x)(b (x) y) = ab (x) xy: route A (x) B (x) A (x) B through the
  // middle flip, then multiply componentwise.
  SparseMatrix mid_in =
      kron(SparseMatrix::identity(f, da),
           kron(flip_map(f, db, da), SparseMatrix::identity(f, db)));
  SparseMatrix mid_out =
      kron(SparseMatrix::identity(f, da),
           kron(flip_map(f, da, db), SparseMatrix::identity(f, db)));
  HopfAlgebraData t;
  t.co.dim = da * db;
  t.co.delta = mid_out * kron(a.co.delta, b.co.delta);
  t.co.counit = kron(a.co.counit, b.co.counit);
  t.mult = kron(a.mult, b.mult) * mid_in;
  t.unit = kron(a.unit, b.unit);
  t.antipode = kron(a.antipode, b.antipode);
  t.basis = tensor_labels(a.basis, da, b.basis, db);
  t.check_shapes();
  return t;
}

HopfAlgebraData op_cop(const HopfAlgebraData& h) {
  h.check_shapes();
  if (!inverse(h.antipode)) {
    AxiomReport r;
    AxiomCheck c;
    c.axiom = "antipode-invertible";
    c.pass = false;
    c.input_dims = {h.dim()};
    r.add(std::move(c));
    throw HypothesisError("antipode-invertible", std::move(r));
  }
  // with both sides reversed the antipode laws swap roles, so S survives
  // unchanged; S^{-1} would only serve a single-sided flip
  HopfAlgebraData o = h;
  SparseMatrix tau = flip_map(h.field(), h.dim(), h.dim());
  o.mult = h.mult * tau;
  o.co.delta = tau * h.co.delta;
  return o;
}

}  // namespace hopf
