#include "hopf/category.hpp"

namespace hopf {

namespace {

void refuse(const std::string& hypothesis, AxiomReport rep) {
  if (!rep.all_passed()) throw HypothesisError(hypothesis, std::move(rep));
}

bool same_brace(const HopfBraceData& a, const HopfBraceData& b) {
  return a.dim() == b.dim() && a.field() == b.field() &&
         a.co.delta == b.co.delta && a.co.counit == b.co.counit &&
         a.mult == b.mult && a.unit == b.unit && a.antipode == b.antipode &&
         a.mult_circ == b.mult_circ && a.unit_circ == b.unit_circ &&
         a.antipode_circ == b.antipode_circ;
}

std::vector<std::vector<std::string>> legs(const std::vector<std::string>& l,
                                           std::size_t n) {
  if (l.empty()) return {};
  return std::vector<std::vector<std::string>>(n, l);
}

HopfBraceData tensor_brace(const HopfBraceData& a, const HopfBraceData& b) {
  HopfAlgebraData dot = tensor_hopf(a.dot_structure(), b.dot_structure());
  HopfAlgebraData circ = tensor_hopf(a.circ_structure(), b.circ_structure());
  HopfBraceData out;
  out.co = dot.co;
  out.mult = dot.mult;
  out.unit = dot.unit;
  out.antipode = dot.antipode;
  out.mult_circ = circ.mult;
  out.unit_circ = circ.unit;
  out.antipode_circ = circ.antipode;
  out.basis = dot.basis;
  return out;
}

}  // namespace

void BraceMorphism::check_shapes() const {
  source.check_shapes();
  target.check_shapes();
  if (source.field() != target.field())
    throw FieldError("morphism endpoints over different fields");
  if (matrix.field() != source.field())
    throw FieldError("morphism matrix over a different field");
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw ShapeError("morphism matrix must be dim(target) x dim(source)");
}

AxiomReport is_brace_morphism(const BraceMorphism& f) {
  f.check_shapes();
  const HopfBraceData& s = f.source;
  const HopfBraceData& t = f.target;
  const std::size_t d = s.dim();
  HopfAlgebraData sd = s.dot_structure(), sc = s.circ_structure();
  HopfAlgebraData td = t.dot_structure(), tc = t.circ_structure();
  Step F0 = step_matrix(f.matrix, 0);
  Step F1 = step_matrix(f.matrix, 1);

  std::vector<IdentitySpec> specs = {
      {"coalgebra-map-delta",
       {d},
       {F0, step_delta(t.co, 0)},
       {step_delta(s.co, 0), F0, F1},
       legs(s.basis, 1)},
      {"coalgebra-map-counit",
       {d},
       {F0, step_counit(t.co, 0)},
       {step_counit(s.co, 0)},
       legs(s.basis, 1)},
      {"algebra-map-mult",
       {d, d},
       {step_mult(sd, 0), F0},
       {F0, F1, step_mult(td, 0)},
       legs(s.basis, 2)},
      {"algebra-map-unit", {}, {step_unit(sd, 0), F0}, {step_unit(td, 0)}, {}},
      {"circ-map-mult",
       {d, d},
       {step_mult(sc, 0), F0},
       {F0, F1, step_mult(tc, 0)},
       legs(s.basis, 2)},
      {"circ-map-unit", {}, {step_unit(sc, 0), F0}, {step_unit(tc, 0)}, {}},
      {"antipode-compat",
       {d},
       {step_antipode(sd, 0), F0},
       {F0, step_antipode(td, 0)},
       legs(s.basis, 1)},
      {"circ-antipode-compat",
       {d},
       {step_antipode(sc, 0), F0},
       {F0, step_antipode(tc, 0)},
       legs(s.basis, 1)},
  };
  AxiomReport report;
  run_identities(s.field(), specs, report);
  return report;
}

Subspace coalgebra_fixpoint_step(const CoalgebraData& co, const Subspace& D) {
  const std::size_t d = co.dim, k = D.dim();
  if (k == 0) return D;
  SparseMatrix B = D.basis_columns();       // d x k
  SparseMatrix M = co.delta * B;            // d^2 x k
  SparseMatrix W = kron(B, B);              // d^2 x k^2, spans D (x) D

  /* alpha is admissible iff M alpha lands in the column span of W, i.e.
   * (alpha, beta) lies in the kernel of [M | -W]. */
  SparseMatrix stacked(co.field(), d * d, k + k * k);
  M.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    stacked.set(r, c, v);
  });
  W.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    stacked.set(r, k + c, -v);
  });
  Subspace ker = kernel(stacked);

  SparseMatrix candidates(co.field(), d, ker.dim());
  std::size_t out_col = 0;
  for (const SparseRow& row : ker.basis()) {
    // alpha = the first k coordinates; candidate = B alpha.
    SparseMatrix alpha(co.field(), k, 1);
    for (const auto& [idx, v] : row)
      if (idx < k) alpha.set(idx, 0, v);
    SparseMatrix cand = B * alpha;
    cand.for_each([&](std::size_t r, std::size_t, const Scalar& v) {
      candidates.set(r, out_col, v);
    });
    ++out_col;
  }
  return Subspace::col_span(candidates);
}

EqualizerResult equalizer(const BraceMorphism& f, const BraceMorphism& g) {
  if (!same_brace(f.source, g.source) || !same_brace(f.target, g.target))
    throw ValueError("equalizer needs a parallel pair of morphisms");
  refuse("morphism-f", is_brace_morphism(f));
  refuse("morphism-g", is_brace_morphism(g));

  const HopfBraceData& A = f.source;
  const std::size_t d = A.dim();

  Subspace D = kernel(f.matrix - g.matrix);
  for (std::size_t i = 0; i <= d; ++i) {
    Subspace next = coalgebra_fixpoint_step(A.co, D);
    if (next == D) break;
    D = next;
  }

  const std::size_t kdim = D.dim();
  SparseMatrix inc = D.basis_columns();  // d x kdim
  SparseMatrix inc2 = kron(inc, inc);

  auto restrict_map = [&](const SparseMatrix& lhs, const SparseMatrix& rhs,
                          const std::string& what) {
    auto X = solve_exact(lhs, rhs);
    if (!X)
      throw ValueError("equalizer: subspace is not closed under " + what);
    return *X;
  };

  HopfBraceData C;
  C.co.dim = kdim;
  C.co.delta = restrict_map(inc2, A.co.delta * inc, "comultiplication");
  C.co.counit = A.co.counit * inc;
  C.mult = restrict_map(inc, A.mult * inc2, "multiplication");
  C.unit = restrict_map(inc, A.unit, "the unit");
  C.antipode = restrict_map(inc, A.antipode * inc, "the antipode");
  C.mult_circ = restrict_map(inc, A.mult_circ * inc2, "the circle product");
  C.unit_circ = restrict_map(inc, A.unit_circ, "the circle unit");
  C.antipode_circ =
      restrict_map(inc, A.antipode_circ * inc, "the circle antipode");

  refuse("equalizer-restriction", verify_hopf_brace(C));
  if (!(f.matrix * inc == g.matrix * inc))
    throw ValueError("equalizer: inclusion does not equalize the pair");

  EqualizerResult out{std::move(D), std::move(inc), std::move(C)};
  return out;
}

ProductResult product_cocommutative(const std::vector<HopfBraceData>& braces) {
  if (braces.empty())
    throw ValueError("product needs at least one factor");
  for (std::size_t i = 0; i < braces.size(); ++i) {
    const HopfBraceData& b = braces[i];
    const std::string tag = "factor-" + std::to_string(i);
    refuse(tag, verify_hopf_brace(b));
    if (!is_cocommutative(b)) {
      IdentitySpec spec{"cocommutative",
                        {b.dim()},
                        {step_delta(b.co, 0)},
                        {step_delta(b.co, 0), permute_step({1, 0})},
                        b.basis.empty() ? std::vector<std::vector<std::string>>{}
                                        : std::vector<std::vector<std::string>>{
                                              b.basis}};
      AxiomReport rep;
      rep.add(check_identity(b.field(), spec));
      throw HypothesisError(tag + "-cocommutative", rep);
    }
  }

  HopfBraceData prod = braces[0];
  for (std::size_t i = 1; i < braces.size(); ++i)
    prod = tensor_brace(prod, braces[i]);

  std::vector<SparseMatrix> projections;
  const Field f = prod.field();
  for (std::size_t i = 0; i < braces.size(); ++i) {
    SparseMatrix pi = i == 0 ? SparseMatrix::identity(f, braces[0].dim())
                             : braces[0].co.counit;
    for (std::size_t j = 1; j < braces.size(); ++j)
      pi = kron(pi, j == i ? SparseMatrix::identity(f, braces[j].dim())
                           : braces[j].co.counit);
    projections.push_back(std::move(pi));
  }
  return ProductResult{std::move(prod), std::move(projections)};
}

}  // namespace hopf
