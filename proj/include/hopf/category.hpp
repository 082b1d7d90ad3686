#pragma once

#include "hopf/brace.hpp"
#include "hopf/subspace.hpp"

namespace hopf {

/* Linear map between braces: matrix is dim(target) x dim(source) over
 * the shared field. */
struct BraceMorphism {
  HopfBraceData source;
  HopfBraceData target;
  SparseMatrix matrix;

  void check_shapes() const;
};

/* Checks that the matrix commutes with the coalgebra, both
 * multiplications and both units; antipode compatibilities are listed
 * as separate entries since they follow from the rest only for maps
 * that really are bialgebra maps. */
AxiomReport is_brace_morphism(const BraceMorphism& f);

/* One step of the largest-subcoalgebra fixpoint:
 * the subspace of c in D with Delta(c) in D (x) D. */
Subspace coalgebra_fixpoint_step(const CoalgebraData& co, const Subspace& D);

struct EqualizerResult {
  Subspace subspace;       // stable D inside ker(f - g)
  SparseMatrix inclusion;  // dim(source) x dim(D), columns = basis of D
  HopfBraceData brace;     // restricted structure on D
};

/* Equalizer of two brace morphisms with common source and target: the
 * largest subcoalgebra of ker(f - g), which inherits a brace structure.
 * The restriction is solved exactly and the result re-verified. */
EqualizerResult equalizer(const BraceMorphism& f, const BraceMorphism& g);

struct ProductResult {
  HopfBraceData brace;
  std::vector<SparseMatrix> projections;  // pi_i: product -> factor i
};

/* Product of cocommutative braces: the tensor brace with projections
 * counit (x) ... (x) id_i (x) ... (x) counit.  Non-cocommutative factors
 * are refused (the general coalgebra product is out of scope here). */
ProductResult product_cocommutative(const std::vector<HopfBraceData>& braces);

}  // namespace hopf
