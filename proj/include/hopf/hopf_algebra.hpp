#pragma once

#include <string>
#include <vector>

#include "hopf/report.hpp"

namespace hopf {

/* Coalgebra by structure constants.  Column i of delta is Delta(e_i) in
 * the left-major basis of H (x) H; counit is a single row. */
struct CoalgebraData {
  std::size_t dim = 0;
  SparseMatrix delta;   // dim^2 x dim
  SparseMatrix counit;  // 1 x dim

  const Field& field() const { return delta.field(); }
  void check_shapes() const;
};

/* Hopf algebra on a shared coalgebra: column a*dim+b of mult is e_a * e_b,
 * unit is the coordinate column of 1, antipode is an endomorphism matrix.
 * basis holds optional display labels (size dim or empty). */
struct HopfAlgebraData {
  CoalgebraData co;
  SparseMatrix mult;      // dim x dim^2
  SparseMatrix unit;      // dim x 1
  SparseMatrix antipode;  // dim x dim
  std::vector<std::string> basis;

  std::size_t dim() const { return co.dim; }
  const Field& field() const { return co.field(); }
  void check_shapes() const;
};

// Pipeline stages for the structure maps (pos = leftmost consumed leg).
Step step_delta(const CoalgebraData& c, std::size_t pos);
Step step_counit(const CoalgebraData& c, std::size_t pos);
Step step_mult(const HopfAlgebraData& h, std::size_t pos);
Step step_unit(const HopfAlgebraData& h, std::size_t pos);
Step step_antipode(const HopfAlgebraData& h, std::size_t pos);
Step step_matrix(const SparseMatrix& m, std::size_t pos);  // one leg in, one out

AxiomReport verify_coalgebra(const CoalgebraData& c);
AxiomReport verify_hopf(const HopfAlgebraData& h);

bool is_cocommutative(const CoalgebraData& c);
bool is_commutative(const HopfAlgebraData& h);

// Left-nested iterate: delta_iter(c, 0) = id, delta_iter(c, k) applies
// Delta to the leftmost leg k times; shape dim^(k+1) x dim.
SparseMatrix delta_iter(const CoalgebraData& c, std::size_t k);

// Tensor product Hopf algebra on the left-major product basis.
HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b);

// Opposite-algebra + co-opposite-coalgebra twin; needs S invertible.
HopfAlgebraData op_cop(const HopfAlgebraData& h);

std::vector<std::string> tensor_labels(const std::vector<std::string>& a,
                                       std::size_t da,
                                       const std::vector<std::string>& b,
                                       std::size_t db);

}  // namespace hopf
