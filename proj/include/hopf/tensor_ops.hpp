#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopf/sparse_matrix.hpp"

namespace hopf {

/* Sparse vector in a tensor product of factor spaces.  Flat indices are
 * left-major over dims: index(i_0,...,i_{n-1}) = (..(i_0*d_1 + i_1)*d_2 ..).
 * dims may be empty (the scalar line k, a single index 0). */
struct TensorVec {
  std::vector<std::size_t> dims;
  std::map<std::uint64_t, Scalar> entries;

  void add(std::uint64_t idx, const Scalar& v);
  bool operator==(const TensorVec& o) const {
    return dims == o.dims && entries == o.entries;
  }
};

std::uint64_t flatten(const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& idx);
std::vector<std::size_t> unflatten(const std::vector<std::size_t>& dims,
                                   std::uint64_t flat);

TensorVec basis_tensor(const Field& f, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& idx);

/* One stage of a linear pipeline on tensor legs.
 *
 * Apply: a matrix consumes `arity_in` adjacent legs starting at `pos`
 * (their dims multiply to op.cols()) and emits the legs in `out_dims`
 * (multiplying to op.rows()).  arity_in = 0 inserts legs (units), empty
 * out_dims erases legs (counits, full contractions).
 *
 * Permute: leg k of the output is leg perm[k] of the input. */
struct Step {
  enum class Kind { apply, permute } kind;
  SparseMatrix op;
  std::size_t pos = 0;
  std::size_t arity_in = 0;
  std::vector<std::size_t> out_dims;
  std::vector<std::size_t> perm;
};

using Pipeline = std::vector<Step>;

Step apply_step(SparseMatrix op, std::size_t pos, std::size_t arity_in,
                std::vector<std::size_t> out_dims);
Step permute_step(std::vector<std::size_t> perm);

TensorVec run_pipeline(const Pipeline& pipe, TensorVec v);

// Materializes the pipeline column by column on the basis of in_dims.
SparseMatrix pipeline_matrix(const Field& f,
                             const std::vector<std::size_t>& in_dims,
                             const Pipeline& pipe);

}  // namespace hopf
