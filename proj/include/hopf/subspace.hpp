#pragma once

#include <optional>
#include <vector>

#include "hopf/sparse_matrix.hpp"

namespace hopf {

using SparseRow = std::map<std::size_t, Scalar>;

/* Subspace of k^ambient stored as the unique reduced row echelon basis,
 * so two equal subspaces have identical representations (operator== is
 * literal equality of the stored rows). */
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient)
      : field_(f), ambient_(ambient) {}

  // Row span of the given matrix (rows are generating vectors).
  static Subspace row_span(const SparseMatrix& generators);
  // Column span.
  static Subspace col_span(const SparseMatrix& generators);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseRow>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Basis vectors as the columns of an ambient x dim matrix.
  SparseMatrix basis_columns() const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  friend Subspace kernel(const SparseMatrix&);
  friend bool subspace_contains(const Subspace&, const SparseMatrix&);
  friend Subspace subspace_intersect(const Subspace&, const Subspace&);

  Field field_;
  std::size_t ambient_;
  std::vector<SparseRow> rows_;     // reduced echelon, pivot entries are 1
  std::vector<std::size_t> pivots_; // strictly increasing
};

// Right kernel {v : A v = 0} in canonical form.
Subspace kernel(const SparseMatrix& a);

// Membership of a column vector (ambient x 1).
bool subspace_contains(const Subspace& u, const SparseMatrix& v);

Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/* Exact solution X of A X = B (column by column); free coordinates are set
 * to zero.  nullopt when some column is inconsistent. */
std::optional<SparseMatrix> solve_exact(const SparseMatrix& a,
                                        const SparseMatrix& b);

// Two-sided inverse, when it exists.
std::optional<SparseMatrix> inverse(const SparseMatrix& a);

}  // namespace hopf
