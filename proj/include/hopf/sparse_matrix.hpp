#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

/* Exact sparse matrix over a fixed field.  Storage is column-major
 * (column -> row -> value) with zero entries eliminated on write, so two
 * matrices are equal iff their stored maps are equal.
 *
 * Tensor indexing is left-major throughout the library: the basis vector
 * e_i (x) e_j of A (x) B has flat index i*dim(B) + j.  kron() follows the
 * same convention. */
class SparseMatrix {
 public:
  SparseMatrix() : field_(), rows_(0), cols_(0) {}
  SparseMatrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols) {}

  static SparseMatrix identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add_to(std::size_t r, std::size_t c, const Scalar& v);
  Scalar at(std::size_t r, std::size_t c) const;

  // Column as a sparse map; nullptr when the column is empty.
  const std::map<std::size_t, Scalar>* column(std::size_t c) const;

  // Visits entries in (col, row) order.
  void for_each(
      const std::function<void(std::size_t, std::size_t, const Scalar&)>& fn)
      const;

  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& s) const;
  SparseMatrix transpose() const;

  bool operator==(const SparseMatrix& o) const;
  bool operator!=(const SparseMatrix& o) const { return !(*this == o); }
  bool is_zero() const { return data_.empty(); }

 private:
  void check_field(const SparseMatrix& o) const;

  Field field_;
  std::size_t rows_, cols_;
  std::map<std::size_t, std::map<std::size_t, Scalar>> data_;
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

// Flip e_i (x) e_j -> e_j (x) e_i; shape (d2*d1) x (d1*d2).
SparseMatrix flip_map(const Field& f, std::size_t d1, std::size_t d2);

}  // namespace hopf
