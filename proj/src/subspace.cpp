#include "hopf/subspace.hpp"

#include <algorithm>

namespace hopf {

namespace {

/* Incremental Gauss-Jordan over the field.  Rows are kept fully reduced
 * against each other at all times, so the final basis is the reduced row
 * echelon form regardless of insertion order. */
struct Eliminator {
  std::vector<SparseRow> rows;
  std::vector<std::size_t> pivots;

  // Reduces v against the current rows; if nonzero remains, normalizes it,
  // inserts it, and back-substitutes.  Returns true when the rank grew.
  bool insert(SparseRow v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto it = v.find(pivots[i]);
      if (it == v.end()) continue;
      Scalar c = it->second;
      v.erase(it);
      for (const auto& [col, val] : rows[i]) {
        if (col == pivots[i]) continue;
        add_entry(v, col, -(c * val));
      }
    }
    if (v.empty()) return false;
    std::size_t p = v.begin()->first;
    Scalar lead = v.begin()->second;
    SparseRow norm;
    for (const auto& [col, val] : v) norm.emplace(col, val / lead);
    // back-eliminate the new pivot from existing rows
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto it = rows[i].find(p);
      if (it == rows[i].end()) continue;
      Scalar c = it->second;
      rows[i].erase(it);
      for (const auto& [col, val] : norm) {
        if (col == p) continue;
        add_entry(rows[i], col, -(c * val));
      }
    }
    std::size_t at = 0;
    while (at < pivots.size() && pivots[at] < p) ++at;
    rows.insert(rows.begin() + at, std::move(norm));
    pivots.insert(pivots.begin() + at, p);
    return true;
  }

  static void add_entry(SparseRow& row, std::size_t col, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = row.find(col);
    if (it == row.end()) {
      row.emplace(col, v);
      return;
    }
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
};

std::vector<SparseRow> matrix_rows(const SparseMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  m.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    rows[r].emplace(c, v);
  });
  return rows;
}

}  // namespace

Subspace Subspace::row_span(const SparseMatrix& generators) {
  Eliminator e;
  for (auto& row : matrix_rows(generators)) e.insert(std::move(row));
  Subspace s(generators.field(), generators.cols());
  s.rows_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::col_span(const SparseMatrix& generators) {
  return row_span(generators.transpose());
}

SparseMatrix Subspace::basis_columns() const {
  SparseMatrix out(field_, ambient_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [col, v] : rows_[i]) out.set(col, i, v);
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ && rows_ == o.rows_;
}

Subspace kernel(const SparseMatrix& a) {
  Eliminator e;
  for (auto& row : matrix_rows(a)) e.insert(std::move(row));
  // free columns index the canonical kernel generators
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  Eliminator basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseRow v;
    v.emplace(f, Scalar::one(a.field()));
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      auto it = e.rows[i].find(f);
      if (it != e.rows[i].end())
        Eliminator::add_entry(v, e.pivots[i], -it->second);
    }
    basis.insert(std::move(v));
  }
  Subspace s(a.field(), a.cols());
  s.rows_ = std::move(basis.rows);
  s.pivots_ = std::move(basis.pivots);
  return s;
}

bool subspace_contains(const Subspace& u, const SparseMatrix& v) {
  if (v.field() != u.field()) throw FieldError("membership over mixed fields");
  if (v.rows() != u.ambient() || v.cols() != 1)
    throw ShapeError("membership expects an ambient x 1 column");
  SparseRow w;
  v.for_each([&](std::size_t r, std::size_t, const Scalar& val) {
    w.emplace(r, val);
  });
  for (std::size_t i = 0; i < u.basis().size(); ++i) {
    auto it = w.find(u.pivots()[i]);
    if (it == w.end()) continue;
    Scalar c = it->second;
    for (const auto& [col, val] : u.basis()[i])
      Eliminator::add_entry(w, col, -(c * val));
  }
  return w.empty();
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.field() != v.field()) throw FieldError("intersection over mixed fields");
  if (u.ambient() != v.ambient())
    throw ShapeError("intersection of different ambient spaces");
  /* Solve sum a_i u_i = sum b_j v_j: the kernel of [U^T | -V^T] yields the
   * coefficient pairs; map the a-part back into the ambient space. */
  std::size_t ku = u.dim(), kv = v.dim();
  SparseMatrix m(u.field(), u.ambient(), ku + kv);
  for (std::size_t i = 0; i < ku; ++i)
    for (const auto& [col, val] : u.basis()[i]) m.set(col, i, val);
  for (std::size_t j = 0; j < kv; ++j)
    for (const auto& [col, val] : v.basis()[j]) m.set(col, ku + j, -val);
  Subspace coeff = kernel(m);
  Eliminator e;
  for (const auto& krow : coeff.basis()) {
    SparseRow w;
    for (const auto& [idx, c] : krow) {
      if (idx >= ku) continue;
      for (const auto& [col, val] : u.basis()[idx])
        Eliminator::add_entry(w, col, c * val);
    }
    e.insert(std::move(w));
  }
  Subspace s(u.field(), u.ambient());
  s.rows_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::optional<SparseMatrix> solve_exact(const SparseMatrix& a,
                                        const SparseMatrix& b) {
  if (a.field() != b.field()) throw FieldError("solve over mixed fields");
  if (a.rows() != b.rows()) throw ShapeError("solve row mismatch");
  // reduce the augmented matrix [A | B]; a pivot inside B means inconsistency
  SparseMatrix aug(a.field(), a.rows(), a.cols() + b.cols());
  a.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    aug.set(r, c, v);
  });
  b.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    aug.set(r, a.cols() + c, v);
  });
  Eliminator e;
  for (auto& row : matrix_rows(aug)) e.insert(std::move(row));
  for (std::size_t p : e.pivots)
    if (p >= a.cols()) return std::nullopt;
  SparseMatrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    for (const auto& [col, val] : e.rows[i])
      if (col >= a.cols()) x.set(e.pivots[i], col - a.cols(), val);
  return x;
}

std::optional<SparseMatrix> inverse(const SparseMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve_exact(a, SparseMatrix::identity(a.field(), a.rows()));
  if (!x) return std::nullopt;
  if (a * *x != SparseMatrix::identity(a.field(), a.rows()))
    return std::nullopt;
  if (*x * a != SparseMatrix::identity(a.field(), a.rows()))
    return std::nullopt;
  return x;
}

}  // namespace hopf
