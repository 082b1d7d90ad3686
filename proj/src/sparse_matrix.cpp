#include "hopf/sparse_matrix.hpp"

#include <string>

namespace hopf {

namespace {

void check_bounds(std::size_t r, std::size_t c, std::size_t rows,
                  std::size_t cols) {
  if (r >= rows || c >= cols)
    throw ShapeError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                     ") outside " + std::to_string(rows) + "x" +
                     std::to_string(cols));
}

}  // namespace

SparseMatrix SparseMatrix::identity(const Field& f, std::size_t n) {
  SparseMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& [c, col] : data_) n += col.size();
  return n;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  check_bounds(r, c, rows_, cols_);
  if (v.field() != field_)
    throw FieldError("entry field " + v.field().to_string() +
                     " differs from matrix field " + field_.to_string());
  if (v.is_zero()) {
    auto it = data_.find(c);
    if (it != data_.end()) {
      it->second.erase(r);
      if (it->second.empty()) data_.erase(it);
    }
    return;
  }
  data_[c].insert_or_assign(r, v);
}

void SparseMatrix::add_to(std::size_t r, std::size_t c, const Scalar& v) {
  if (v.is_zero()) return;
  check_bounds(r, c, rows_, cols_);
  auto& col = data_[c];
  auto it = col.find(r);
  if (it == col.end()) {
    col.emplace(r, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) {
    col.erase(it);
    if (col.empty()) data_.erase(c);
  }
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  check_bounds(r, c, rows_, cols_);
  auto it = data_.find(c);
  if (it == data_.end()) return Scalar::zero(field_);
  auto jt = it->second.find(r);
  return jt == it->second.end() ? Scalar::zero(field_) : jt->second;
}

const std::map<std::size_t, Scalar>* SparseMatrix::column(std::size_t c) const {
  auto it = data_.find(c);
  return it == data_.end() ? nullptr : &it->second;
}

void SparseMatrix::for_each(
    const std::function<void(std::size_t, std::size_t, const Scalar&)>& fn)
    const {
  for (const auto& [c, col] : data_)
    for (const auto& [r, v] : col) fn(r, c, v);
}

void SparseMatrix::check_field(const SparseMatrix& o) const {
  if (field_ != o.field_)
    throw FieldError("mixed matrix fields: " + field_.to_string() + " vs " +
                     o.field_.to_string());
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("sum shape");
  SparseMatrix out = *this;
  o.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    out.add_to(r, c, v);
  });
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("difference shape");
  SparseMatrix out = *this;
  o.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    out.add_to(r, c, -v);
  });
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  check_field(o);
  if (cols_ != o.rows_)
    throw ShapeError("product shape " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " * " + std::to_string(o.rows_) +
                     "x" + std::to_string(o.cols_));
  SparseMatrix out(field_, rows_, o.cols_);
  for (const auto& [j, bcol] : o.data_) {
    for (const auto& [k, bv] : bcol) {
      auto it = data_.find(k);
      if (it == data_.end()) continue;
      for (const auto& [i, av] : it->second) out.add_to(i, j, av * bv);
    }
  }
  return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
  SparseMatrix out(field_, rows_, cols_);
  if (s.is_zero()) return out;
  for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    out.set(r, c, v * s);
  });
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(field_, cols_, rows_);
  for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    out.set(c, r, v);
  });
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         data_ == o.data_;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field() != b.field()) throw FieldError("kron over mixed fields");
  SparseMatrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  a.for_each([&](std::size_t ra, std::size_t ca, const Scalar& va) {
    b.for_each([&](std::size_t rb, std::size_t cb, const Scalar& vb) {
      out.set(ra * b.rows() + rb, ca * b.cols() + cb, va * vb);
    });
  });
  return out;
}

SparseMatrix flip_map(const Field& f, std::size_t d1, std::size_t d2) {
  SparseMatrix out(f, d2 * d1, d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      out.set(j * d1 + i, i * d2 + j, Scalar::one(f));
  return out;
}

}  // namespace hopf
