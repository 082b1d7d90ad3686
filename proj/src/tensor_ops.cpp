#include "hopf/tensor_ops.hpp"

#include <numeric>

namespace hopf {

namespace {

std::uint64_t dims_product(const std::vector<std::size_t>& dims,
                           std::size_t from, std::size_t to) {
  std::uint64_t p = 1;
  for (std::size_t i = from; i < to; ++i) p *= dims[i];
  return p;
}

TensorVec apply_at(const Step& s, const TensorVec& v) {
  if (s.pos + s.arity_in > v.dims.size())
    throw ShapeError("pipeline stage consumes legs beyond the vector");
  std::uint64_t mid = dims_product(v.dims, s.pos, s.pos + s.arity_in);
  std::uint64_t right = dims_product(v.dims, s.pos + s.arity_in, v.dims.size());
  if (mid != s.op.cols())
    throw ShapeError("pipeline stage input dim " + std::to_string(mid) +
                     " != matrix cols " + std::to_string(s.op.cols()));
  std::uint64_t out_dim = 1;
  for (std::size_t d : s.out_dims) out_dim *= d;
  if (out_dim != s.op.rows())
    throw ShapeError("pipeline stage output dims do not match matrix rows");

  TensorVec out;
  out.dims.assign(v.dims.begin(), v.dims.begin() + s.pos);
  out.dims.insert(out.dims.end(), s.out_dims.begin(), s.out_dims.end());
  out.dims.insert(out.dims.end(), v.dims.begin() + s.pos + s.arity_in,
                  v.dims.end());
  for (const auto& [idx, c] : v.entries) {
    std::uint64_t r = idx % right;
    std::uint64_t m = (idx / right) % mid;
    std::uint64_t l = idx / (right * mid);
    const auto* col = s.op.column(static_cast<std::size_t>(m));
    if (!col) continue;
    for (const auto& [row, val] : *col)
      out.add((l * out_dim + row) * right + r, c * val);
  }
  return out;
}

TensorVec permute_at(const Step& s, const TensorVec& v) {
  if (s.perm.size() != v.dims.size())
    throw ShapeError("permutation arity mismatch");
  TensorVec out;
  out.dims.resize(v.dims.size());
  for (std::size_t k = 0; k < s.perm.size(); ++k)
    out.dims[k] = v.dims.at(s.perm[k]);
  for (const auto& [idx, c] : v.entries) {
    std::vector<std::size_t> digits = unflatten(v.dims, idx);
    std::vector<std::size_t> moved(digits.size());
    for (std::size_t k = 0; k < s.perm.size(); ++k)
      moved[k] = digits[s.perm[k]];
    out.add(flatten(out.dims, moved), c);
  }
  return out;
}

}  // namespace

void TensorVec::add(std::uint64_t idx, const Scalar& v) {
  if (v.is_zero()) return;
  auto it = entries.find(idx);
  if (it == entries.end()) {
    entries.emplace(idx, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) entries.erase(it);
}

std::uint64_t flatten(const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& idx) {
  if (dims.size() != idx.size()) throw ShapeError("flatten arity mismatch");
  std::uint64_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (idx[k] >= dims[k]) throw ShapeError("flatten index out of range");
    flat = flat * dims[k] + idx[k];
  }
  return flat;
}

std::vector<std::size_t> unflatten(const std::vector<std::size_t>& dims,
                                   std::uint64_t flat) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = static_cast<std::size_t>(flat % dims[k]);
    flat /= dims[k];
  }
  return idx;
}

TensorVec basis_tensor(const Field& f, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& idx) {
  TensorVec v;
  v.dims = dims;
  v.entries.emplace(flatten(dims, idx), Scalar::one(f));
  return v;
}

Step apply_step(SparseMatrix op, std::size_t pos, std::size_t arity_in,
                std::vector<std::size_t> out_dims) {
  Step s;
  s.kind = Step::Kind::apply;
  s.op = std::move(op);
  s.pos = pos;
  s.arity_in = arity_in;
  s.out_dims = std::move(out_dims);
  return s;
}

Step permute_step(std::vector<std::size_t> perm) {
  Step s;
  s.kind = Step::Kind::permute;
  s.perm = std::move(perm);
  return s;
}

TensorVec run_pipeline(const Pipeline& pipe, TensorVec v) {
  for (const Step& s : pipe)
    v = s.kind == Step::Kind::apply ? apply_at(s, v) : permute_at(s, v);
  return v;
}

SparseMatrix pipeline_matrix(const Field& f,
                             const std::vector<std::size_t>& in_dims,
                             const Pipeline& pipe) {
  std::uint64_t in_total = dims_product(in_dims, 0, in_dims.size());
  TensorVec probe;
  probe.dims = in_dims;
  if (in_total > 0) probe.entries.emplace(0, Scalar::one(f));
  TensorVec first = run_pipeline(pipe, probe);
  std::uint64_t out_total = dims_product(first.dims, 0, first.dims.size());
  SparseMatrix out(f, static_cast<std::size_t>(out_total),
                   static_cast<std::size_t>(in_total));
  for (std::uint64_t j = 0; j < in_total; ++j) {
    TensorVec v;
    v.dims = in_dims;
    v.entries.emplace(j, Scalar::one(f));
    v = run_pipeline(pipe, v);
    for (const auto& [idx, c] : v.entries)
      out.set(static_cast<std::size_t>(idx), static_cast<std::size_t>(j), c);
  }
  return out;
}

}  // namespace hopf
