#include "hopf/report.hpp"

namespace hopf {

bool AxiomReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return &c;
  return nullptr;
}

const AxiomCheck* AxiomReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

void AxiomReport::absorb(const std::string& prefix, AxiomReport sub) {
  for (auto& c : sub.checks) {
    c.axiom = prefix + c.axiom;
    checks.push_back(std::move(c));
  }
}

AxiomCheck check_identity(const Field& f, const IdentitySpec& spec) {
  AxiomCheck out;
  out.axiom = spec.name;
  out.input_dims = spec.in_dims;
  out.leg_labels = spec.leg_labels;
  std::uint64_t total = 1;
  for (std::size_t d : spec.in_dims) total *= d;
  for (std::uint64_t j = 0; j < total; ++j) {
    TensorVec v;
    v.dims = spec.in_dims;
    v.entries.emplace(j, Scalar::one(f));
    TensorVec l = run_pipeline(spec.lhs, v);
    TensorVec r = run_pipeline(spec.rhs, v);
    if (l.dims != r.dims)
      throw ShapeError("identity '" + spec.name +
                       "': the two sides land in different spaces");
    if (l.entries == r.entries) continue;
    out.pass = false;
    out.witness = unflatten(spec.in_dims, j);
    out.residual = l;
    for (const auto& [idx, c] : r.entries) out.residual.add(idx, -c);
    break;
  }
  if (out.pass) out.leg_labels.clear();
  return out;
}

void run_identities(const Field& f, const std::vector<IdentitySpec>& specs,
                    AxiomReport& report) {
  for (const auto& s : specs) report.add(check_identity(f, s));
}

}  // namespace hopf
