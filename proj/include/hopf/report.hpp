#pragma once

#include <string>
#include <vector>

#include "hopf/tensor_ops.hpp"

namespace hopf {

/* Outcome of one checked identity.  On failure `witness` is the first basis
 * multi-index (lexicographic over input_dims) where the two sides differ and
 * `residual` is lhs - rhs at that input.  leg_labels, when present, names
 * the basis of each input leg for readable rendering. */
struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<std::size_t> input_dims;
  std::vector<std::size_t> witness;
  TensorVec residual;
  std::vector<std::vector<std::string>> leg_labels;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck* find(const std::string& axiom) const;
  const AxiomCheck* first_failure() const;
  void add(AxiomCheck c) { checks.push_back(std::move(c)); }
  // Merges another report, prefixing its axiom names.
  void absorb(const std::string& prefix, AxiomReport sub);
};

// Refused construction: the violated hypothesis plus its evidence.
struct HypothesisError : std::runtime_error {
  HypothesisError(const std::string& hypothesis_, AxiomReport report_)
      : std::runtime_error("hypothesis violated: " + hypothesis_),
        hypothesis(hypothesis_),
        report(std::move(report_)) {}

  std::string hypothesis;
  AxiomReport report;
};

/* Declarative identity: lhs and rhs pipelines agree on every basis vector
 * of the tensor space with the given factor dims. */
struct IdentitySpec {
  std::string name;
  std::vector<std::size_t> in_dims;
  Pipeline lhs, rhs;
  std::vector<std::vector<std::string>> leg_labels;
};

AxiomCheck check_identity(const Field& f, const IdentitySpec& spec);

void run_identities(const Field& f, const std::vector<IdentitySpec>& specs,
                    AxiomReport& report);

}  // namespace hopf
