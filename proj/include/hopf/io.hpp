#pragma once

#include <optional>

#include "hopf/action.hpp"
#include "hopf/category.hpp"

namespace hopf {

/* JSON presentation files.  Every file is one object with "type" and
 * "field" at top level; tensors are arrays of [row, col, "coeff"] triples
 * sorted by (row, col) with canonically reduced coefficients, so
 * encode(decode(t)) == t byte for byte on canonical input. */

enum class FileType {
  hopf_algebra,
  hopf_brace,
  matched_pair,
  action,
  matrix,
  brace_morphism,
};

std::string to_string(FileType t);

struct LoadedObject {
  FileType type = FileType::hopf_algebra;
  std::optional<HopfAlgebraData> hopf;
  std::optional<HopfBraceData> brace;
  std::optional<MatchedPair> pair;
  std::optional<LinearAction> action;
  std::optional<SparseMatrix> matrix;
  std::optional<BraceMorphism> morphism;

  const Field& field() const;
};

std::string encode(const HopfAlgebraData& h);
std::string encode(const HopfBraceData& b);
std::string encode(const MatchedPair& mp);
std::string encode(const LinearAction& a);
std::string encode(const SparseMatrix& m);
std::string encode(const BraceMorphism& f);

// Rejects unknown keys, coefficients that do not parse, out-of-range
// indices, duplicate triples, and shape-inconsistent tensors.
LoadedObject decode(const std::string& text);

LoadedObject load_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/* Deterministic report rendering: same report, same bytes.  Failures
 * carry the witness basis vector (named when labels are known) and the
 * residual entries of lhs - rhs. */
std::string render_text(const AxiomReport& r);
std::string render_json(const AxiomReport& r);

// Refused construction: the violated hypothesis plus its evidence report.
std::string render_hypothesis_text(const HypothesisError& e);
std::string render_hypothesis_json(const HypothesisError& e);

}  // namespace hopf
