#include "hopf/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hopf {

using ordered_json = nlohmann::ordered_json;

std::string to_string(FileType t) {
  switch (t) {
    case FileType::hopf_algebra: return "hopf_algebra";
    case FileType::hopf_brace: return "hopf_brace";
    case FileType::matched_pair: return "matched_pair";
    case FileType::action: return "action";
    case FileType::matrix: return "matrix";
    default: return "brace_morphism";
  }
}

const Field& LoadedObject::field() const {
  switch (type) {
    case FileType::hopf_algebra: return hopf->field();
    case FileType::hopf_brace: return brace->field();
    case FileType::matched_pair: return pair->A.field();
    case FileType::action: return action->target.field();
    case FileType::matrix: return matrix->field();
    default: return morphism->source.field();
  }
}

namespace {

ordered_json entries_json(const SparseMatrix& m) {
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> triples;
  m.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    triples.emplace_back(r, c, v.to_string());
  });
  std::sort(triples.begin(), triples.end());
  ordered_json out = ordered_json::array();
  for (const auto& [r, c, v] : triples)
    out.push_back(ordered_json::array({r, c, v}));
  return out;
}

ordered_json hopf_json(const HopfAlgebraData& h) {
  h.check_shapes();
  ordered_json j;
  j["dim"] = h.dim();
  j["basis"] = h.basis;
  j["mult"] = entries_json(h.mult);
  j["unit"] = entries_json(h.unit);
  j["delta"] = entries_json(h.co.delta);
  j["counit"] = entries_json(h.co.counit);
  j["antipode"] = entries_json(h.antipode);
  return j;
}

ordered_json brace_json(const HopfBraceData& b) {
  b.check_shapes();
  ordered_json j;
  j["dim"] = b.dim();
  j["basis"] = b.basis;
  j["mult"] = entries_json(b.mult);
  j["unit"] = entries_json(b.unit);
  j["delta"] = entries_json(b.co.delta);
  j["counit"] = entries_json(b.co.counit);
  j["antipode"] = entries_json(b.antipode);
  j["mult_circ"] = entries_json(b.mult_circ);
  j["unit_circ"] = entries_json(b.unit_circ);
  j["antipode_circ"] = entries_json(b.antipode_circ);
  return j;
}

ordered_json kinds_json(const std::vector<ActionKind>& kinds) {
  ordered_json out = ordered_json::array();
  for (ActionKind k : kinds) out.push_back(to_string(k));
  return out;
}

bool flat_array(const ordered_json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

// dump(2) layout, except arrays of primitives stay on one line so entry
// triples read as [row, col, "coeff"]
void dump_pretty(const ordered_json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    out += "{\n";
    bool first = true;
    for (const auto& item : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + "  " + ordered_json(item.key()).dump() + ": ";
      dump_pretty(item.value(), out, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array() && !flat_array(j)) {
    out += "[\n";
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad + "  ";
      dump_pretty(e, out, indent + 2);
    }
    out += "\n" + pad + "]";
  } else {
    out += j.dump();
  }
}

std::string finish(const ordered_json& j) {
  std::string out;
  dump_pretty(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace

std::string encode(const HopfAlgebraData& h) {
  ordered_json j;
  j["type"] = "hopf_algebra";
  j["field"] = h.field().to_string();
  j.update(hopf_json(h));
  return finish(j);
}

std::string encode(const HopfBraceData& b) {
  ordered_json j;
  j["type"] = "hopf_brace";
  j["field"] = b.field().to_string();
  j.update(brace_json(b));
  return finish(j);
}

std::string encode(const MatchedPair& mp) {
  mp.check_shapes();
  ordered_json j;
  j["type"] = "matched_pair";
  j["field"] = mp.A.field().to_string();
  j["A"] = hopf_json(mp.A);
  j["H"] = hopf_json(mp.H);
  j["left"] = {{"kinds", kinds_json(mp.left.kinds)},
               {"tensor", entries_json(mp.left.tensor)}};
  j["right"] = {{"kinds", kinds_json(mp.right.kinds)},
                {"tensor", entries_json(mp.right.tensor)}};
  return finish(j);
}

std::string encode(const LinearAction& a) {
  a.check_shapes();
  ordered_json j;
  j["type"] = "action";
  j["field"] = a.target.field().to_string();
  j["side"] = to_string(a.side);
  j["kinds"] = kinds_json(a.kinds);
  j["actor"] = hopf_json(a.actor);
  j["target"] = hopf_json(a.target);
  j["tensor"] = entries_json(a.tensor);
  return finish(j);
}

std::string encode(const SparseMatrix& m) {
  ordered_json j;
  j["type"] = "matrix";
  j["field"] = m.field().to_string();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = entries_json(m);
  return finish(j);
}

std::string encode(const BraceMorphism& f) {
  f.check_shapes();
  ordered_json j;
  j["type"] = "brace_morphism";
  j["field"] = f.source.field().to_string();
  j["source"] = brace_json(f.source);
  j["target"] = brace_json(f.target);
  j["matrix"] = entries_json(f.matrix);
  return finish(j);
}

namespace {

void require_keys(const ordered_json& j, const std::set<std::string>& allowed,
                  const std::string& context) {
  if (!j.is_object())
    throw ValueError(context + " is not a JSON object");
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key()))
      throw ValueError("unknown key '" + item.key() + "' in " + context);
  }
  for (const auto& key : allowed)
    if (!j.contains(key))
      throw ValueError("missing key '" + key + "' in " + context);
}

std::size_t read_count(const ordered_json& j, const std::string& context) {
  if (!j.is_number_unsigned())
    throw ValueError(context + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string read_string(const ordered_json& j, const std::string& context) {
  if (!j.is_string()) throw ValueError(context + " must be a string");
  return j.get<std::string>();
}

SparseMatrix read_entries(const ordered_json& j, const Field& f,
                          std::size_t rows, std::size_t cols,
                          const std::string& context) {
  if (!j.is_array()) throw ValueError(context + " must be an array");
  SparseMatrix m(f, rows, cols);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3)
      throw ValueError(context + " entries must be [row, col, \"coeff\"]");
    const std::size_t r = read_count(e[0], context + " row");
    const std::size_t c = read_count(e[1], context + " col");
    if (r >= rows || c >= cols)
      throw ValueError(context + " entry (" + std::to_string(r) + ", " +
                       std::to_string(c) + ") is outside " +
                       std::to_string(rows) + "x" + std::to_string(cols));
    if (!seen.insert({r, c}).second)
      throw ValueError(context + " repeats entry (" + std::to_string(r) +
                       ", " + std::to_string(c) + ")");
    m.set(r, c, Scalar::parse(f, read_string(e[2], context + " coefficient")));
  }
  return m;
}

std::vector<std::string> read_basis(const ordered_json& j, std::size_t dim,
                                    const std::string& context) {
  if (!j.is_array()) throw ValueError(context + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(read_string(e, context + " label"));
  if (!out.empty() && out.size() != dim)
    throw ValueError(context + " has " + std::to_string(out.size()) +
                     " labels for dimension " + std::to_string(dim));
  return out;
}

HopfAlgebraData read_hopf(const ordered_json& j, const Field& f,
                          const std::string& context,
                          const std::set<std::string>& extra = {}) {
  std::set<std::string> allowed = {"dim",    "basis",  "mult",    "unit",
                                   "delta",  "counit", "antipode"};
  allowed.insert(extra.begin(), extra.end());
  require_keys(j, allowed, context);
  const std::size_t d = read_count(j["dim"], context + ".dim");
  if (d == 0) throw ValueError(context + ".dim must be positive");
  HopfAlgebraData h;
  h.co.dim = d;
  h.basis = read_basis(j["basis"], d, context + ".basis");
  h.mult = read_entries(j["mult"], f, d, d * d, context + ".mult");
  h.unit = read_entries(j["unit"], f, d, 1, context + ".unit");
  h.co.delta = read_entries(j["delta"], f, d * d, d, context + ".delta");
  h.co.counit = read_entries(j["counit"], f, 1, d, context + ".counit");
  h.antipode = read_entries(j["antipode"], f, d, d, context + ".antipode");
  h.check_shapes();
  return h;
}

HopfBraceData read_brace(const ordered_json& j, const Field& f,
                         const std::string& context) {
  HopfAlgebraData dot =
      read_hopf(j, f, context, {"mult_circ", "unit_circ", "antipode_circ"});
  const std::size_t d = dot.dim();
  HopfBraceData b;
  b.co = dot.co;
  b.basis = dot.basis;
  b.mult = dot.mult;
  b.unit = dot.unit;
  b.antipode = dot.antipode;
  b.mult_circ = read_entries(j["mult_circ"], f, d, d * d, context + ".mult_circ");
  b.unit_circ = read_entries(j["unit_circ"], f, d, 1, context + ".unit_circ");
  b.antipode_circ =
      read_entries(j["antipode_circ"], f, d, d, context + ".antipode_circ");
  b.check_shapes();
  return b;
}

std::vector<ActionKind> read_kinds(const ordered_json& j,
                                   const std::string& context) {
  if (!j.is_array()) throw ValueError(context + " must be an array");
  std::vector<ActionKind> out;
  for (const auto& e : j)
    out.push_back(action_kind_from_string(read_string(e, context + " kind")));
  return out;
}

}  // namespace

LoadedObject decode(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValueError(std::string("parse error: ") + e.what());
  }
  if (!j.is_object()) throw ValueError("top level is not a JSON object");
  if (!j.contains("type")) throw ValueError("missing key 'type'");
  if (!j.contains("field")) throw ValueError("missing key 'field'");
  const std::string type = read_string(j["type"], "type");
  const Field f = Field::parse(read_string(j["field"], "field"));

  LoadedObject out;
  if (type == "hopf_algebra") {
    out.type = FileType::hopf_algebra;
    ordered_json payload = j;
    payload.erase("type");
    payload.erase("field");
    out.hopf = read_hopf(payload, f, "hopf_algebra");
  } else if (type == "hopf_brace") {
    out.type = FileType::hopf_brace;
    ordered_json payload = j;
    payload.erase("type");
    payload.erase("field");
    out.brace = read_brace(payload, f, "hopf_brace");
  } else if (type == "matched_pair") {
    out.type = FileType::matched_pair;
    require_keys(j, {"type", "field", "A", "H", "left", "right"},
                 "matched_pair");
    MatchedPair mp;
    mp.A = read_hopf(j["A"], f, "A");
    mp.H = read_hopf(j["H"], f, "H");
    require_keys(j["left"], {"kinds", "tensor"}, "left");
    require_keys(j["right"], {"kinds", "tensor"}, "right");
    const std::size_t da = mp.A.dim(), dh = mp.H.dim();
    mp.left.side = ActionSide::left;
    mp.left.actor = mp.H;
    mp.left.target = mp.A;
    mp.left.kinds = read_kinds(j["left"]["kinds"], "left.kinds");
    mp.left.tensor =
        read_entries(j["left"]["tensor"], f, da, dh * da, "left.tensor");
    mp.right.side = ActionSide::right;
    mp.right.actor = mp.A;
    mp.right.target = mp.H;
    mp.right.kinds = read_kinds(j["right"]["kinds"], "right.kinds");
    mp.right.tensor =
        read_entries(j["right"]["tensor"], f, dh, dh * da, "right.tensor");
    mp.check_shapes();
    out.pair = std::move(mp);
  } else if (type == "action") {
    out.type = FileType::action;
    require_keys(j, {"type", "field", "side", "kinds", "actor", "target",
                     "tensor"},
                 "action");
    LinearAction a;
    a.side = action_side_from_string(read_string(j["side"], "side"));
    a.kinds = read_kinds(j["kinds"], "kinds");
    a.actor = read_hopf(j["actor"], f, "actor");
    a.target = read_hopf(j["target"], f, "target");
    a.tensor = read_entries(j["tensor"], f, a.target.dim(),
                            a.actor.dim() * a.target.dim(), "tensor");
    a.check_shapes();
    out.action = std::move(a);
  } else if (type == "matrix") {
    out.type = FileType::matrix;
    require_keys(j, {"type", "field", "rows", "cols", "entries"}, "matrix");
    const std::size_t rows = read_count(j["rows"], "rows");
    const std::size_t cols = read_count(j["cols"], "cols");
    out.matrix = read_entries(j["entries"], f, rows, cols, "entries");
  } else if (type == "brace_morphism") {
    out.type = FileType::brace_morphism;
    require_keys(j, {"type", "field", "source", "target", "matrix"},
                 "brace_morphism");
    BraceMorphism m;
    m.source = read_brace(j["source"], f, "source");
    m.target = read_brace(j["target"], f, "target");
    m.matrix = read_entries(j["matrix"], f, m.target.dim(), m.source.dim(),
                            "matrix");
    m.check_shapes();
    out.morphism = std::move(m);
  } else {
    throw ValueError("unknown type '" + type + "'");
  }
  return out;
}

LoadedObject load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValueError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode(buf.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValueError("cannot write file: " + path);
  out << text;
  if (!out) throw ValueError("cannot write file: " + path);
}

namespace {

std::string leg_name(const AxiomCheck& c, std::size_t leg, std::size_t idx) {
  if (leg < c.leg_labels.size() && idx < c.leg_labels[leg].size() &&
      !c.leg_labels[leg][idx].empty())
    return c.leg_labels[leg][idx];
  return "e" + std::to_string(idx);
}

std::string witness_text(const AxiomCheck& c) {
  std::string out = "(";
  for (std::size_t l = 0; l < c.witness.size(); ++l) {
    if (l) out += ", ";
    out += leg_name(c, l, c.witness[l]);
  }
  return out + ")";
}

std::string residual_text(const TensorVec& v) {
  std::string out;
  for (const auto& [flat, val] : v.entries) {
    if (!out.empty()) out += "; ";
    const auto idx = unflatten(v.dims, flat);
    out += "(";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(idx[k]);
    }
    out += ")=" + val.to_string();
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render_text(const AxiomReport& r) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    if (c.pass) {
      out += "[PASS] " + c.axiom + "\n";
      continue;
    }
    ++failed;
    out += "[FAIL] " + c.axiom + "  at " + witness_text(c) + "  residual " +
           residual_text(c.residual) + "\n";
  }
  if (failed == 0)
    out += "overall: PASS (" + std::to_string(r.checks.size()) + " checks)\n";
  else
    out += "overall: FAIL (" + std::to_string(failed) + " of " +
           std::to_string(r.checks.size()) + " checks)\n";
  return out;
}

namespace {

ordered_json report_json(const AxiomReport& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json jc;
    jc["axiom"] = c.axiom;
    jc["pass"] = c.pass;
    if (!c.pass) {
      jc["input_dims"] = c.input_dims;
      jc["witness"] = c.witness;
      ordered_json labels = ordered_json::array();
      for (std::size_t l = 0; l < c.witness.size(); ++l)
        labels.push_back(leg_name(c, l, c.witness[l]));
      jc["witness_labels"] = labels;
      ordered_json res = ordered_json::array();
      for (const auto& [flat, val] : c.residual.entries) {
        ordered_json re;
        re["index"] = unflatten(c.residual.dims, flat);
        re["value"] = val.to_string();
        res.push_back(re);
      }
      jc["residual"] = res;
    }
    checks.push_back(jc);
  }
  ordered_json j;
  j["all_passed"] = r.all_passed();
  j["checks"] = checks;
  return j;
}

}  // namespace

std::string render_json(const AxiomReport& r) {
  return report_json(r).dump(2) + "\n";
}

std::string render_hypothesis_text(const HypothesisError& e) {
  return "hypothesis violated: " + e.hypothesis + "\n" + render_text(e.report);
}

std::string render_hypothesis_json(const HypothesisError& e) {
  ordered_json j;
  j["hypothesis"] = e.hypothesis;
  j["report"] = report_json(e.report);
  return j.dump(2) + "\n";
}

}  // namespace hopf
