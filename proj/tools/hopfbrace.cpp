#include <iostream>

#include <CLI11.hpp>

#include "hopf/constructions.hpp"
#include "hopf/io.hpp"
#include "hopf/zoo.hpp"

namespace {

using namespace hopf;

/* Exit codes: 0 every check passed, 1 an axiom or hypothesis failed,
 * 2 bad input (unreadable file, wrong object type, parse or shape error,
 * usage error). */

struct Session {
  std::string field_text;       // empty = take the field from the files
  std::string report = "text";
  int exit_code = 0;

  std::optional<Field> wanted_field() const {
    if (field_text.empty()) return std::nullopt;
    std::string t = field_text;
    if (t == "q" || t == "Q") return Field::rationals();
    if (t.rfind("fp:", 0) == 0) return Field::parse("Fp:" + t.substr(3));
    return Field::parse(t);  // accept the file spelling too
  }
};

Field construction_field(const Session& s) {
  auto f = s.wanted_field();
  return f ? *f : Field::rationals();
}

void check_field(const Session& s, const LoadedObject& o,
                 const std::string& path) {
  auto want = s.wanted_field();
  if (want && o.field() != *want)
    throw ValueError("file " + path + " is over " + o.field().to_string() +
                     ", not --field " + want->to_string());
}

LoadedObject load_as(const Session& s, const std::string& path, FileType t) {
  LoadedObject o = load_file(path);
  if (o.type != t)
    throw ValueError("expected a " + to_string(t) + " file, got " +
                     to_string(o.type) + ": " + path);
  check_field(s, o, path);
  return o;
}

void emit_report(Session& s, const AxiomReport& r) {
  std::cout << (s.report == "json" ? render_json(r) : render_text(r));
  if (!r.all_passed()) s.exit_code = 1;
}

void write_out(const std::string& path, const std::string& text) {
  write_file(path, text);
  std::cout << "wrote " << path << "\n";
}

// Rows of a d^2 x d^2 operator come from a d-dimensional square.
std::size_t braid_side(const SparseMatrix& m) {
  if (m.rows() != m.cols())
    throw ValueError("operator matrix must be square");
  std::size_t d = 0;
  while (d * d < m.rows()) ++d;
  if (d * d != m.rows())
    throw ValueError("operator matrix size " + std::to_string(m.rows()) +
                     " is not a square d^2");
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  Session s;
  CLI::App app{
      "exact construction and verification of Hopf braces, matched pairs "
      "and braid operators given by structure constants"};
  app.require_subcommand(1);
  app.add_option("--field", s.field_text,
                 "ground field: q or fp:<prime> (checked against files)");
  app.add_option("--report", s.report, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");

  // verify
  auto* verify = app.add_subcommand("verify", "run axiom checks on a file");
  verify->require_subcommand(1);
  struct {
    std::string file, kind, id;
    std::vector<std::string> files;
  } v;
  auto* v_hopf = verify->add_subcommand("hopf", "Hopf algebra axioms");
  v_hopf->add_option("file", v.file)->required();
  v_hopf->callback([&] {
    emit_report(s, verify_hopf(*load_as(s, v.file, FileType::hopf_algebra).hopf));
  });
  auto* v_brace = verify->add_subcommand("brace", "Hopf brace axioms");
  v_brace->add_option("file", v.file)->required();
  v_brace->callback([&] {
    emit_report(s, verify_hopf_brace(*load_as(s, v.file, FileType::hopf_brace).brace));
  });
  auto* v_mp = verify->add_subcommand("matched-pair",
                                      "module laws and the mp compatibilities");
  v_mp->add_option("file", v.file)->required();
  v_mp->callback([&] {
    emit_report(s, verify_matched_pair(*load_as(s, v.file, FileType::matched_pair).pair));
  });
  auto* v_act = verify->add_subcommand("action", "module laws of one action");
  v_act->add_option("file", v.file)->required();
  v_act->add_option("--kind", v.kind,
                    "module-algebra, module-coalgebra or module-bialgebra")
      ->required();
  v_act->callback([&] {
    emit_report(s, verify_action(*load_as(s, v.file, FileType::action).action,
                                 action_kind_from_string(v.kind)));
  });
  auto* v_cond = verify->add_subcommand("condition", "one side condition");
  v_cond->add_option("id", v.id, "condition id")->required();
  v_cond->add_option("files", v.files, "slot files in the id's order")
      ->required();
  v_cond->callback([&] {
    std::vector<LoadedObject> held;
    SideConditionData data;
    auto want = [&](std::size_t k, FileType t) {
      if (v.files.size() <= k)
        throw ValueError("condition " + v.id + " needs more slot files");
      held.push_back(load_as(s, v.files[k], t));
      return held.size() - 1;
    };
    std::size_t used = 0;
    if (v.id == "cond-1.4.6") {
      data.A = &*held[want(0, FileType::hopf_algebra)].hopf;
      data.H = &*held[want(1, FileType::hopf_algebra)].hopf;
      data.black_right = &*held[want(2, FileType::action)].action;
      used = 3;
    } else if (v.id == "cond-2.1") {
      data.H_brace = &*held[want(0, FileType::hopf_brace)].brace;
      data.tri_left = &*held[want(1, FileType::action)].action;
      data.black_left = &*held[want(2, FileType::action)].action;
      used = 3;
    } else if (v.id == "cond-2.2") {
      data.H_brace = &*held[want(0, FileType::hopf_brace)].brace;
      data.tri_right = &*held[want(1, FileType::action)].action;
      data.black_left = &*held[want(2, FileType::action)].action;
      used = 3;
    } else if (v.id == "cond-1.1.1") {
      data.tri_left = &*held[want(0, FileType::action)].action;
      data.black_left = &*held[want(1, FileType::action)].action;
      used = 2;
    } else if (v.id == "cond-2.2.2") {
      data.H = &*held[want(0, FileType::hopf_algebra)].hopf;
      data.tri_right = &*held[want(1, FileType::action)].action;
      data.black_left = &*held[want(2, FileType::action)].action;
      used = 3;
    } else if (v.id == "cond-smash1") {
      data.tri_left = &*held[want(0, FileType::action)].action;
      used = 1;
    } else {
      throw ValueError("unknown condition id '" + v.id + "'");
    }
    if (v.files.size() != used)
      throw ValueError("condition " + v.id + " takes exactly " +
                       std::to_string(used) + " slot files");
    emit_report(s, verify_side_condition(v.id, data));
  });

  // build
  auto* build = app.add_subcommand("build", "construct and verify");
  build->require_subcommand(1);
  struct {
    std::string file, out, recipe;
    std::vector<std::string> files;
  } b;
  auto* b_bic = build->add_subcommand("bicrossed",
                                      "bicrossed product of a matched pair");
  b_bic->add_option("mp-file", b.file)->required();
  b_bic->add_option("-o,--out", b.out)->required();
  b_bic->callback([&] {
    auto mp = load_as(s, b.file, FileType::matched_pair);
    HopfAlgebraData h = bicrossed_product(*mp.pair);
    std::cout << "built hopf_algebra: dim " << h.dim() << " over "
              << h.field().to_string() << "\n";
    write_out(b.out, encode(h));
  });
  auto* b_smash = build->add_subcommand("smash",
                                        "smash product along a left action");
  b_smash->add_option("action-file", b.file)->required();
  b_smash->add_option("-o,--out", b.out)->required();
  b_smash->callback([&] {
    auto act = load_as(s, b.file, FileType::action);
    HopfAlgebraData h = smash_product(*act.action);
    std::cout << "built hopf_algebra: dim " << h.dim() << " over "
              << h.field().to_string() << "\n";
    write_out(b.out, encode(h));
  });
  auto* b_brace = build->add_subcommand("brace",
                                        "Hopf brace from a named recipe");
  b_brace->add_option("--recipe", b.recipe, "recipe id")->required();
  b_brace->add_option("files", b.files, "ingredient files in slot order")
      ->required();
  b_brace->add_option("-o,--out", b.out)->required();
  b_brace->callback([&] {
    BraceRecipe r;
    r.id = b.recipe;
    std::vector<LoadedObject> held;
    for (const auto& path : b.files) {
      held.push_back(load_file(path));
      check_field(s, held.back(), path);
    }
    auto bad = [&](const std::string& slots) {
      return ValueError("recipe " + b.recipe + " takes " + slots);
    };
    auto hopf_at = [&](std::size_t k) {
      if (held[k].type != FileType::hopf_algebra)
        throw ValueError("ingredient " + b.files[k] +
                         " must be a hopf_algebra file");
      return *held[k].hopf;
    };
    auto brace_at = [&](std::size_t k) {
      if (held[k].type != FileType::hopf_brace)
        throw ValueError("ingredient " + b.files[k] +
                         " must be a hopf_brace file");
      return *held[k].brace;
    };
    auto action_at = [&](std::size_t k) {
      if (held[k].type != FileType::action)
        throw ValueError("ingredient " + b.files[k] +
                         " must be an action file");
      return *held[k].action;
    };
    const bool unpack = held.size() == 1 &&
                        held[0].type == FileType::matched_pair &&
                        (b.recipe == "main0" || b.recipe == "cor-11.11");
    if (unpack) {
      const MatchedPair& mp = *held[0].pair;
      if (b.recipe == "main0") {
        r.A_brace = make_trivial_brace(mp.A);
        r.H_hopf = mp.H;
        r.black_left = mp.left;
        r.black_right = mp.right;
      } else {
        r.A_hopf = mp.A;
        r.H_hopf = mp.H;
        r.tri_left = mp.left;
        r.tri_right = mp.right;
      }
    } else if (b.recipe == "main0") {
      if (held.size() != 4)
        throw bad("A-brace, H, black-left, black-right (or one matched pair)");
      r.A_brace = brace_at(0);
      r.H_hopf = hopf_at(1);
      r.black_left = action_at(2);
      r.black_right = action_at(3);
    } else if (b.recipe == "cor-11.00") {
      if (held.size() != 3) throw bad("A-brace, H, black-left");
      r.A_brace = brace_at(0);
      r.H_hopf = hopf_at(1);
      r.black_left = action_at(2);
    } else if (b.recipe == "cor-22.00") {
      if (held.size() != 3) throw bad("A-brace, H, black-right");
      r.A_brace = brace_at(0);
      r.H_hopf = hopf_at(1);
      r.black_right = action_at(2);
    } else if (b.recipe == "main") {
      if (held.size() != 5)
        throw bad("A, H-brace, tri-left, tri-right, black-left");
      r.A_hopf = hopf_at(0);
      r.H_brace = brace_at(1);
      r.tri_left = action_at(2);
      r.tri_right = action_at(3);
      r.black_left = action_at(4);
    } else if (b.recipe == "cor-11.11") {
      if (held.size() != 4)
        throw bad("A, H, tri-left, tri-right (or one matched pair)");
      r.A_hopf = hopf_at(0);
      r.H_hopf = hopf_at(1);
      r.tri_left = action_at(2);
      r.tri_right = action_at(3);
    } else if (b.recipe == "cor-22.22") {
      if (held.size() != 4) throw bad("A, H, tri-left, black-left");
      r.A_hopf = hopf_at(0);
      r.H_hopf = hopf_at(1);
      r.tri_left = action_at(2);
      r.black_left = action_at(3);
    } else if (b.recipe == "cor-33.33") {
      if (held.size() != 4) throw bad("A, H, black-left, tri-right");
      r.A_hopf = hopf_at(0);
      r.H_hopf = hopf_at(1);
      r.black_left = action_at(2);
      r.tri_right = action_at(3);
    } else if (b.recipe == "gen-1") {
      if (held.size() != 3) throw bad("A, H, tri-left");
      r.A_hopf = hopf_at(0);
      r.H_hopf = hopf_at(1);
      r.tri_left = action_at(2);
    } else if (b.recipe == "gen-2") {
      if (held.size() != 3) throw bad("A, H, black-left");
      r.A_hopf = hopf_at(0);
      r.H_hopf = hopf_at(1);
      r.black_left = action_at(2);
    } else if (b.recipe == "gen-3") {
      if (held.size() != 3) throw bad("A, H, tri-right");
      r.A_hopf = hopf_at(0);
      r.H_hopf = hopf_at(1);
      r.tri_right = action_at(2);
    } else {
      throw ValueError("unknown recipe id '" + b.recipe + "'");
    }
    HopfBraceData result = build_brace(r);
    std::cout << "built hopf_brace: dim " << result.dim() << " over "
              << result.field().to_string() << "\n";
    write_out(b.out, encode(result));
  });

  // braid / qybe
  auto* braid = app.add_subcommand("braid", "braid operators");
  braid->require_subcommand(1);
  struct {
    std::string file, out;
  } br;
  auto* br_make = braid->add_subcommand("make",
                                        "braid operator of a cocommutative brace");
  br_make->add_option("brace-file", br.file)->required();
  br_make->add_option("-o,--out", br.out)->required();
  br_make->callback([&] {
    auto o = load_as(s, br.file, FileType::hopf_brace);
    BraidOperator c = braid_operator(*o.brace);
    std::cout << "braid operator: " << c.matrix.rows() << "x"
              << c.matrix.cols() << "\n";
    write_out(br.out, encode(c.matrix));
  });
  auto* br_check = braid->add_subcommand("check", "braid equation on d^3");
  br_check->add_option("matrix-file", br.file)->required();
  br_check->callback([&] {
    auto o = load_as(s, br.file, FileType::matrix);
    braid_side(*o.matrix);
    emit_report(s, check_braid(*o.matrix));
  });
  auto* qybe = app.add_subcommand("qybe", "quantum Yang-Baxter equation");
  qybe->require_subcommand(1);
  auto* q_check = qybe->add_subcommand("check", "QYBE on d^3");
  q_check->add_option("matrix-file", br.file)->required();
  q_check->callback([&] {
    auto o = load_as(s, br.file, FileType::matrix);
    braid_side(*o.matrix);
    emit_report(s, check_qybe(*o.matrix));
  });

  // cat
  auto* cat = app.add_subcommand("cat", "categorical limits");
  cat->require_subcommand(1);
  struct {
    std::string f, g, out;
    std::vector<std::string> files;
  } c;
  auto* c_eq = cat->add_subcommand("equalize",
                                   "equalizer of two brace morphisms");
  c_eq->add_option("f", c.f)->required();
  c_eq->add_option("g", c.g)->required();
  c_eq->add_option("-o,--out", c.out)->required();
  c_eq->callback([&] {
    auto fo = load_as(s, c.f, FileType::brace_morphism);
    auto go = load_as(s, c.g, FileType::brace_morphism);
    EqualizerResult r = equalizer(*fo.morphism, *go.morphism);
    std::cout << "equalizer: dim " << r.brace.dim() << " inside dim "
              << fo.morphism->source.dim() << "\n";
    write_out(c.out, encode(r.brace));
  });
  auto* c_prod = cat->add_subcommand("product",
                                     "product of cocommutative braces");
  c_prod->add_option("brace-files", c.files)->required();
  c_prod->add_option("-o,--out", c.out)->required();
  c_prod->callback([&] {
    std::vector<HopfBraceData> factors;
    for (const auto& path : c.files)
      factors.push_back(*load_as(s, path, FileType::hopf_brace).brace);
    ProductResult r = product_cocommutative(factors);
    std::cout << "product: dim " << r.brace.dim() << " of " << factors.size()
              << " factors\n";
    write_out(c.out, encode(r.brace));
  });

  // zoo
  auto* zoo = app.add_subcommand("zoo", "construct a stock object");
  struct {
    std::string name, omega = "1", lambda = "1", out;
    std::size_t n = 0;
  } z;
  zoo->add_option("name", z.name,
                  "cyclic | symmetric | h4 | c3c6 | h4-cn-tri | h4-cn-black")
      ->required();
  zoo->add_option("-n", z.n, "group size for cyclic/symmetric/h4-cn-*");
  zoo->add_option("--omega", z.omega, "n-th root of unity for h4-cn-*");
  zoo->add_option("--lambda", z.lambda, "n-th root of unity for h4-cn-*");
  zoo->add_option("-o,--out", z.out)->required();
  zoo->callback([&] {
    const Field f = construction_field(s);
    auto need_n = [&] {
      if (z.n == 0)
        throw ValueError("zoo " + z.name + " needs -n");
    };
    if (z.name == "cyclic") {
      need_n();
      write_out(z.out, encode(cyclic_group_algebra(f, z.n)));
    } else if (z.name == "symmetric") {
      need_n();
      write_out(z.out, encode(symmetric_group_algebra(f, z.n)));
    } else if (z.name == "h4") {
      write_out(z.out, encode(sweedler_h4(f)));
    } else if (z.name == "c3c6") {
      write_out(z.out, encode(c3_c6_matched_pair(f)));
    } else if (z.name == "h4-cn-tri" || z.name == "h4-cn-black") {
      need_n();
      auto acts = cn_actions_on_h4(z.n, Scalar::parse(f, z.omega),
                                   Scalar::parse(f, z.lambda));
      write_out(z.out, encode(z.name == "h4-cn-tri" ? acts.first
                                                    : acts.second));
    } else {
      throw ValueError("unknown zoo name '" + z.name + "'");
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const HypothesisError& e) {
    std::cout << (s.report == "json" ? render_hypothesis_json(e)
                                     : render_hypothesis_text(e));
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return s.exit_code;
}
