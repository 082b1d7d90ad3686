/* Acceptance gate: eleven end-to-end criteria, one PASS/FAIL line each,
 * exit 0 iff all pass.  Time bounds are hard limits checked against the
 * monotonic clock; every numeric comparison is exact. */

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopf/category.hpp"
#include "hopf/constructions.hpp"
#include "hopf/io.hpp"
#include "hopf/zoo.hpp"

using namespace hopf;

namespace {

const Field Q = Field::rationals();

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct Gate {
  int failed = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
  }

  // Runs fn and enforces a wall-clock budget on just that piece.
  void timed(double bound_s, const std::string& label,
             const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double dt = seconds_since(t0);
    if (dt >= bound_s) {
      std::ostringstream os;
      os << label << ": took " << dt << "s, bound is " << bound_s << "s";
      notes.push_back(os.str());
    }
  }

  void run(int n, const std::string& desc, double bound_s,
           const std::function<void()>& body) {
    notes.clear();
    auto t0 = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      notes.push_back(std::string("unexpected exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    if (bound_s > 0 && dt >= bound_s) {
      std::ostringstream os;
      os << "took " << dt << "s, bound is " << bound_s << "s";
      notes.push_back(os.str());
    }
    bool ok = notes.empty();
    if (!ok) ++failed;
    std::printf("%s criterion-%d: %s [%.2fs]\n", ok ? "PASS" : "FAIL", n,
                desc.c_str(), dt);
    for (const auto& s : notes) std::printf("       - %s\n", s.c_str());
    std::fflush(stdout);
  }
};

// The dim-18 brace with the twisted multiplication on the dot side.
HopfBraceData c3_c6_brace() {
  MatchedPair mp = c3_c6_matched_pair(Q);
  BraceRecipe r;
  r.id = "cor-11.11";
  r.A_hopf = mp.A;
  r.H_hopf = mp.H;
  r.tri_left = mp.left;
  r.tri_right = mp.right;
  return build_brace(r);
}

// Column c of m is the single basis vector e_row with coefficient 1.
bool single_one_at(const SparseMatrix& m, std::size_t c, std::size_t row) {
  const auto* col = m.column(c);
  return col && col->size() == 1 && col->begin()->first == row &&
         col->begin()->second.is_one();
}

/* Largest-subcoalgebra fixpoint computed from primitives only: shrink
 * D = ker(f - g) by solving [delta * B | -B (x) B] for preimages of
 * D (x) D until the dimension stabilizes. */
Subspace fixpoint_oracle(const CoalgebraData& co, const SparseMatrix& fm,
                         const SparseMatrix& gm) {
  Subspace D = kernel(fm - gm);
  for (std::size_t round = 0; round <= co.dim + 1; ++round) {
    SparseMatrix B = D.basis_columns();
    std::size_t k = D.dim();
    if (k == 0) return D;
    SparseMatrix dB = co.delta * B;
    SparseMatrix W = kron(B, B);
    SparseMatrix stacked(co.field(), dB.rows(), k + k * k);
    dB.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
      stacked.set(r, c, v);
    });
    W.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
      stacked.set(r, k + c, -v);
    });
    Subspace sols = kernel(stacked);
    SparseMatrix U(co.field(), k, sols.dim());
    for (std::size_t j = 0; j < sols.dim(); ++j)
      for (const auto& [pos, v] : sols.basis()[j])
        if (pos < k) U.set(pos, j, v);
    Subspace next = Subspace::col_span(B * U);
    if (next == D) return D;
    D = next;
  }
  return D;
}

// A failing check that names its axiom and points at a basis input.
bool has_witnessed_failure(const AxiomReport& r, std::size_t want_legs = 0) {
  for (const auto& c : r.checks)
    if (!c.pass && !c.axiom.empty() && !c.witness.empty() &&
        !c.residual.entries.empty() &&
        (want_legs == 0 || c.witness.size() == want_legs))
      return true;
  return false;
}

std::string reencode(const LoadedObject& obj) {
  switch (obj.type) {
    case FileType::hopf_algebra: return encode(*obj.hopf);
    case FileType::hopf_brace: return encode(*obj.brace);
    case FileType::matched_pair: return encode(*obj.pair);
    case FileType::action: return encode(*obj.action);
    case FileType::matrix: return encode(*obj.matrix);
    case FileType::brace_morphism: return encode(*obj.morphism);
  }
  return "";
}

}  // namespace

int main() {
  Gate g;
  std::printf("acceptance: 11 criteria\n");

  g.run(1, "every zoo algebra and tensor square verifies as a Hopf algebra",
        0, [&] {
    std::vector<std::pair<std::string, HopfAlgebraData>> zoo;
    for (std::size_t n = 1; n <= 12; ++n)
      zoo.emplace_back("k[C" + std::to_string(n) + "]",
                       cyclic_group_algebra(Q, n));
    zoo.emplace_back("k[S3]", symmetric_group_algebra(Q, 3));
    zoo.emplace_back("H4", sweedler_h4(Q));
    zoo.emplace_back("H4/F5", sweedler_h4(Field::prime(5)));
    zoo.emplace_back("k[C3] (x) k[C6]",
                     tensor_hopf(cyclic_group_algebra(Q, 3),
                                 cyclic_group_algebra(Q, 6)));
    zoo.emplace_back("H4 (x) k[C2]",
                     tensor_hopf(sweedler_h4(Q), cyclic_group_algebra(Q, 2)));
    const Field f5 = Field::prime(5);
    zoo.emplace_back("H4 (x) k[C4]/F5",
                     tensor_hopf(sweedler_h4(f5),
                                 cyclic_group_algebra(f5, 4, "c")));
    for (const auto& [label, h] : zoo)
      g.timed(1.0, label, [&, &label = label, &h = h] {
        g.expect(verify_hopf(h).all_passed(), label + ": verify_hopf failed");
      });
  });

  g.run(2, "C3/C6 actions form a matched pair, checked on all 18 pairs",
        1.0, [&] {
    MatchedPair mp = c3_c6_matched_pair(Q);
    g.expect(verify_matched_pair(mp).all_passed(),
             "verify_matched_pair failed");
    SideConditionData d;
    d.A = &mp.A;
    d.H = &mp.H;
    d.black_right = &mp.right;
    g.expect(verify_side_condition("cond-1.4.6", d).all_passed(),
             "cond-1.4.6 failed");
    // b^(2k+1) <| a^2 = b^(2k+5)
    for (std::size_t k = 0; k <= 2; ++k)
      g.expect(single_one_at(mp.right.tensor, (2 * k + 1) * 3 + 2,
                             (2 * k + 5) % 6),
               "b^" + std::to_string(2 * k + 1) + " <| a^2 is off");
    // closed forms of both actions on every basis pair
    for (std::size_t x = 0; x < 6; ++x)
      for (std::size_t a = 0; a < 3; ++a) {
        std::size_t c = x * 3 + a;
        g.expect(single_one_at(mp.left.tensor, c,
                               x % 2 ? (3 - a) % 3 : a),
                 "b^" + std::to_string(x) + " |> a^" + std::to_string(a));
        g.expect(single_one_at(mp.right.tensor, c,
                               x % 2 ? (x + 2 * a) % 6 : x),
                 "b^" + std::to_string(x) + " <| a^" + std::to_string(a));
      }
  });

  g.run(3, "both dim-18 brace readings of C3/C6 verify with shared unit",
        5.0, [&] {
    MatchedPair mp = c3_c6_matched_pair(Q);
    BraceRecipe r0;
    r0.id = "main0";
    r0.A_brace = make_trivial_brace(mp.A);
    r0.H_hopf = mp.H;
    r0.black_left = mp.left;
    r0.black_right = mp.right;
    BraceRecipe r1;
    r1.id = "cor-11.11";
    r1.A_hopf = mp.A;
    r1.H_hopf = mp.H;
    r1.tri_left = mp.left;
    r1.tri_right = mp.right;
    const char* names[] = {"main0", "cor-11.11"};
    int i = 0;
    for (const auto& r : {r0, r1}) {
      std::string label = names[i++];
      HopfBraceData b = build_brace(r);
      g.expect(b.dim() == 18, label + ": expected dim 18");
      AxiomReport rep = verify_hopf_brace(b);
      g.expect(rep.all_passed(), label + ": brace verification failed");
      const AxiomCheck* compat = rep.find("brace-compatibility");
      g.expect(compat && compat->pass,
               label + ": compatibility identity missing");
      g.expect(b.unit == b.unit_circ, label + ": 1 differs from 1o");
    }
  });

  g.run(4, "the 324x324 braid solves the braid equation, its flip solves QYBE",
        0, [&] {
    HopfBraceData b = c3_c6_brace();
    BraidOperator c = braid_operator(b);
    g.expect(c.matrix.rows() == 324 && c.matrix.cols() == 324,
             "braid matrix must be 324x324");
    g.timed(60.0, "braid equation on the dim-5832 cube", [&] {
      g.expect(check_braid(c.matrix).all_passed(), "braid equation failed");
    });
    g.expect(check_qybe(compose_flip(c.matrix)).all_passed(),
             "c o tau does not solve QYBE");
  });

  g.run(5, "closed-form braid families equal the assembled operators entrywise",
        0, [&] {
    std::vector<std::pair<std::string, HopfAlgebraData>> hs = {
        {"k[C2]", cyclic_group_algebra(Q, 2)},
        {"k[C3]", cyclic_group_algebra(Q, 3)},
        {"k[C6]", cyclic_group_algebra(Q, 6)},
        {"k[S3]", symmetric_group_algebra(Q, 3)}};
    for (const auto& [label, h] : hs) {
      g.expect(specialized_braid("ex1.1-1", h) ==
                   braid_operator(make_trivial_brace(h)).matrix,
               "ex1.1-1 mismatch on " + label);
      g.expect(specialized_braid("ex1.1-2", h) ==
                   braid_operator(make_opposite_brace(h)).matrix,
               "ex1.1-2 mismatch on " + label);
    }

    MatchedPair mp = c3_c6_matched_pair(Q);
    BraceRecipe g1;
    g1.id = "gen-1";
    g1.A_hopf = mp.A;
    g1.H_hopf = mp.H;
    g1.tri_left = mp.left;
    g.expect(specialized_braid("gen-1", mp.A, mp.H, mp.left) ==
                 braid_operator(build_brace(g1)).matrix,
             "gen-1 mismatch on the C3/C6 action");
    BraceRecipe g2;
    g2.id = "gen-2";
    g2.A_hopf = mp.A;
    g2.H_hopf = mp.H;
    g2.black_left = mp.left;
    g.expect(specialized_braid("gen-2", mp.A, mp.H, mp.left) ==
                 braid_operator(build_brace(g2)).matrix,
             "gen-2 mismatch on the C3/C6 action");

    // C2 inverting C3 on the right: x <| g = x^{-1}
    auto c2 = cyclic_group_algebra(Q, 2);
    auto c3 = cyclic_group_algebra(Q, 3);
    LinearAction invert;
    invert.side = ActionSide::right;
    invert.actor = c2;
    invert.target = c3;
    invert.tensor = SparseMatrix(Q, 3, 6);
    for (std::size_t x = 0; x < 3; ++x) {
      invert.tensor.set(x, x * 2 + 0, Scalar::one(Q));
      invert.tensor.set((3 - x) % 3, x * 2 + 1, Scalar::one(Q));
    }
    invert.kinds = {ActionKind::module_bialgebra};
    BraceRecipe g3;
    g3.id = "gen-3";
    g3.A_hopf = c2;
    g3.H_hopf = c3;
    g3.tri_right = invert;
    g.expect(specialized_braid("gen-3", c2, c3, invert) ==
                 braid_operator(build_brace(g3)).matrix,
             "gen-3 mismatch on the inverting action");
  });

  g.run(6, "H4 (x) k[Cn] braces from the two scaling actions; braid refused",
        0, [&] {
    auto one_case = [&](const Field& f, std::size_t n, long om, long la,
                        std::size_t want_dim, const std::string& label) {
      auto acts = cn_actions_on_h4(n, Scalar::of(f, om), Scalar::of(f, la));
      SideConditionData d;
      d.tri_left = &acts.first;
      d.black_left = &acts.second;
      g.expect(verify_side_condition("cond-1.1.1", d).all_passed(),
               label + ": cond-1.1.1 failed");
      BraceRecipe r;
      r.id = "cor-22.22";
      r.A_hopf = acts.first.target;
      r.H_hopf = acts.first.actor;
      r.tri_left = acts.first;
      r.black_left = acts.second;
      HopfBraceData b;
      g.timed(5.0, label, [&] {
        b = build_brace(r);
        g.expect(verify_hopf_brace(b).all_passed(),
                 label + ": brace verification failed");
      });
      g.expect(b.dim() == want_dim,
               label + ": expected dim " + std::to_string(want_dim));
      try {
        braid_operator(b);
        g.expect(false, label + ": braid of a non-cocommutative brace "
                        "must be refused");
      } catch (const HypothesisError& e) {
        g.expect(e.hypothesis == "cocommutativity",
                 label + ": wrong refusal " + e.hypothesis);
      }
    };
    one_case(Q, 2, -1, 1, 8, "Q, n=2, omega=-1, lambda=1");
    one_case(Field::prime(5), 4, 2, 3, 16, "F5, n=4, omega=2, lambda=3");
  });

  g.run(7, "opposite brace: H4 refused with its witness, group algebras pass",
        0, [&] {
    try {
      make_opposite_brace(sweedler_h4(Q));
      g.expect(false, "H4 must be refused");
    } catch (const HypothesisError& e) {
      g.expect(e.hypothesis == "antipode-involutive",
               "wrong refusal " + e.hypothesis);
      const AxiomCheck* bad = e.report.first_failure();
      bool witnessed = bad && bad->witness.size() == 1 &&
                       bad->witness[0] == 2 &&
                       bad->residual.entries.count(2) &&
                       bad->residual.entries.at(2) == Scalar::of(Q, -2);
      g.expect(witnessed, "witness must be S^2(x) - x = -2x at basis x");
    }
    std::vector<std::pair<std::string, HopfAlgebraData>> cocomm;
    for (std::size_t n = 1; n <= 12; ++n)
      cocomm.emplace_back("k[C" + std::to_string(n) + "]",
                          cyclic_group_algebra(Q, n));
    cocomm.emplace_back("k[S3]", symmetric_group_algebra(Q, 3));
    cocomm.emplace_back("k[S4]", symmetric_group_algebra(Q, 4));
    for (const auto& [label, h] : cocomm)
      g.expect(verify_hopf_brace(make_opposite_brace(h)).all_passed(),
               label + ": opposite brace failed");
  });

  g.run(8, "equalizer of id and the squaring map on the trivial k[C3] brace",
        0, [&] {
    HopfBraceData b = make_trivial_brace(cyclic_group_algebra(Q, 3));
    BraceMorphism f, h;
    f.source = b;
    f.target = b;
    f.matrix = SparseMatrix::identity(Q, 3);
    h.source = b;
    h.target = b;
    h.matrix = SparseMatrix(Q, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      h.matrix.set((2 * i) % 3, i, Scalar::one(Q));
    g.expect(is_brace_morphism(h).all_passed(),
             "a |-> a^2 must be a brace morphism");

    EqualizerResult res = equalizer(f, h);
    g.expect(res.subspace.dim() == 1, "equalizer must be one-dimensional");
    SparseMatrix e0(Q, 3, 1);
    e0.set(0, 0, Scalar::one(Q));
    g.expect(subspace_contains(res.subspace, e0),
             "equalizer must contain the unit");
    g.expect(res.subspace == fixpoint_oracle(b.co, f.matrix, h.matrix),
             "equalizer differs from the fixpoint oracle");
    g.expect(verify_hopf_brace(res.brace).all_passed(),
             "restricted brace failed to verify");
    g.expect(f.matrix * res.inclusion == h.matrix * res.inclusion,
             "inclusion does not equalize f and g");
  });

  g.run(9, "product of the trivial k[C2] and k[C3] braces with its projections",
        0, [&] {
    std::vector<HopfBraceData> factors = {
        make_trivial_brace(cyclic_group_algebra(Q, 2)),
        make_trivial_brace(cyclic_group_algebra(Q, 3))};
    ProductResult pr = product_cocommutative(factors);
    g.expect(pr.brace.dim() == 6, "product must have dim 6");
    g.expect(verify_hopf_brace(pr.brace).all_passed(),
             "product brace failed to verify");
    for (std::size_t i = 0; i < 2; ++i) {
      std::string label = "pi_" + std::to_string(i);
      const SparseMatrix& P = pr.projections[i];
      const HopfBraceData& F = factors[i];
      BraceMorphism pi;
      pi.source = pr.brace;
      pi.target = F;
      pi.matrix = P;
      g.expect(is_brace_morphism(pi).all_passed(),
               label + " is not a brace morphism");
      g.expect(P * pr.brace.unit == F.unit, label + " breaks the unit");
      g.expect(P * pr.brace.unit_circ == F.unit_circ,
               label + " breaks the circle unit");
      g.expect(P * pr.brace.mult == F.mult * kron(P, P),
               label + " breaks multiplication");
      g.expect(P * pr.brace.mult_circ == F.mult_circ * kron(P, P),
               label + " breaks the circle multiplication");
      g.expect(P * pr.brace.antipode == F.antipode * P,
               label + " breaks the antipode");
      g.expect(P * pr.brace.antipode_circ == F.antipode_circ * P,
               label + " breaks the circle antipode");
      g.expect(F.co.counit * P == pr.brace.co.counit,
               label + " breaks the counit");
    }
  });

  g.run(10, "single structure-constant mutations fail with named witnesses",
        0, [&] {
    const Scalar one = Scalar::one(Q);
    struct Mutant {
      std::string label;
      std::function<AxiomReport()> report;
      std::size_t want_legs = 0;
    };
    std::vector<Mutant> mutants;
    mutants.push_back({"k[C6] multiplication", [&] {
      auto h = cyclic_group_algebra(Q, 6);
      h.mult.add_to(0, 1 * 6 + 2, one);
      return verify_hopf(h);
    }});
    mutants.push_back({"k[C3] comultiplication", [&] {
      auto h = cyclic_group_algebra(Q, 3);
      h.co.delta.add_to(0, 1, one);
      return verify_hopf(h);
    }});
    mutants.push_back({"k[S3] antipode", [&] {
      auto h = symmetric_group_algebra(Q, 3);
      h.antipode.add_to(0, 1, one);
      return verify_hopf(h);
    }});
    mutants.push_back({"H4 unit", [&] {
      auto h = sweedler_h4(Q);
      h.unit.add_to(1, 0, one);
      return verify_hopf(h);
    }});
    mutants.push_back({"trivial k[C6] brace circle product", [&] {
      auto b = make_trivial_brace(cyclic_group_algebra(Q, 6));
      b.mult_circ.add_to(0, 1 * 6 + 2, one);
      return verify_hopf_brace(b);
    }});
    mutants.push_back({"C3/C6 left action", [&] {
      MatchedPair mp = c3_c6_matched_pair(Q);
      mp.left.tensor.add_to(0, 1 * 3 + 1, one);
      return verify_matched_pair(mp);
    }});
    mutants.push_back({"scaling action on H4", [&] {
      auto acts = cn_actions_on_h4(2, Scalar::of(Q, -1), one);
      acts.first.tensor.add_to(0, 1 * 4 + 2, one);
      return verify_action(acts.first, ActionKind::module_bialgebra);
    }});
    mutants.push_back({"braid matrix", [&] {
      auto c = braid_operator(
          make_trivial_brace(symmetric_group_algebra(Q, 3)));
      c.matrix.add_to(0, 7, one);
      return check_braid(c.matrix);
    }, 3});
    mutants.push_back({"product projection", [&] {
      std::vector<HopfBraceData> factors = {
          make_trivial_brace(cyclic_group_algebra(Q, 2)),
          make_trivial_brace(cyclic_group_algebra(Q, 3))};
      ProductResult pr = product_cocommutative(factors);
      BraceMorphism pi;
      pi.source = pr.brace;
      pi.target = factors[0];
      pi.matrix = pr.projections[0];
      pi.matrix.add_to(1, 2, one);
      return is_brace_morphism(pi);
    }});
    for (const auto& m : mutants) {
      AxiomReport r = m.report();
      g.expect(!r.all_passed(), m.label + ": mutation went undetected");
      g.expect(has_witnessed_failure(r, m.want_legs),
               m.label + ": no failing check names an axiom with a witness");
    }
    // the antipode mutation must be pinned on an antipode law
    auto s3 = symmetric_group_algebra(Q, 3);
    s3.antipode.add_to(0, 1, one);
    AxiomReport r = verify_hopf(s3);
    const AxiomCheck* ff = r.first_failure();
    g.expect(ff && ff->axiom.rfind("antipode", 0) == 0,
             "antipode mutation must fail an antipode law first");
  });

  g.run(11, "byte-exact serialization round trips", 0, [&] {
    auto roundtrip = [&](const std::string& label, const std::string& s1) {
      try {
        std::string s2 = reencode(decode(s1));
        g.expect(s1 == s2, label + ": round trip not byte-exact");
      } catch (const std::exception& e) {
        g.expect(false, label + ": " + e.what());
      }
    };
    for (std::size_t n = 1; n <= 12; ++n)
      roundtrip("k[C" + std::to_string(n) + "]",
                encode(cyclic_group_algebra(Q, n)));
    roundtrip("k[S3]", encode(symmetric_group_algebra(Q, 3)));
    roundtrip("k[S4]", encode(symmetric_group_algebra(Q, 4)));
    roundtrip("H4", encode(sweedler_h4(Q)));
    roundtrip("H4/F5", encode(sweedler_h4(Field::prime(5))));
    roundtrip("C3/C6 matched pair", encode(c3_c6_matched_pair(Q)));
    auto acts_q = cn_actions_on_h4(2, Scalar::of(Q, -1), Scalar::one(Q));
    roundtrip("scaling |> on H4", encode(acts_q.first));
    roundtrip("scaling |>> on H4", encode(acts_q.second));
    const Field f5 = Field::prime(5);
    auto acts_5 = cn_actions_on_h4(4, Scalar::of(f5, 2), Scalar::of(f5, 3));
    roundtrip("scaling |> on H4/F5", encode(acts_5.first));
    roundtrip("scaling |>> on H4/F5", encode(acts_5.second));
    roundtrip("324x324 braid matrix",
              encode(braid_operator(c3_c6_brace()).matrix));
  });

  std::printf("acceptance: %d/11 passed\n", 11 - g.failed);
  return g.failed == 0 ? 0 : 1;
}
