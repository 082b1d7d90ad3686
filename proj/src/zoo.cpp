#include "hopf/zoo.hpp"

#include <algorithm>
#include <numeric>

namespace hopf {

namespace {

std::string power_label(const std::string& letter, std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return letter;
  return letter + "^" + std::to_string(k);
}

std::string element_name(const CayleyTable& t, std::size_t i) {
  if (i < t.labels.size() && !t.labels[i].empty()) return t.labels[i];
  return "#" + std::to_string(i);
}

}  // namespace

void CayleyTable::validate() const {
  const std::size_t n = order();
  if (n == 0) throw ValueError("Cayley table is empty");
  if (labels.size() != n)
    throw ValueError("Cayley table has " + std::to_string(labels.size()) +
                     " labels for " + std::to_string(n) + " elements");
  if (identity >= n) throw ValueError("Cayley table identity index out of range");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw ValueError("Cayley table row " + element_name(*this, i) +
                       " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] >= n)
        throw ValueError("Cayley table entry at (" + element_name(*this, i) +
                         ", " + element_name(*this, j) + ") is out of range");
  }
  // Rows and columns are permutations (cancellation).
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (row[table[i][j]])
        throw ValueError("Cayley table row " + element_name(*this, i) +
                         " repeats " + element_name(*this, table[i][j]));
      row[table[i][j]] = true;
      if (col[table[j][i]])
        throw ValueError("Cayley table column " + element_name(*this, i) +
                         " repeats " + element_name(*this, table[j][i]));
      col[table[j][i]] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (table[identity][j] != j || table[j][identity] != j)
      throw ValueError("Cayley table identity law fails at " +
                       element_name(*this, j));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw ValueError("Cayley table is not associative at (" +
                           element_name(*this, i) + ", " +
                           element_name(*this, j) + ", " +
                           element_name(*this, k) + ")");
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j)
      found = table[i][j] == identity && table[j][i] == identity;
    if (!found)
      throw ValueError("Cayley table element " + element_name(*this, i) +
                       " has no inverse");
  }
}

CayleyTable cyclic_table(std::size_t n, const std::string& letter) {
  if (n == 0) throw ValueError("cyclic group needs n >= 1");
  CayleyTable t;
  t.identity = 0;
  t.labels.reserve(n);
  for (std::size_t k = 0; k < n; ++k) t.labels.push_back(power_label(letter, k));
  t.table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.table[i][j] = (i + j) % n;
  return t;
}

namespace {

// Cycle notation on points 1..n, cycles anchored and ordered by their
// smallest point; the identity is "e".
std::string cycle_label(const std::vector<std::size_t>& p) {
  const std::size_t n = p.size();
  std::string out;
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || p[s] == s) continue;
    out += "(";
    std::size_t k = s;
    do {
      seen[k] = true;
      out += std::to_string(k + 1);
      k = p[k];
    } while (k != s);
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

CayleyTable symmetric_table(std::size_t n) {
  if (n == 0 || n > 5)
    throw ValueError("symmetric table supported for 1 <= n <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  CayleyTable t;
  t.identity = 0;  // identity is lexicographically first
  for (const auto& q : perms) t.labels.push_back(cycle_label(q));
  t.table.assign(perms.size(), std::vector<std::size_t>(perms.size(), 0));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<std::size_t> comp(n);  // apply j first, then i
      for (std::size_t k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
      t.table[i][j] = index.at(comp);
    }
  return t;
}

HopfAlgebraData group_algebra(const Field& f, const CayleyTable& t) {
  t.validate();
  const std::size_t n = t.order();
  const Scalar one = Scalar::one(f);

  HopfAlgebraData h;
  h.co.dim = n;
  h.co.delta = SparseMatrix(f, n * n, n);
  h.co.counit = SparseMatrix(f, 1, n);
  h.mult = SparseMatrix(f, n, n * n);
  h.unit = SparseMatrix(f, n, 1);
  h.antipode = SparseMatrix(f, n, n);
  h.basis = t.labels;

  for (std::size_t i = 0; i < n; ++i) {
    h.co.delta.set(i * n + i, i, one);  // group-likes
    h.co.counit.set(0, i, one);
    for (std::size_t j = 0; j < n; ++j) {
      h.mult.set(t.table[i][j], i * n + j, one);
      if (t.table[i][j] == t.identity && t.table[j][i] == t.identity)
        h.antipode.set(j, i, one);
    }
  }
  h.unit.set(t.identity, 0, one);
  h.check_shapes();
  return h;
}

HopfAlgebraData cyclic_group_algebra(const Field& f, std::size_t n,
                                     const std::string& letter) {
  return group_algebra(f, cyclic_table(n, letter));
}

HopfAlgebraData symmetric_group_algebra(const Field& f, std::size_t n) {
  return group_algebra(f, symmetric_table(n));
}

HopfAlgebraData sweedler_h4(const Field& f) {
  if (f.characteristic() == 2)
    throw ValueError("sweedler-h4 needs characteristic != 2");
  const Scalar one = Scalar::one(f);
  const Scalar minus = -one;

  HopfAlgebraData h;
  h.co.dim = 4;
  h.basis = {"1", "g", "x", "gx"};
  h.co.delta = SparseMatrix(f, 16, 4);
  h.co.counit = SparseMatrix(f, 1, 4);
  h.mult = SparseMatrix(f, 4, 16);
  h.unit = SparseMatrix(f, 4, 1);
  h.antipode = SparseMatrix(f, 4, 4);

  h.co.delta.set(0 * 4 + 0, 0, one);   // 1 (x) 1
  h.co.delta.set(1 * 4 + 1, 1, one);   // g (x) g
  h.co.delta.set(2 * 4 + 0, 2, one);   // x (x) 1
  h.co.delta.set(1 * 4 + 2, 2, one);   // g (x) x
  h.co.delta.set(3 * 4 + 1, 3, one);   // gx (x) g
  h.co.delta.set(0 * 4 + 3, 3, one);   // 1 (x) gx
  h.co.counit.set(0, 0, one);
  h.co.counit.set(0, 1, one);

  // Row of the product of basis elements i, j; coefficient +-1, 0 when
  // the product vanishes (x^2 = 0 and its multiples).
  for (std::size_t j = 0; j < 4; ++j) {
    h.mult.set(j, 0 * 4 + j, one);
    if (j != 0) h.mult.set(j, j * 4 + 0, one);
  }
  h.mult.set(0, 1 * 4 + 1, one);    // g g = 1
  h.mult.set(3, 1 * 4 + 2, one);    // g x = gx
  h.mult.set(2, 1 * 4 + 3, one);    // g gx = x
  h.mult.set(3, 2 * 4 + 1, minus);  // x g = -gx
  h.mult.set(2, 3 * 4 + 1, minus);  // gx g = -x

  h.unit.set(0, 0, one);

  h.antipode.set(0, 0, one);
  h.antipode.set(1, 1, one);
  h.antipode.set(3, 2, minus);  // S(x) = -gx
  h.antipode.set(2, 3, one);    // S(gx) = x

  h.check_shapes();
  return h;
}

MatchedPair c3_c6_matched_pair(const Field& f) {
  MatchedPair mp;
  mp.A = cyclic_group_algebra(f, 3, "a");
  mp.H = cyclic_group_algebra(f, 6, "b");
  const Scalar one = Scalar::one(f);

  // b^i |> a^j fixes a^j for even i and inverts it for odd i.
  SparseMatrix tri(f, 3, 18);
  // b^i <| a^j fixes b^i for even i; odd b^i steps by 2j.
  SparseMatrix trc(f, 6, 18);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t col = i * 3 + j;
      const bool odd = i % 2 == 1;
      std::size_t aj = j;
      if (odd && j == 1) aj = 2;
      if (odd && j == 2) aj = 1;
      tri.set(aj, col, one);
      std::size_t bi = i;
      if (odd && j == 1) bi = (i + 2) % 6;
      if (odd && j == 2) bi = (i + 4) % 6;
      trc.set(bi, col, one);
    }

  mp.left.side = ActionSide::left;
  mp.left.actor = mp.H;
  mp.left.target = mp.A;
  mp.left.tensor = tri;
  mp.left.kinds = {ActionKind::module_coalgebra, ActionKind::module_algebra,
                   ActionKind::module_bialgebra};

  mp.right.side = ActionSide::right;
  mp.right.actor = mp.A;
  mp.right.target = mp.H;
  mp.right.tensor = trc;
  mp.right.kinds = {ActionKind::module_coalgebra};

  mp.check_shapes();
  return mp;
}

std::pair<LinearAction, LinearAction> cn_actions_on_h4(std::size_t n,
                                                       const Scalar& omega,
                                                       const Scalar& lambda) {
  if (n == 0) throw ValueError("cyclic group needs n >= 1");
  const Field f = omega.field();
  if (lambda.field() != f)
    throw FieldError("omega and lambda must live in the same field");
  if (omega.pow(n) != Scalar::one(f))
    throw ValueError("omega^" + std::to_string(n) + " != 1");
  if (lambda.pow(n) != Scalar::one(f))
    throw ValueError("lambda^" + std::to_string(n) + " != 1");

  HopfAlgebraData actor = cyclic_group_algebra(f, n, "c");
  HopfAlgebraData target = sweedler_h4(f);

  // c^i fixes 1 and g and scales both x and gx by the root's i-th power.
  auto scale_action = [&](const Scalar& root) {
    LinearAction act;
    act.side = ActionSide::left;
    act.actor = actor;
    act.target = target;
    act.tensor = SparseMatrix(f, 4, 4 * n);
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar w = root.pow(i);
      act.tensor.set(0, i * 4 + 0, Scalar::one(f));
      act.tensor.set(1, i * 4 + 1, Scalar::one(f));
      act.tensor.set(2, i * 4 + 2, w);
      act.tensor.set(3, i * 4 + 3, w);
    }
    act.kinds = {ActionKind::module_coalgebra, ActionKind::module_algebra,
                 ActionKind::module_bialgebra};
    act.check_shapes();
    return act;
  };
  return {scale_action(omega), scale_action(lambda)};
}

}  // namespace hopf
