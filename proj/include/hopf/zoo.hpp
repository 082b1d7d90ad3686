#pragma once

#include <utility>

#include "hopf/action.hpp"

namespace hopf {

/* Finite group by its multiplication table: table[i][j] is the index of
 * the product of elements i and j. */
struct CayleyTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;

  std::size_t order() const { return table.size(); }
  // Latin square, associativity, identity and inverse laws.
  void validate() const;
};

CayleyTable cyclic_table(std::size_t n, const std::string& letter = "a");
// All permutations of n points, labelled in cycle notation (n <= 5).
CayleyTable symmetric_table(std::size_t n);

/* Group algebra k[G]: every group element is group-like, S inverts. */
HopfAlgebraData group_algebra(const Field& f, const CayleyTable& t);
HopfAlgebraData cyclic_group_algebra(const Field& f, std::size_t n,
                                     const std::string& letter = "a");
HopfAlgebraData symmetric_group_algebra(const Field& f, std::size_t n);

/* Basis {1, g, x, gx}: g^2 = 1, x^2 = 0, xg = -gx, Delta(g) = g (x) g,
 * Delta(x) = x (x) 1 + g (x) x, S(g) = g, S(x) = -gx.  Needs
 * characteristic != 2. */
HopfAlgebraData sweedler_h4(const Field& f);

/* k[C_6] acting on k[C_3] and back: b^i |> a^j inverts a^j for odd i;
 * b^i <| a^j shifts odd b^i by two steps per a.  Generators are a, b. */
MatchedPair c3_c6_matched_pair(const Field& f);

/* The two k[C_n] actions on H4 fixing g and scaling x by a chosen n-th
 * root of unity: (c^i |> x = omega^i x, c^i |>> x = lambda^i x).
 * Rejects omega or lambda whose n-th power is not 1. */
std::pair<LinearAction, LinearAction> cn_actions_on_h4(std::size_t n,
                                                       const Scalar& omega,
                                                       const Scalar& lambda);

}  // namespace hopf
