#pragma once

// Sign facts about a T-TP matrix for the star on 4 vertices with center 1:
// the 2x2 minors feeding Sylvester's identity for the adjugate entries
// (3,2), (4,2), (4,3) have fixed signs, the identity reproduces the 3x3
// minor, and those entries together with their transposes are positive.

#include <string>
#include <vector>

#include "ttp/exact_matrix.hpp"

namespace star4 {

struct Expansion {
  int row, col;               // adjugate entry
  ttp::IndexList alpha, beta;  // reordered 3x3 minor, adj(row,col) = -det A[alpha;beta]
};

inline const std::vector<Expansion>& expansions() {
  static const std::vector<Expansion> e{
      {3, 2, {3, 1, 4}, {2, 1, 4}},
      {4, 2, {4, 1, 3}, {2, 1, 3}},
      {4, 3, {4, 1, 2}, {3, 1, 2}},
  };
  return e;
}

// Empty on success, otherwise a description of the first failed fact.
inline std::string check_minor_signs(const ttp::ExactMatrix& a) {
  using ttp::minor;
  const ttp::ExactMatrix adj = ttp::adjugate(a);
  for (const auto& x : expansions()) {
    const auto tag = "entry (" + std::to_string(x.row) + "," + std::to_string(x.col) + "): ";
    const auto a1 = x.alpha.drop_last(), b1 = x.beta.drop_last();
    const auto a2 = x.alpha.drop_first(), b2 = x.beta.drop_first();
    if (minor(a, a1, b1) >= 0) return tag + "det A[" + to_string(a1) + ";" + to_string(b1) + "] not negative";
    if (minor(a, a2, b2) <= 0) return tag + "det A[" + to_string(a2) + ";" + to_string(b2) + "] not positive";
    if (minor(a, a1, b2) <= 0) return tag + "det A[" + to_string(a1) + ";" + to_string(b2) + "] not positive";
    if (minor(a, a2, b1) <= 0) return tag + "det A[" + to_string(a2) + ";" + to_string(b1) + "] not positive";
    if (a(0, 0) <= 0) return tag + "a11 not positive";
    const ttp::Rational full = minor(a, x.alpha, x.beta);
    if (ttp::sylvester_rhs(a, x.alpha, x.beta) != full) return tag + "Sylvester expansion differs";
    if (adj(x.row - 1, x.col - 1) != -full) return tag + "cofactor does not match the reordered minor";
    if (adj(x.row - 1, x.col - 1) <= 0) return tag + "not positive";
    if (adj(x.col - 1, x.row - 1) <= 0) return "transposed " + tag + "not positive";
  }
  return {};
}

}  // namespace star4
