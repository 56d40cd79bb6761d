#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive and share no code with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ttp/exact_matrix.hpp"
#include "ttp/polynomial.hpp"
#include "ttp/rational.hpp"

namespace oracle {

using ttp::ExactMatrix;
using ttp::Rational;
using Grid = std::vector<std::vector<Rational>>;

inline Grid to_grid(const ExactMatrix& a) {
  Grid g(a.size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) g[i][j] = a(i, j);
  return g;
}

// Laplace expansion along the first row.
inline Rational laplace_det(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Grid sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(std::move(row));
    }
    const Rational term = m[0][c] * laplace_det(sub);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

// det A[rows; cols] with 1-based labels, rows/cols in the given order.
inline Rational laplace_minor(const ExactMatrix& a, const std::vector<int>& rows,
                              const std::vector<int>& cols) {
  Grid g(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) g[i][j] = a(rows[i] - 1, cols[j] - 1);
  return laplace_det(g);
}

inline ExactMatrix cofactor_adjugate(const ExactMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> out(a.size() * a.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<int> rows, cols;
      for (int k = 1; k <= n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      const Rational m = laplace_minor(a, rows, cols);
      out[(i - 1) * n + (j - 1)] = ((i + j) % 2 == 0) ? m : Rational(-m);
    }
  return ExactMatrix(a.size(), std::move(out));
}

// Every k-subset of {1..n}, increasing.
inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  if (k == 0) return {{}};
  if (k > n) return {};
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int q = pos + 1; q < k; ++q) cur[q] = cur[q - 1] + 1;
  }
  return out;
}

// All square minors with increasing index sets positive.
inline bool brute_force_tp(const ExactMatrix& a) {
  const int n = static_cast<int>(a.size());
  for (int k = 1; k <= n; ++k)
    for (const auto& r : subsets(n, k))
      for (const auto& c : subsets(n, k))
        if (laplace_minor(a, r, c) <= 0) return false;
  return true;
}

// Number of spanning trees of K_n found by testing every (n-1)-edge subset
// for acyclicity with a union-find.
inline long long brute_force_tree_count(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  long long count = 0;
  const int m = static_cast<int>(edges.size());
  for (const auto& pick : subsets(m, n - 1)) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (int e : pick) {
      const int a = find(edges[e - 1].first), b = find(edges[e - 1].second);
      if (a == b) {
        acyclic = false;
        break;
      }
      parent[a] = b;
    }
    if (acyclic) ++count;
  }
  return count;
}

// p(A) by Horner's rule with exact matrix products.
inline ExactMatrix evaluate_at_matrix(const ttp::Polynomial& p, const ExactMatrix& a) {
  const std::size_t n = a.size();
  ExactMatrix acc(n, std::vector<Rational>(n * n));
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * a + c[k] * ExactMatrix::identity(n);
  }
  return acc;
}

inline bool is_zero(const ExactMatrix& m) {
  return std::all_of(m.entries().begin(), m.entries().end(), [](const Rational& x) { return x == 0; });
}

inline ExactMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t n, std::int64_t lo,
                                         std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  std::vector<Rational> e(n * n);
  for (auto& x : e) x = Rational(static_cast<long>(d(rng)));
  return ExactMatrix(n, std::move(e));
}

inline ExactMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  std::vector<Rational> e(n * n);
  for (auto& x : e) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return ExactMatrix(n, std::move(e));
}

// Rank n-1 (or lower) matrix: last row is a combination of the others.
inline ExactMatrix random_singular_matrix(std::mt19937_64& rng, std::size_t n) {
  const ExactMatrix base = random_rational_matrix(rng, n);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::vector<Rational> e(base.entries().begin(), base.entries().end());
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) s += Rational(coef(rng)) * base(i, j);
    e[(n - 1) * n + j] = s;
  }
  return ExactMatrix(n, std::move(e));
}

// Totally positive matrix built as L_1 ... L_{n-1} D U_1 ... U_{n-1}, each L
// (U) lower (upper) bidiagonal with unit diagonal and positive off-diagonal,
// D positive diagonal.
inline ExactMatrix bidiagonal_tp(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 4);
  auto pos = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  ExactMatrix acc = ExactMatrix::identity(n);
  auto bidiagonal = [&](bool lower) {
    std::vector<Rational> e(n * n);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    for (std::size_t i = 1; i < n; ++i) {
      if (lower)
        e[i * n + i - 1] = pos();
      else
        e[(i - 1) * n + i] = pos();
    }
    return ExactMatrix(n, std::move(e));
  };
  for (std::size_t k = 0; k + 1 < n; ++k) acc = acc * bidiagonal(true);
  std::vector<Rational> d(n * n);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = pos();
  acc = acc * ExactMatrix(n, std::move(d));
  for (std::size_t k = 0; k + 1 < n; ++k) acc = acc * bidiagonal(false);
  return acc;
}

// Each entry of a bidiagonal product scaled by an independent factor in
// [1 - eps, 1 + eps]: positive, and TP or not depending on eps.
inline ExactMatrix perturbed_tp(std::mt19937_64& rng, std::size_t n, const Rational& eps) {
  const ExactMatrix b = bidiagonal_tp(rng, n);
  std::uniform_int_distribution<long> u(-1000, 1000);
  std::vector<Rational> e(b.entries().begin(), b.entries().end());
  for (auto& x : e) x *= 1 + eps * Rational(u(rng), 1000);
  return ExactMatrix(n, std::move(e));
}

// J A J with J the reversal permutation.
inline ExactMatrix reverse_both(const ExactMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = a(n - 1 - i, n - 1 - j);
  return ExactMatrix(n, std::move(e));
}

// P A P^T: entry (perm[i], perm[j]) of the result is a(i, j); perm is 0-based.
inline ExactMatrix relabel(const ExactMatrix& a, const std::vector<int>& perm) {
  const std::size_t n = a.size();
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[perm[i] * n + perm[j]] = a(i, j);
  return ExactMatrix(n, std::move(e));
}

}  // namespace oracle
