#include "ttp/exact_matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "ttp/errors.hpp"

namespace ttp {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()) {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionError("matrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (n_ == 0) throw DimensionError("matrix must have n >= 1");
}

ExactMatrix::ExactMatrix(const std::vector<std::vector<Rational>>& rows) : n_(rows.size()) {
  if (n_ == 0) throw DimensionError("matrix must have n >= 1");
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionError("matrix must be square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ExactMatrix::ExactMatrix(std::size_t n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw DimensionError("matrix must have n >= 1");
  if (entries_.size() != n_ * n_) {
    throw DimensionError("expected " + std::to_string(n_ * n_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return ExactMatrix(n, std::move(e));
}

ExactMatrix ExactMatrix::from_integers(std::size_t n, std::span<const std::int64_t> row_major) {
  std::vector<Rational> e;
  e.reserve(row_major.size());
  for (auto v : row_major) e.emplace_back(static_cast<long>(v));
  return ExactMatrix(n, std::move(e));
}

ExactMatrix ExactMatrix::transposed() const {
  std::vector<Rational> e(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) e[j * n_ + i] = (*this)(i, j);
  return ExactMatrix(n_, std::move(e));
}

namespace {

void require_same_size(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.size() != b.size()) {
    throw DimensionError("size mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

void require_indices(const ExactMatrix& a, const IndexList& rows, const IndexList& cols) {
  if (rows.size() != cols.size()) {
    throw DimensionError("row list " + to_string(rows) + " and column list " + to_string(cols) +
                         " differ in length");
  }
  const auto n = static_cast<int>(a.size());
  if (rows.max() > n || cols.max() > n) {
    throw DimensionError("index out of range for " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix: " + to_string(rows) + ";" +
                         to_string(cols));
  }
}

// Bareiss elimination on an integer matrix held row-major; destroys `m`.
Integer bareiss_det(std::vector<Integer>& m, std::size_t n) {
  if (n == 0) return 1;
  Integer prev = 1;
  int swaps = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot * n + k] == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m[k * n + j], m[pivot * n + j]);
      ++swaps;
    }
    const Integer& akk = m[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer aik = m[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& aij = m[i * n + j];
        aij = aij * akk - aik * m[k * n + j];
        mpz_divexact(aij.get_mpz_t(), aij.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = akk;
  }
  Integer d = m[n * n - 1];
  return (swaps % 2) ? Integer(-d) : d;
}

Rational det_of_rows(const ExactMatrix& a, std::span<const int> rows, std::span<const int> cols) {
  const std::size_t k = rows.size();
  std::vector<Integer> m(k * k);
  Integer scale = 1;
  for (std::size_t r = 0; r < k; ++r) {
    Integer row_lcm = 1;
    for (std::size_t c = 0; c < k; ++c) {
      const Rational& v = a(rows[r] - 1, cols[c] - 1);
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < k; ++c) {
      const Rational& v = a(rows[r] - 1, cols[c] - 1);
      m[r * k + c] = v.get_num() * (row_lcm / v.get_den());
    }
    scale *= row_lcm;
  }
  Rational d(bareiss_det(m, k), scale);
  d.canonicalize();
  return d;
}

}  // namespace

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_same_size(lhs, rhs);
  const std::size_t n = lhs.size();
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (lhs(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += lhs(i, k) * rhs(k, j);
    }
  return ExactMatrix(n, std::move(e));
}

ExactMatrix operator+(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_same_size(lhs, rhs);
  std::vector<Rational> e(lhs.entries().begin(), lhs.entries().end());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += rhs.entries()[k];
  return ExactMatrix(lhs.size(), std::move(e));
}

ExactMatrix operator-(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_same_size(lhs, rhs);
  std::vector<Rational> e(lhs.entries().begin(), lhs.entries().end());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] -= rhs.entries()[k];
  return ExactMatrix(lhs.size(), std::move(e));
}

ExactMatrix operator*(const Rational& scalar, const ExactMatrix& m) {
  std::vector<Rational> e(m.entries().begin(), m.entries().end());
  for (auto& v : e) v *= scalar;
  return ExactMatrix(m.size(), std::move(e));
}

SignMatrix::SignMatrix(std::size_t n, std::vector<std::int8_t> signs)
    : n_(n), signs_(std::move(signs)) {
  if (signs_.size() != n_ * n_) throw DimensionError("sign matrix must be square");
}

ExactMatrix submatrix(const ExactMatrix& a, const IndexList& rows, const IndexList& cols) {
  require_indices(a, rows, cols);
  if (rows.empty()) throw DimensionError("submatrix needs at least one row");
  const std::size_t k = rows.size();
  std::vector<Rational> e;
  e.reserve(k * k);
  for (int r : rows)
    for (int c : cols) e.push_back(a(r - 1, c - 1));
  return ExactMatrix(k, std::move(e));
}

Rational minor(const ExactMatrix& a, const IndexList& rows, const IndexList& cols) {
  require_indices(a, rows, cols);
  return det_of_rows(a, rows.values(), cols.values());
}

Rational det(const ExactMatrix& a) {
  const auto all = IndexList::iota(static_cast<int>(a.size()));
  return det_of_rows(a, all.values(), all.values());
}

ExactMatrix adjugate(const ExactMatrix& a) {
  const std::size_t n = a.size();
  if (n < 2) throw DimensionError("adjugate requires n >= 2");
  const auto all = IndexList::iota(static_cast<int>(n));
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto cols = all.without(static_cast<int>(i) + 1);
    for (std::size_t j = 0; j < n; ++j) {
      const auto rows = all.without(static_cast<int>(j) + 1);
      Rational c = det_of_rows(a, rows.values(), cols.values());
      e[i * n + j] = ((i + j) % 2) ? Rational(-c) : c;
    }
  }
  return ExactMatrix(n, std::move(e));
}

Rational sylvester_rhs(const ExactMatrix& a, const IndexList& alpha, const IndexList& beta) {
  require_indices(a, alpha, beta);
  if (alpha.size() < 2) throw DimensionError("Sylvester's identity needs |alpha| >= 2");
  const Rational central = minor(a, alpha.drop_both(), beta.drop_both());
  if (central == 0) {
    throw std::domain_error("central minor det A[" + to_string(alpha.drop_both()) + ";" +
                            to_string(beta.drop_both()) + "] vanishes");
  }
  const Rational top = minor(a, alpha.drop_last(), beta.drop_last()) *
                           minor(a, alpha.drop_first(), beta.drop_first()) -
                       minor(a, alpha.drop_last(), beta.drop_first()) *
                           minor(a, alpha.drop_first(), beta.drop_last());
  return top / central;
}

SignMatrix sign_pattern(const ExactMatrix& a) {
  std::vector<std::int8_t> s;
  s.reserve(a.entries().size());
  for (const auto& v : a.entries()) s.push_back(static_cast<std::int8_t>(sign(v)));
  return SignMatrix(a.size(), std::move(s));
}

std::vector<Rational> solve(const ExactMatrix& a, std::span<const Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("right-hand side has wrong length");
  std::vector<Rational> m(n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * (n + 1) + j] = a(i, j);
    m[i * (n + 1) + n] = b[i];
  }
  const std::size_t w = n + 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p * w + k] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    if (p != k)
      for (std::size_t j = k; j < w; ++j) std::swap(m[k * w + j], m[p * w + j]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i * w + k] == 0) continue;
      const Rational f = m[i * w + k] / m[k * w + k];
      for (std::size_t j = k; j < w; ++j) m[i * w + j] -= f * m[k * w + j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = m[i * w + n];
    for (std::size_t j = i + 1; j < n; ++j) s -= m[i * w + j] * x[j];
    x[i] = s / m[i * w + i];
  }
  return x;
}

std::vector<Rational> null_vector(const ExactMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> m(a.entries().begin(), a.entries().end());
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p * n + col] == 0) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(m[row * n + j], m[p * n + j]);
    const Rational inv = 1 / m[row * n + col];
    for (std::size_t j = 0; j < n; ++j) m[row * n + j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i * n + col] == 0) continue;
      const Rational f = m[i * n + col];
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] -= f * m[row * n + j];
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  std::size_t free_col = 0;
  while (free_col < n && is_pivot[free_col]) ++free_col;
  if (free_col == n) return {};
  std::vector<Rational> x(n);
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -m[r * n + free_col];
  return x;
}

std::vector<double> to_doubles(std::span<const Rational> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_double(v));
  return out;
}

}  // namespace ttp
