#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ttp/index_list.hpp"
#include "ttp/rational.hpp"

namespace ttp {

/// Dense square matrix of exact rationals. Immutable once built.
///
/// Element access through operator() is 0-based; every operation taking an
/// IndexList uses 1-based labels.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  explicit ExactMatrix(const std::vector<std::vector<Rational>>& rows);
  /// `entries` is row-major with n*n values.
  ExactMatrix(std::size_t n, std::vector<Rational> entries);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_integers(std::size_t n, std::span<const std::int64_t> row_major);

  [[nodiscard]] std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  [[nodiscard]] std::span<const Rational> entries() const { return entries_; }

  [[nodiscard]] ExactMatrix transposed() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
ExactMatrix operator+(const ExactMatrix& lhs, const ExactMatrix& rhs);
ExactMatrix operator-(const ExactMatrix& lhs, const ExactMatrix& rhs);
ExactMatrix operator*(const Rational& scalar, const ExactMatrix& m);

/// Entrywise signs in {+1, -1, 0}.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(std::size_t n, std::vector<std::int8_t> signs);

  [[nodiscard]] std::size_t size() const { return n_; }
  int operator()(std::size_t row, std::size_t col) const { return signs_[row * n_ + col]; }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> signs_;
};

/// A[rows; cols], rows and columns taken in list order.
ExactMatrix submatrix(const ExactMatrix& a, const IndexList& rows, const IndexList& cols);

/// det A[rows; cols]. The empty minor is 1.
Rational minor(const ExactMatrix& a, const IndexList& rows, const IndexList& cols);

/// Fraction-free (Bareiss) elimination after clearing row denominators.
Rational det(const ExactMatrix& a);

/// Classical adjoint: entry (i,j) is (-1)^(i+j) times the minor deleting
/// row j and column i. Computed cofactor by cofactor so it stays exact when
/// det A = 0. Requires n >= 2.
ExactMatrix adjugate(const ExactMatrix& a);

/// Right-hand side of Sylvester's identity
///   (det A[a';b'] det A['a;'b] - det A[a';'b] det A['a;b']) / det A['a';'b']
/// Throws std::domain_error when the central minor vanishes.
Rational sylvester_rhs(const ExactMatrix& a, const IndexList& alpha, const IndexList& beta);

SignMatrix sign_pattern(const ExactMatrix& a);

/// Solves A x = b exactly by Gaussian elimination. Throws std::domain_error
/// when A is singular.
std::vector<Rational> solve(const ExactMatrix& a, std::span<const Rational> b);

/// One nonzero vector of the null space, or empty when A is nonsingular.
std::vector<Rational> null_vector(const ExactMatrix& a);

std::vector<double> to_doubles(std::span<const Rational> values);

}  // namespace ttp
