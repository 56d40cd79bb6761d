#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ttp/rational.hpp"

namespace ttp {

/// Univariate polynomial over the rationals, coefficients in ascending
/// degree. Trailing zeros are stripped, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> ascending);
  explicit Polynomial(std::vector<Rational> ascending);

  /// (x - root)
  static Polynomial linear_root(const Rational& root);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  [[nodiscard]] Rational coefficient(int k) const;
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] std::complex<double> operator()(std::complex<double> z) const;
  [[nodiscard]] int sign_at(const Rational& x) const;

  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] Polynomial monic() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& a);

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// Yun's algorithm: factors[k] is the product of the monic irreducible
/// factors of multiplicity exactly k+1.
std::vector<Polynomial> squarefree_factorization(const Polynomial& p);
/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// Plain-text rendering, highest degree first: "x^2 - 3*x + 2".
std::string to_string(const Polynomial& p);

}  // namespace ttp
