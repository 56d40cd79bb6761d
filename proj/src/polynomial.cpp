#include "ttp/polynomial.hpp"

#include <stdexcept>

namespace ttp {

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) {
  normalize();
}

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

Polynomial Polynomial::linear_root(const Rational& root) { return Polynomial{-root, 1}; }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + to_double(*it);
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sign((*this)(x)); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() < 2) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational lead = leading();
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v /= lead;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Rational> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  std::vector<Rational> out = a.coefficients();
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    const Rational f = rem[k] / lead;
    quot[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coefficients()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<Polynomial> squarefree_factorization(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free factorization of zero");
  std::vector<Polynomial> factors;
  const Polynomial f = p.monic();
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(f.derivative(), a).first;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    factors.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return factors;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free part of zero");
  const Polynomial f = p.monic();
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += to_string(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace ttp
