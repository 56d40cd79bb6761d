#include "ttp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ttp/errors.hpp"
#include "ttp/positivity.hpp"

namespace ttp {

namespace {

using cplx = std::complex<double>;

const Rational& isolation_width() {
  static const Rational w = Rational(Integer(1), Integer("1000000000000"));
  return w;
}

// Sturm chain of a square-free polynomial.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& q) {
    chain_.push_back(q);
    chain_.push_back(q.derivative());
    while (!chain_.back().is_zero()) {
      Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      chain_.push_back(-r);
    }
    chain_.pop_back();
  }

  [[nodiscard]] int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& s : chain_) {
      const int sg = s.sign_at(x);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

 private:
  std::vector<Polynomial> chain_;
};

Rational cauchy_bound(const Polynomial& q) {
  Rational m = 0;
  const Rational& lead = q.leading();
  for (int k = 0; k < q.degree(); ++k) {
    Rational r = abs(q.coefficients()[k] / lead);
    if (r > m) m = r;
  }
  return m + 1;
}

// Splitting point strictly inside (lo, hi) at which q does not vanish.
Rational split_point(const Polynomial& q, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  for (long k = 3; q.sign_at(mid) == 0; ++k) mid = lo + (hi - lo) / k;
  return mid;
}

void isolate(const Polynomial& q, const SturmChain& sturm, const Rational& lo, const Rational& hi,
             int v_lo, int v_hi, std::vector<RootInterval>& out) {
  const int count = v_lo - v_hi;
  if (count == 0) return;
  if (count == 1) {
    out.push_back(RootInterval{lo, hi, 1});
    return;
  }
  const Rational mid = split_point(q, lo, hi);
  const int v_mid = sturm.variations(mid);
  isolate(q, sturm, lo, mid, v_lo, v_mid, out);
  isolate(q, sturm, mid, hi, v_mid, v_hi, out);
}

// Bisection on a square-free q whose only root in [lo, hi] is simple and
// whose endpoints are not roots (or the interval is a single point).
RootInterval refine_squarefree(const Polynomial& q, RootInterval r, const Rational& max_width) {
  if (r.exact()) return r;
  int s_lo = q.sign_at(r.lo);
  while (r.width() > max_width) {
    const Rational mid = r.midpoint();
    const int s_mid = q.sign_at(mid);
    if (s_mid == 0) {
      r.lo = mid;
      r.hi = mid;
      break;
    }
    if (s_mid == s_lo) {
      r.lo = mid;
    } else {
      r.hi = mid;
    }
  }
  return r;
}

double scaled_residual(const Polynomial& p, cplx z) {
  double denom = 0.0;
  const double az = std::abs(z);
  double power = 1.0;
  for (const auto& c : p.coefficients()) {
    denom += std::abs(to_double(c)) * power;
    power *= az;
  }
  return denom == 0.0 ? 0.0 : std::abs(p(z)) / denom;
}

// Aberth-Ehrlich iteration on the double image of a monic polynomial.
std::vector<cplx> aberth(const Polynomial& p, double tol, bool& converged) {
  const int n = p.degree();
  std::vector<double> c(static_cast<std::size_t>(n) + 1);
  const Rational lead = p.leading();
  for (int k = 0; k <= n; ++k) c[k] = to_double(p.coefficients()[k] / lead);

  auto eval = [&](cplx z, cplx& dp) {
    cplx v = 0.0;
    dp = 0.0;
    for (int k = n; k >= 0; --k) {
      dp = dp * z + v;
      v = v * z + c[k];
    }
    return v;
  };

  double radius = 0.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(c[k]), 1.0 / (n - k)));
  radius = std::max(radius, 1e-3);
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = std::polar(radius, theta);
  }
  converged = false;
  for (int iter = 0; iter < 1000 && !converged; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      cplx dp;
      const cplx v = eval(z[k], dp);
      if (v == 0.0) continue;
      const cplx w = v / dp;
      cplx s = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != k) s += 1.0 / (z[k] - z[j]);
      }
      const cplx step = w / (1.0 - w * s);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    converged = worst <= tol;
  }
  return z;
}

// Gaussian elimination with partial pivoting on a complex system.
std::vector<cplx> complex_solve(std::vector<cplx> m, std::vector<cplx> b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i * n + k]) > std::abs(m[p * n + k])) p = i;
    if (m[p * n + k] == 0.0) m[p * n + k] = std::numeric_limits<double>::epsilon();
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      std::swap(b[k], b[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = m[i * n + k] / m[k * n + k];
      for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
      b[i] -= f * b[k];
    }
  }
  std::vector<cplx> x(n);
  for (std::size_t i = n; i-- > 0;) {
    cplx s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= m[i * n + j] * x[j];
    x[i] = s / m[i * n + i];
  }
  return x;
}

template <typename T>
double inf_norm(const std::vector<T>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> inverse_iteration(const ExactMatrix& a, const RootInterval& root) {
  const std::size_t n = a.size();
  const Rational shift = root.midpoint();
  std::vector<Rational> shifted(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < n; ++i) shifted[i * n + i] -= shift;
  const ExactMatrix b(n, std::move(shifted));
  if (root.exact()) return to_doubles(null_vector(b));

  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = Rational(static_cast<long>(n + i + 1), static_cast<long>(n + 1));
  std::vector<double> out;
  for (int iter = 0; iter < 3; ++iter) {
    out = to_doubles(solve(b, x));
    const double scale = inf_norm(out);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] /= scale;
      x[i] = from_double(out[i]);
    }
  }
  return out;
}

std::vector<cplx> complex_inverse_iteration(const ExactMatrix& a, cplx lambda) {
  const std::size_t n = a.size();
  const cplx shift = lambda * (1.0 + 1e-13);
  std::vector<cplx> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = to_double(a(i, j)) - (i == j ? shift : 0.0);
  std::vector<cplx> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = cplx(1.0, 0.1 * static_cast<double>(i));
  for (int iter = 0; iter < 4; ++iter) {
    x = complex_solve(m, x, n);
    const double s = inf_norm(x);
    for (auto& v : x) v /= s;
  }
  // Unit norm, largest entry real positive.
  std::size_t big = 0;
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    norm += std::norm(x[i]);
    if (std::abs(x[i]) > std::abs(x[big])) big = i;
  }
  const cplx phase = std::abs(x[big]) / x[big] / std::sqrt(norm);
  for (auto& v : x) v *= phase;
  return x;
}

}  // namespace

Polynomial char_poly(const ExactMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  ExactMatrix m(n, std::vector<Rational>(n * n));
  const auto identity = ExactMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * identity;
    const ExactMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

std::vector<RootInterval> real_roots(const Polynomial& p, const std::optional<Rational>& max_width) {
  if (p.is_zero()) throw std::domain_error("real roots of the zero polynomial");
  if (p.degree() == 0) return {};
  const Polynomial q = squarefree_part(p);
  const SturmChain sturm(q);
  const Rational bound = cauchy_bound(q);
  std::vector<RootInterval> roots;
  isolate(q, sturm, -bound, bound, sturm.variations(-bound), sturm.variations(bound), roots);

  const auto factors = squarefree_factorization(p);
  for (auto& r : roots) {
    if (max_width) r = refine_squarefree(q, r, *max_width);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const auto& f = factors[k];
      if (f.degree() < 1) continue;
      const bool has_root =
          r.exact() ? f(r.lo) == 0 : f.sign_at(r.lo) * f.sign_at(r.hi) < 0;
      if (has_root) {
        r.multiplicity = static_cast<int>(k) + 1;
        break;
      }
    }
  }
  return roots;
}

RootInterval refine_root(const Polynomial& p, RootInterval root, const Rational& max_width) {
  const int m = root.multiplicity;
  RootInterval r = refine_squarefree(squarefree_part(p), root, max_width);
  r.multiplicity = m;
  return r;
}

SpectrumEstimate polynomial_roots(const Polynomial& p, double tol) {
  if (p.degree() < 1) throw std::domain_error("roots of a constant polynomial");
  SpectrumEstimate est;
  est.real_intervals = real_roots(p, isolation_width());
  for (const auto& r : est.real_intervals) {
    const double v = to_double(r.midpoint());
    for (int k = 0; k < r.multiplicity; ++k) est.roots.emplace_back(v, 0.0);
    est.real_count += static_cast<std::size_t>(r.multiplicity);
  }
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const std::size_t complex_count = n - est.real_count;
  bool aberth_converged = true;
  if (complex_count > 0) {
    auto z = aberth(p, tol, aberth_converged);
    // Upper half-plane images of the most non-real estimates; each conjugate
    // pair collapses to two neighbours after sorting.
    std::ranges::sort(z, [](cplx x, cplx y) { return std::abs(x.imag()) > std::abs(y.imag()); });
    std::vector<cplx> upper;
    for (std::size_t k = 0; k < complex_count; ++k) upper.emplace_back(z[k].real(), std::abs(z[k].imag()));
    std::ranges::sort(upper, [](cplx x, cplx y) {
      return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    std::vector<cplx> pairs;
    for (std::size_t k = 0; k + 1 < upper.size(); k += 2) pairs.push_back((upper[k] + upper[k + 1]) / 2.0);
    std::ranges::sort(pairs, [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });
    for (cplx w : pairs) {
      // Newton polish on the exact polynomial's double image.
      for (int it = 0; it < 3; ++it) {
        const cplx v = p(w);
        const cplx d = p.derivative()(w);
        if (d == 0.0) break;
        w -= v / d;
      }
      est.roots.push_back(w);
      est.roots.push_back(std::conj(w));
    }
  }
  for (const auto& z : est.roots) {
    est.max_scaled_residual = std::max(est.max_scaled_residual, scaled_residual(p, z));
  }
  est.converged = aberth_converged && est.max_scaled_residual <= std::max(tol, 1e-12);
  return est;
}

SpectrumEstimate full_spectrum_numeric(const ExactMatrix& a, double tol) {
  return polynomial_roots(char_poly(a), tol);
}

SmallestEigenvalue smallest_eigenvalue(const SpectrumEstimate& spectrum) {
  struct Candidate {
    cplx value;
    double modulus;
    int multiplicity;
    std::optional<RootInterval> interval;
  };
  std::vector<Candidate> distinct;
  for (const auto& r : spectrum.real_intervals) {
    const double v = to_double(r.midpoint());
    distinct.push_back({cplx(v, 0.0), std::abs(v), r.multiplicity, r});
  }
  for (std::size_t k = spectrum.real_count; k < spectrum.roots.size(); ++k) {
    distinct.push_back({spectrum.roots[k], std::abs(spectrum.roots[k]), 1, std::nullopt});
  }
  if (distinct.empty()) throw SpectralError("polynomial has no roots");
  std::ranges::stable_sort(distinct, [](const Candidate& x, const Candidate& y) {
    if (x.modulus != y.modulus) return x.modulus < y.modulus;
    return x.value.imag() > y.value.imag();
  });
  const Candidate& best = distinct.front();
  SmallestEigenvalue out;
  out.value = best.value;
  out.interval = best.interval;
  out.is_real = best.interval.has_value();
  out.multiplicity = best.multiplicity;
  out.is_simple = out.is_real && best.multiplicity == 1;
  double next = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < distinct.size(); ++k) {
    const auto& c = distinct[k];
    if (!out.is_real && c.value == std::conj(best.value)) continue;
    next = std::min(next, c.modulus);
  }
  if (std::isinf(next)) {
    out.modulus_margin = std::numeric_limits<double>::infinity();
  } else {
    out.modulus_margin = next > 0.0 ? (next - best.modulus) / next : 0.0;
  }
  out.ambiguous = out.modulus_margin < kModulusMarginTolerance;
  return out;
}

SmallestEigenvalue smallest_eigenvalue(const ExactMatrix& a) {
  return smallest_eigenvalue(polynomial_roots(char_poly(a)));
}

PerronResult perron_vector(const ExactMatrix& m, double tol, std::size_t max_iterations) {
  const std::size_t n = m.size();
  Rational biggest = 0;
  for (const auto& v : m.entries()) {
    if (v <= 0) throw std::invalid_argument("Perron iteration needs an entrywise positive matrix");
    if (v > biggest) biggest = v;
  }
  const double scale = to_double(biggest);
  std::vector<double> w(n * n);
  for (std::size_t k = 0; k < n * n; ++k) w[k] = to_double(m.entries()[k]) / scale;

  PerronResult out;
  std::vector<double> x(n, 1.0);
  std::vector<double> y(n);
  for (std::size_t iter = 1; iter <= max_iterations; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += w[i * n + j] * x[j];
      y[i] = s;
    }
    double xy = 0.0;
    double xx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      xy += x[i] * y[i];
      xx += x[i] * x[i];
    }
    const double mu = xy / xx;
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(y[i] - mu * x[i]));
    out.iterations = iter;
    out.value = mu * scale;
    out.residual = r / (mu * inf_norm(x));
    if (out.residual <= tol) {
      out.converged = true;
      break;
    }
    const double ymax = inf_norm(y);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ymax;
  }
  const double xmax = inf_norm(x);
  for (auto& v : x) v /= xmax;
  out.vector = std::move(x);
  return out;
}

std::string to_string(EigenvectorMethod method) {
  switch (method) {
    case EigenvectorMethod::None: return "none";
    case EigenvectorMethod::AdjugatePerron: return "adjugate-perron";
    case EigenvectorMethod::AdjugateColumn: return "adjugate-column";
    case EigenvectorMethod::InverseIteration: return "inverse-iteration";
    case EigenvectorMethod::ComplexInverseIteration: return "complex-inverse-iteration";
  }
  return "unknown";
}

std::string to_string(Signed s) {
  switch (s) {
    case Signed::Yes: return "yes";
    case Signed::No: return "no";
    case Signed::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

SpectralSummary smallest_eig_vector(const ExactMatrix& a, const LabelledTree& tree) {
  const std::size_t n = a.size();
  if (n != static_cast<std::size_t>(tree.size())) {
    throw DimensionError("matrix size does not match the tree");
  }
  SpectralSummary out;
  out.char_poly = char_poly(a);
  out.spectrum = polynomial_roots(out.char_poly);
  out.smallest = smallest_eigenvalue(out.spectrum);

  std::vector<double> v;
  if (n == 1) {
    v = {1.0};
    out.method = EigenvectorMethod::AdjugateColumn;
  } else {
    const AdjointCheck adj = check_adjoint_conclusion(a, tree);
    if (std::ranges::all_of(adj.adjugate.entries(), [](const Rational& x) { return x == 0; })) {
      throw SpectralError("adjugate vanishes identically (rank < n-1)");
    }
    if (adj.verdict) {
      const SignVector s = tree_signing(tree, 1);
      const Rational d = det(a);
      if (d != 0) {
        std::vector<Rational> conj(n * n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) conj[i * n + j] = (s[i] * s[j]) * adj.adjugate(i, j);
        const PerronResult pr = perron_vector(ExactMatrix(n, std::move(conj)));
        if (pr.converged) {
          v = pr.vector;
          for (std::size_t i = 0; i < n; ++i) v[i] *= s[i];
          out.method = EigenvectorMethod::AdjugatePerron;
        }
      } else {
        std::size_t best = 0;
        Rational best_mag = 0;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i)
            if (abs(adj.adjugate(i, j)) > best_mag) {
              best_mag = abs(adj.adjugate(i, j));
              best = j;
            }
        for (std::size_t i = 0; i < n; ++i) v.push_back(to_double(adj.adjugate(i, best)));
        out.method = EigenvectorMethod::AdjugateColumn;
      }
    }
    if (v.empty() && !out.smallest.ambiguous) {
      if (out.smallest.is_real) {
        v = inverse_iteration(a, *out.smallest.interval);
        out.method = EigenvectorMethod::InverseIteration;
      } else {
        out.eigenvector_complex = complex_inverse_iteration(a, out.smallest.value);
        out.method = EigenvectorMethod::ComplexInverseIteration;
      }
    }
  }
  if (v.empty()) return out;

  const double vmax = inf_norm(v);
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  out.eigenvector_unit = v;
  const auto first = std::ranges::find_if(v, [](double x) { return x != 0.0; });
  const double flip = (first != v.end() && *first < 0.0) ? -1.0 : 1.0;
  for (auto& x : out.eigenvector_unit) x *= flip / norm;
  if (std::abs(v.back()) > 1e-14 * vmax) {
    out.eigenvector_last_one = v;
    for (auto& x : out.eigenvector_last_one) x /= v.back();
  }

  const double lambda = out.smallest.value.real();
  double a_norm = 0.0;
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    double av = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double aij = to_double(a(i, j));
      row += std::abs(aij);
      av += aij * v[j];
    }
    a_norm = std::max(a_norm, row);
    r = std::max(r, std::abs(av - lambda * v[i]));
  }
  out.residual = (a_norm > 0.0 && vmax > 0.0) ? r / (a_norm * vmax) : r;

  if (out.smallest.is_real && !out.smallest.ambiguous) {
    out.signing = is_signed_according_to(out.eigenvector_unit, tree);
    out.signed_ok = out.signing.ok ? Signed::Yes : Signed::No;
  }
  return out;
}

}  // namespace ttp
