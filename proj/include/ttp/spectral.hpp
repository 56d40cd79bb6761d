#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ttp/exact_matrix.hpp"
#include "ttp/polynomial.hpp"
#include "ttp/tree.hpp"

namespace ttp {

/// Closed interval holding exactly `multiplicity` roots (with multiplicity)
/// of the polynomial it was isolated from, all at a single point.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  [[nodiscard]] Rational midpoint() const { return (lo + hi) / 2; }
  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] bool exact() const { return lo == hi; }
};

/// det(xI - A) by Faddeev-LeVerrier over the rationals.
Polynomial char_poly(const ExactMatrix& a);

/// Disjoint isolating intervals for the distinct real roots, ascending.
/// Intervals are refined until no wider than `max_width` when given.
/// Throws std::domain_error on the zero polynomial.
std::vector<RootInterval> real_roots(const Polynomial& p,
                                     const std::optional<Rational>& max_width = std::nullopt);

/// Bisects an isolating interval of p down to `max_width`.
RootInterval refine_root(const Polynomial& p, RootInterval root, const Rational& max_width);

struct SpectrumEstimate {
  /// All n roots; real roots first (ascending, repeated by multiplicity),
  /// then conjugate pairs with positive imaginary part first.
  std::vector<std::complex<double>> roots;
  bool converged = false;
  /// max |p(z)| / sum |c_k| |z|^k over the roots.
  double max_scaled_residual = 0.0;
  /// Real roots counted with multiplicity.
  std::size_t real_count = 0;
  /// Exact isolating intervals of the distinct real roots, width <= 1e-12.
  std::vector<RootInterval> real_intervals;
};

/// Aberth-Ehrlich simultaneous iteration on the characteristic polynomial
/// from a fixed starting configuration. Real roots are replaced by the
/// midpoints of their exact isolating intervals, so the number of
/// non-real estimates always matches the Sturm count.
SpectrumEstimate full_spectrum_numeric(const ExactMatrix& a, double tol = 1e-12);
SpectrumEstimate polynomial_roots(const Polynomial& p, double tol = 1e-12);

/// Relative modulus gap below which the smallest eigenvalue is not
/// separated from the runner-up.
inline constexpr double kModulusMarginTolerance = 1e-9;

struct SmallestEigenvalue {
  bool is_real = false;
  bool is_simple = false;
  /// Minimum modulus not separated from another eigenvalue at
  /// kModulusMarginTolerance; the remaining fields then describe one of
  /// the tied candidates.
  bool ambiguous = false;
  int multiplicity = 1;
  /// Present when real; width <= 1e-12.
  std::optional<RootInterval> interval;
  std::complex<double> value;
  /// (|next| - |smallest|) / |next| over the other distinct eigenvalues,
  /// ignoring the conjugate of a complex smallest. Infinity when there is
  /// no other eigenvalue.
  double modulus_margin = 0.0;
};

SmallestEigenvalue smallest_eigenvalue(const ExactMatrix& a);
SmallestEigenvalue smallest_eigenvalue(const SpectrumEstimate& spectrum);

struct PerronResult {
  double value = 0.0;
  /// Normalized to max entry 1.
  std::vector<double> vector;
  /// ||Mv - value v||_inf / (value ||v||_inf)
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Power iteration on an entrywise positive matrix. Throws
/// std::invalid_argument when some entry is not positive.
PerronResult perron_vector(const ExactMatrix& m, double tol = 1e-13,
                           std::size_t max_iterations = 200000);

enum class EigenvectorMethod {
  None,
  AdjugatePerron,
  AdjugateColumn,
  InverseIteration,
  ComplexInverseIteration,
};

enum class Signed { Yes, No, NotApplicable };

std::string to_string(EigenvectorMethod method);
std::string to_string(Signed s);

struct SpectralSummary {
  Polynomial char_poly;
  SpectrumEstimate spectrum;
  SmallestEigenvalue smallest;
  EigenvectorMethod method = EigenvectorMethod::None;
  /// Unit Euclidean norm, first nonzero entry positive.
  std::vector<double> eigenvector_unit;
  /// Last entry scaled to 1; empty when the last entry vanishes.
  std::vector<double> eigenvector_last_one;
  /// Set only for a non-real smallest eigenvalue (unit norm).
  std::vector<std::complex<double>> eigenvector_complex;
  /// ||Av - lambda v||_inf / (||A||_inf ||v||_inf), real case only.
  double residual = 0.0;
  Signed signed_ok = Signed::NotApplicable;
  SigningVerdict signing;
};

/// Smallest eigenvalue and its eigenvector. Uses the Perron vector of
/// S adj(A) S when the adjugate has the tree's sign pattern (or a column of
/// the adjugate when A is singular), inverse iteration at the isolated
/// eigenvalue otherwise. Throws SpectralError when the adjugate vanishes
/// identically (rank < n-1). Throws DimensionError on size mismatch.
SpectralSummary smallest_eig_vector(const ExactMatrix& a, const LabelledTree& tree);

}  // namespace ttp
