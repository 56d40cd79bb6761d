#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "ttp/conjecture.hpp"
#include "ttp/errors.hpp"
#include "ttp/fixtures.hpp"
#include "ttp/spectral.hpp"

using namespace ttp;

namespace {

ExactMatrix diagonal(std::vector<Rational> d) {
  const std::size_t n = d.size();
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = d[i];
  return ExactMatrix(n, std::move(e));
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("characteristic polynomial of the 4x4 example") {
  const Polynomial p = char_poly(fixture("star4-example").matrix);
  CHECK(p == Polynomial{5574784, -2376010, 61299, -487, 1});
}

TEST_CASE("Cayley-Hamilton and coefficient identities") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const ExactMatrix a = oracle::random_rational_matrix(rng, n);
    const Polynomial p = char_poly(a);
    CHECK(p.degree() == static_cast<int>(n));
    CHECK(p.leading() == 1);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
    CHECK(p.coefficient(static_cast<int>(n) - 1) == -trace);
    CHECK(p.coefficient(0) == (n % 2 ? Rational(-det(a)) : det(a)));
    CHECK(oracle::is_zero(oracle::evaluate_at_matrix(p, a)));
  }
}

TEST_CASE("real root isolation with multiplicities") {
  // (x-1)^2 (x+2) (x - 1/3) (x^2 + 1)
  const Polynomial p = Polynomial::linear_root(1) * Polynomial::linear_root(1) *
                       Polynomial::linear_root(-2) * Polynomial::linear_root(Rational(1, 3)) *
                       Polynomial{1, 0, 1};
  const auto roots = real_roots(p, Rational(1, 1000000));
  REQUIRE(roots.size() == 3);
  const std::vector<Rational> want{-2, Rational(1, 3), 1};
  const std::vector<int> mult{1, 1, 2};
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(roots[k].lo <= want[k]);
    CHECK(want[k] <= roots[k].hi);
    CHECK(roots[k].width() <= Rational(1, 1000000));
    CHECK(roots[k].multiplicity == mult[k]);
  }
  CHECK(real_roots(Polynomial{1, 0, 1}).empty());
  CHECK_THROWS_AS(real_roots(Polynomial{}), std::domain_error);
}

TEST_CASE("root refinement keeps the root inside") {
  const Polynomial p{-2, 0, 1};
  auto roots = real_roots(p);
  REQUIRE(roots.size() == 2);
  const RootInterval r = refine_root(p, roots[1], Rational(1, 1000000000));
  CHECK(r.lo * r.lo <= 2);
  CHECK(r.hi * r.hi >= 2);
  CHECK(r.width() <= Rational(1, 1000000000));
}

TEST_CASE("numeric spectrum of the 4x4 example") {
  const SpectrumEstimate s = full_spectrum_numeric(fixture("star4-example").matrix);
  CHECK(s.converged);
  CHECK(s.real_count == 2);
  REQUIRE(s.roots.size() == 4);
  CHECK(s.roots[0].real() == doctest::Approx(2.50496).epsilon(1e-5));
  CHECK(s.roots[1].real() == doctest::Approx(317.18).epsilon(1e-4));
  CHECK(s.roots[2].real() == doctest::Approx(83.6571).epsilon(1e-6));
  CHECK(s.roots[2].imag() == doctest::Approx(4.24099).epsilon(1e-5));
  CHECK(s.roots[3] == std::conj(s.roots[2]));
}

TEST_CASE("spectrum roots satisfy Vieta on random integer matrices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const ExactMatrix a = oracle::random_integer_matrix(rng, n, -9, 9);
    const SpectrumEstimate s = full_spectrum_numeric(a);
    CHECK(s.converged);
    std::complex<double> sum = 0;
    for (const auto& z : s.roots) sum += z;
    double trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += to_double(a(i, i));
    CHECK(std::abs(sum - trace) <= 1e-8 * (1 + std::abs(trace)) + 1e-6);
    CHECK(std::abs(sum.imag()) <= 1e-9);
  }
}

TEST_CASE("smallest eigenvalue is the one of minimum modulus") {
  const SmallestEigenvalue s = smallest_eigenvalue(diagonal({3, -1, 5}));
  CHECK(s.is_real);
  CHECK(s.is_simple);
  CHECK_FALSE(s.ambiguous);
  CHECK(s.value.real() == doctest::Approx(-1.0));
  REQUIRE(s.interval);
  CHECK(s.interval->lo <= -1);
  CHECK(s.interval->hi >= -1);
  CHECK(s.modulus_margin == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("ties in modulus are flagged as ambiguous") {
  CHECK(smallest_eigenvalue(diagonal({1, -1, 4})).ambiguous);
  const SmallestEigenvalue rep = smallest_eigenvalue(diagonal({2, 2, 7}));
  CHECK(rep.is_real);
  CHECK_FALSE(rep.is_simple);
  CHECK(rep.multiplicity == 2);
}

TEST_CASE("a non-real smallest eigenvalue is not ambiguous with its conjugate") {
  // Eigenvalues 1 +- i and 10.
  const ExactMatrix a{{1, -1, 0}, {1, 1, 0}, {0, 0, 10}};
  const SmallestEigenvalue s = smallest_eigenvalue(a);
  CHECK_FALSE(s.is_real);
  CHECK_FALSE(s.ambiguous);
  CHECK(s.value.real() == doctest::Approx(1.0));
  CHECK(std::abs(s.value.imag()) == doctest::Approx(1.0));
}

TEST_CASE("Perron vector of positive matrices") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const ExactMatrix a = oracle::random_integer_matrix(rng, n, 1, 50);
    const PerronResult p = perron_vector(a);
    CHECK(p.converged);
    CHECK(p.residual < 1e-10);
    double top = 0;
    for (double x : p.vector) {
      CHECK(x > 0);
      top = std::max(top, x);
    }
    CHECK(top == doctest::Approx(1.0));
    const auto spec = full_spectrum_numeric(a);
    for (const auto& z : spec.roots) CHECK(std::abs(z) <= p.value * (1 + 1e-9));
  }
  CHECK_THROWS_AS(perron_vector(ExactMatrix{{1, 0}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("smallest eigenvector on the worked examples") {
  for (const auto& f : fixtures()) {
    const SpectralSummary s = smallest_eig_vector(f.matrix, f.tree);
    CHECK(s.smallest.is_real);
    CHECK(s.smallest.is_simple);
    CHECK(std::abs(s.smallest.value.real() - f.eigenvalue) <= f.eigenvalue_tolerance);
    REQUIRE(s.eigenvector_last_one.size() == f.eigenvector.size());
    for (std::size_t k = 0; k < f.eigenvector.size(); ++k) {
      CHECK(std::abs(s.eigenvector_last_one[k] - f.eigenvector[k]) <= f.eigenvector_tolerance);
    }
    CHECK((s.signed_ok == Signed::Yes) == f.signed_ok);
    CHECK(s.residual < 1e-10);
    double norm = 0;
    for (double x : s.eigenvector_unit) norm += x * x;
    CHECK(norm == doctest::Approx(1.0));
  }
}

TEST_CASE("Perron route is used exactly when the adjugate has the tree pattern") {
  CHECK(smallest_eig_vector(fixture("star4-example").matrix, make_star(4)).method ==
        EigenvectorMethod::AdjugatePerron);
  CHECK(smallest_eig_vector(fixture("star5-counterexample").matrix, make_star(5)).method ==
        EigenvectorMethod::InverseIteration);
}

TEST_CASE("eigenvector of a singular matrix") {
  // Rank 2, eigenvalues 0, 1, 3 for the path 1-2-3 signing.
  const ExactMatrix a{{1, 1, 0}, {1, 2, 1}, {0, 1, 1}};
  const SpectralSummary s = smallest_eig_vector(a, make_path(3));
  CHECK(s.smallest.value.real() == doctest::Approx(0.0));
  REQUIRE(s.smallest.interval);
  CHECK(s.smallest.interval->exact());
  CHECK(s.residual < 1e-12);
  CHECK(s.signed_ok == Signed::Yes);
}

TEST_CASE("spectral errors") {
  const ExactMatrix zero_adj{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  CHECK_THROWS_AS(smallest_eig_vector(zero_adj, make_star(3)), SpectralError);
  CHECK_THROWS_AS(smallest_eig_vector(ExactMatrix::identity(3), make_star(4)), DimensionError);
}

TEST_CASE("symmetric candidates have a real smallest eigenvalue") {
  GenConfig cfg;
  cfg.tree = make_pitchfork();
  cfg.symmetric = true;
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    cfg.seed = seed;
    const auto a = gen_candidate(cfg);
    REQUIRE(a);
    CHECK(*a == a->transposed());
    const SmallestEigenvalue s = smallest_eigenvalue(*a);
    CHECK(s.is_real);
    CHECK(full_spectrum_numeric(*a).real_count == 5);
  }
}

}  // TEST_SUITE
