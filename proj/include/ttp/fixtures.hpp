#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttp/exact_matrix.hpp"
#include "ttp/tree.hpp"

namespace ttp {

/// The three worked examples: a 4x4 matrix that is T-TP for the star with
/// center 1, and the 5x5 star and pitchfork matrices whose smallest
/// eigenvectors are not signed according to their trees.
struct Fixture {
  std::string name;
  ExactMatrix matrix;
  LabelledTree tree;
  /// Printed adjugate, when one is published for the example.
  std::optional<ExactMatrix> adjugate{};
  double eigenvalue = 0.0;
  double eigenvalue_tolerance = 0.01;
  /// Smallest eigenvector, last entry 1, rounded to hundredths.
  std::vector<double> eigenvector{};
  double eigenvector_tolerance = 0.01;
  /// Non-real eigenvalue pair (positive imaginary part), when published.
  std::optional<std::pair<double, double>> complex_pair{};
  double complex_relative_tolerance = 5e-4;
  bool signed_ok = false;
  std::vector<std::pair<int, int>> adjoint_mismatches{};
  bool counterexample = false;
};

const std::vector<Fixture>& fixtures();
/// Throws std::out_of_range for unknown names.
const Fixture& fixture(std::string_view name);
std::vector<std::string> fixture_names();

struct ReproductionLine {
  std::string what;
  bool ok = false;
  std::string detail;
};

struct Reproduction {
  std::string fixture;
  bool ok = true;
  std::vector<ReproductionLine> lines;
};

/// Recomputes the adjugate (exact), the smallest eigenvalue and eigenvector
/// (tolerance), the signing and adjugate-sign verdicts, and compares them
/// with the fixture.
Reproduction reproduce(const Fixture& fx);

}  // namespace ttp
