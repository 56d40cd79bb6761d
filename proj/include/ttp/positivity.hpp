#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ttp/exact_matrix.hpp"
#include "ttp/tree.hpp"

namespace ttp {

enum class TpMode {
  /// Every square minor.
  AllMinors,
  /// Contiguous minors whose block touches the first row or the first
  /// column; positivity of these n^2 minors is equivalent to TP.
  InitialMinors,
};

struct MinorWitness {
  IndexList rows;
  IndexList cols;
  Rational value;

  friend bool operator==(const MinorWitness&, const MinorWitness&) = default;
};

struct TpReport {
  bool verdict = true;
  std::optional<MinorWitness> witness;
  std::size_t minors_checked = 0;
};

struct PathTpResult {
  TreePath path;
  TpReport report;
};

struct TtpReport {
  bool verdict = true;
  std::vector<PathTpResult> paths;
  /// Position in `paths` of the first failing path.
  std::optional<std::size_t> first_failure;
};

struct PMatrixReport {
  bool verdict = true;
  /// Index set of the first non-positive principal minor, as labels of the
  /// matrix that was checked.
  std::optional<MinorWitness> witness;
  std::size_t minors_checked = 0;
};

struct PendantResult {
  int pendant = 0;
  /// Checked block, as labels of the full matrix.
  IndexList kept;
  PMatrixReport report;
};

struct HypothesisReport {
  TtpReport ttp;
  std::vector<PendantResult> pendants;

  [[nodiscard]] bool pendants_ok() const;
  [[nodiscard]] bool verdict() const { return ttp.verdict && pendants_ok(); }
};

/// Minors are visited by size, then rows, then columns; the first
/// non-positive one (zero included) is the witness.
TpReport is_tp(const ExactMatrix& m, TpMode mode = TpMode::InitialMinors);

/// A[P] with rows and columns ordered along the path.
ExactMatrix path_matrix(const ExactMatrix& a, const TreePath& path);

/// is_tp(A[P]) for every maximal path P. Witness labels refer to A.
TtpReport is_t_tp(const ExactMatrix& a, const LabelledTree& tree,
                  TpMode mode = TpMode::InitialMinors);

/// All 2^n - 1 principal minors, smallest first.
PMatrixReport is_p_matrix(const ExactMatrix& m);

/// T-TP plus: the principal submatrix deleting each pendant vertex is a
/// P-matrix.
HypothesisReport pendant_deletion_hypothesis(const ExactMatrix& a, const LabelledTree& tree,
                                             TpMode mode = TpMode::InitialMinors);

/// Entry (i,j) = s_i s_j with s the tree signing anchored at vertex 1.
SignMatrix predicted_adjoint_sign(const LabelledTree& tree);

struct AdjointCheck {
  bool verdict = false;
  ExactMatrix adjugate;
  /// 1-based (row, col) entries whose sign is wrong or zero, row-major.
  std::vector<std::pair<int, int>> mismatches;
};

AdjointCheck check_adjoint_conclusion(const ExactMatrix& a, const LabelledTree& tree);

}  // namespace ttp
