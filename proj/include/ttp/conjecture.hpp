#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ttp/exact_matrix.hpp"
#include "ttp/positivity.hpp"
#include "ttp/spectral.hpp"
#include "ttp/tree.hpp"

namespace ttp {

struct GenConfig {
  LabelledTree tree = make_star(4);
  std::int64_t lo = 1;
  std::int64_t hi = 150;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 50;
  /// Also require the pendant-deletion P-matrix hypothesis.
  bool augmented = false;
  /// Draw the upper triangle and mirror it.
  bool symmetric = false;
  /// Greedy single-entry mutation that lowers the number of violated
  /// minors after each fresh draw. Without it an attempt is a single
  /// uniform draw.
  bool repair = true;
  /// Mutations per attempt.
  std::size_t repair_steps = 20000;

  /// Throws std::invalid_argument unless 1 <= lo <= hi and max_attempts >= 1.
  void validate() const;
};

/// A matrix meeting the hypotheses, or nullopt once max_attempts draws
/// are spent. Deterministic in cfg.
std::optional<ExactMatrix> gen_candidate(const GenConfig& cfg);

struct ConjectureVerdict {
  bool augmented = false;
  HypothesisReport hypotheses;
  bool hypotheses_hold = false;
  AdjointCheck adjoint;
  /// Empty when the spectral stage threw (adjugate identically zero).
  std::optional<SpectralSummary> spectral;
  std::string spectral_error;
  bool smallest_real = false;
  bool smallest_simple = false;
  bool ambiguous = false;
  bool eigenvector_signed = false;
  /// Hypotheses hold and the smallest eigenvalue is non-real, multiple, or
  /// its eigenvector is not signed according to the tree.
  bool counterexample = false;
  /// Hypotheses hold but the smallest eigenvalue could not be separated.
  bool undecided = false;

  [[nodiscard]] bool conclusion_holds() const {
    return smallest_real && smallest_simple && eigenvector_signed && !ambiguous;
  }
};

/// Hypotheses (T-TP, plus pendant-deletion when augmented), then adjugate
/// sign check, smallest-eigenvalue classification and eigenvector signing.
ConjectureVerdict test_conjecture(const ExactMatrix& a, const LabelledTree& tree,
                                  bool augmented);

/// Plain-data digest of a verdict, as stored in reports.
struct VerdictSummary {
  bool ttp = false;
  bool pendants_ok = true;
  bool hypotheses_hold = false;
  bool adjoint_ok = false;
  std::vector<std::pair<int, int>> adjoint_mismatches;
  bool smallest_real = false;
  bool smallest_simple = false;
  bool ambiguous = false;
  double smallest_re = 0.0;
  double smallest_im = 0.0;
  std::vector<double> eigenvector;
  bool eigenvector_signed = false;
  bool counterexample = false;

  friend bool operator==(const VerdictSummary&, const VerdictSummary&) = default;
};

VerdictSummary summarize(const ConjectureVerdict& verdict);

struct Exemplar {
  std::size_t trial = 0;
  ExactMatrix matrix;
  VerdictSummary verdict;

  friend bool operator==(const Exemplar&, const Exemplar&) = default;
};

struct BatchConfigEcho {
  std::string tree;  // tree text format
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 0;
  bool augmented = false;
  bool symmetric = false;
  bool repair = false;

  friend bool operator==(const BatchConfigEcho&, const BatchConfigEcho&) = default;
};

/// conclusion_pass + counterexamples + undecided == hypothesis_pass.
struct BatchReport {
  BatchConfigEcho config;
  std::size_t trials = 0;
  std::size_t generated = 0;
  std::size_t hypothesis_pass = 0;
  std::size_t adjoint_pass = 0;
  std::size_t conclusion_pass = 0;
  std::size_t counterexamples = 0;
  std::size_t undecided = 0;
  std::vector<Exemplar> exemplars;

  friend bool operator==(const BatchReport&, const BatchReport&) = default;
};

/// Seed of trial `index` within a batch seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

/// Worker count from TTP_THREADS, else hardware concurrency.
unsigned default_threads();

/// Generates and tests up to `trials` matrices, keeping the first three
/// counterexamples. Trials are split across `threads` workers by index; the
/// report does not depend on `threads`.
BatchReport batch_verify(const GenConfig& cfg, std::size_t trials, unsigned threads = 1);

/// batch_verify that keeps up to `keep` counterexamples with their verdicts.
BatchReport search_counterexamples(const GenConfig& cfg, std::size_t trials, std::size_t keep,
                                   unsigned threads = 1);

struct TreeSweepEntry {
  LabelledTree tree;
  BatchReport report;
};

/// search_counterexamples on every labelled tree on n vertices
/// (2 <= n <= 7); cfg.tree is ignored.
std::vector<TreeSweepEntry> sweep_trees(int n, const GenConfig& cfg, std::size_t trials_per_tree,
                                        std::size_t keep = 1, unsigned threads = 1);

}  // namespace ttp
