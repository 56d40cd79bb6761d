#include "ttp/conjecture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "ttp/errors.hpp"

namespace ttp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Portable bounded draw; std::uniform_int_distribution differs across
// standard libraries.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

// A square minor over 0-based row/column labels.
struct Constraint {
  std::vector<int> rows;
  std::vector<int> cols;
};

// Positivity constraints of the hypotheses, evaluated in double on integer
// matrices. An integer minor is positive iff it is at least 1, so the
// 0.5 threshold tolerates rounding.
class ConstraintSet {
 public:
  ConstraintSet(const LabelledTree& tree, bool augmented) : n_(tree.size()) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    auto add = [&](std::vector<int> r, std::vector<int> c) {
      if (seen.emplace(r, c).second) constraints_.push_back({std::move(r), std::move(c)});
    };
    std::vector<TreePath> paths;
    if (n_ == 1) {
      paths.push_back(TreePath{IndexList{1}});
    } else {
      paths = maximal_paths(tree);
    }
    for (const auto& path : paths) {
      std::vector<int> p;
      for (int v : path.vertices) p.push_back(v - 1);
      const int m = static_cast<int>(p.size());
      if (m <= 5) {
        for (int k = 1; k <= m; ++k) {
          for_each_subset(m, k, [&](const std::vector<int>& rs) {
            for_each_subset(m, k, [&](const std::vector<int>& cs) {
              add(pick(p, rs), pick(p, cs));
            });
          });
        }
      } else {
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            const int k = std::min(i, j) + 1;
            std::vector<int> rs;
            std::vector<int> cs;
            for (int t = 0; t < k; ++t) {
              rs.push_back(i - k + 1 + t);
              cs.push_back(j - k + 1 + t);
            }
            add(pick(p, rs), pick(p, cs));
          }
      }
    }
    if (augmented) {
      for (int pendant : pendant_vertices(tree)) {
        std::vector<int> kept;
        for (int v = 0; v < n_; ++v)
          if (v != pendant - 1) kept.push_back(v);
        const int m = static_cast<int>(kept.size());
        for (int k = 1; k <= m; ++k) {
          for_each_subset(m, k, [&](const std::vector<int>& s) {
            auto idx = pick(kept, s);
            add(idx, idx);
          });
        }
      }
    }
    touching_.resize(static_cast<std::size_t>(n_) * n_);
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      for (int r : constraints_[c].rows)
        for (int col : constraints_[c].cols) touching_[r * n_ + col].push_back(c);
    }
  }

  [[nodiscard]] std::size_t size() const { return constraints_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& touching(int r, int c) const {
    return touching_[r * n_ + c];
  }

  [[nodiscard]] bool satisfied(std::size_t index, const std::vector<double>& a) const {
    const auto& con = constraints_[index];
    const std::size_t k = con.rows.size();
    double m[144];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i * k + j] = a[con.rows[i] * n_ + con.cols[j]];
    return small_det(m, k) > 0.5;
  }

 private:
  template <typename Visit>
  static void for_each_subset(int n, int k, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      visit(idx);
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) return;
      ++idx[pos];
      for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  static std::vector<int> pick(const std::vector<int>& labels, const std::vector<int>& positions) {
    std::vector<int> out;
    out.reserve(positions.size());
    for (int p : positions) out.push_back(labels[p]);
    return out;
  }

  static double small_det(double* m, std::size_t k) {
    if (k == 1) return m[0];
    if (k == 2) return m[0] * m[3] - m[1] * m[2];
    double d = 1.0;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      for (std::size_t r = c + 1; r < k; ++r)
        if (std::abs(m[r * k + c]) > std::abs(m[p * k + c])) p = r;
      if (m[p * k + c] == 0.0) return 0.0;
      if (p != c) {
        for (std::size_t j = 0; j < k; ++j) std::swap(m[c * k + j], m[p * k + j]);
        d = -d;
      }
      d *= m[c * k + c];
      for (std::size_t r = c + 1; r < k; ++r) {
        const double f = m[r * k + c] / m[c * k + c];
        for (std::size_t j = c + 1; j < k; ++j) m[r * k + j] -= f * m[c * k + j];
      }
    }
    return d;
  }

  int n_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::size_t>> touching_;
};

bool exact_hypotheses(const ExactMatrix& a, const GenConfig& cfg) {
  if (cfg.augmented) return pendant_deletion_hypothesis(a, cfg.tree).verdict();
  return is_t_tp(a, cfg.tree).verdict;
}

struct TrialOutcome {
  bool generated = false;
  bool hypotheses = false;
  bool adjoint = false;
  bool conclusion = false;
  bool counterexample = false;
  bool undecided = false;
  std::optional<Exemplar> exemplar;
};

BatchConfigEcho echo(const GenConfig& cfg) {
  return BatchConfigEcho{format_tree(cfg.tree), cfg.lo,       cfg.hi,       cfg.seed,
                         cfg.max_attempts,      cfg.augmented, cfg.symmetric, cfg.repair};
}

BatchReport run_batch(const GenConfig& cfg, std::size_t trials, std::size_t keep,
                      unsigned threads) {
  cfg.validate();
  std::vector<TrialOutcome> outcomes(trials);
  auto work = [&](std::size_t index) {
    GenConfig trial_cfg = cfg;
    trial_cfg.seed = trial_seed(cfg.seed, index);
    TrialOutcome& out = outcomes[index];
    auto m = gen_candidate(trial_cfg);
    if (!m) return;
    out.generated = true;
    const auto verdict = test_conjecture(*m, cfg.tree, cfg.augmented);
    out.hypotheses = verdict.hypotheses_hold;
    out.adjoint = verdict.adjoint.verdict;
    out.conclusion = verdict.hypotheses_hold && verdict.conclusion_holds();
    out.counterexample = verdict.counterexample;
    out.undecided = verdict.undecided;
    if (verdict.counterexample) out.exemplar = Exemplar{index, *m, summarize(verdict)};
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < trials; ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < trials; i += threads) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  BatchReport report;
  report.config = echo(cfg);
  report.trials = trials;
  for (auto& o : outcomes) {
    report.generated += o.generated;
    report.hypothesis_pass += o.hypotheses;
    report.adjoint_pass += o.hypotheses && o.adjoint;
    report.conclusion_pass += o.conclusion;
    report.counterexamples += o.counterexample;
    report.undecided += o.undecided;
    if (o.exemplar && report.exemplars.size() < keep) report.exemplars.push_back(std::move(*o.exemplar));
  }
  return report;
}

}  // namespace

void GenConfig::validate() const {
  if (lo < 1) throw std::invalid_argument("entry range must start at 1 or above");
  if (hi < lo) throw std::invalid_argument("entry range is empty");
  if (max_attempts < 1) throw std::invalid_argument("max_attempts must be at least 1");
}

std::optional<ExactMatrix> gen_candidate(const GenConfig& cfg) {
  cfg.validate();
  const int n = cfg.tree.size();
  if (n > 12) throw DimensionError("generation supports n <= 12");
  const ConstraintSet constraints(cfg.tree, cfg.augmented);
  std::mt19937_64 rng(splitmix64(cfg.seed));
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  std::vector<char> ok(constraints.size());
  std::vector<std::size_t> affected;

  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (cfg.symmetric && j < i) {
          a[i * n + j] = a[j * n + i];
        } else {
          a[i * n + j] = static_cast<double>(draw(rng, cfg.lo, cfg.hi));
        }
      }
    std::size_t violated = 0;
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      ok[c] = constraints.satisfied(c, a);
      violated += !ok[c];
    }
    const std::size_t steps = cfg.repair ? cfg.repair_steps : 0;
    for (std::size_t step = 0; step < steps && violated > 0; ++step) {
      const int i = static_cast<int>(draw(rng, 0, n - 1));
      const int j = static_cast<int>(draw(rng, 0, n - 1));
      const double old_value = a[i * n + j];
      const double new_value = static_cast<double>(draw(rng, cfg.lo, cfg.hi));
      if (new_value == old_value) continue;
      affected = constraints.touching(i, j);
      a[i * n + j] = new_value;
      if (cfg.symmetric && i != j) {
        a[j * n + i] = new_value;
        const auto& mirror = constraints.touching(j, i);
        affected.insert(affected.end(), mirror.begin(), mirror.end());
        std::ranges::sort(affected);
        affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
      }
      long delta = 0;
      for (std::size_t c : affected) delta += static_cast<long>(!constraints.satisfied(c, a)) - !ok[c];
      if (delta <= 0) {
        for (std::size_t c : affected) ok[c] = constraints.satisfied(c, a);
        violated = static_cast<std::size_t>(static_cast<long>(violated) + delta);
      } else {
        a[i * n + j] = old_value;
        if (cfg.symmetric) a[j * n + i] = old_value;
      }
    }
    if (violated > 0) continue;
    std::vector<std::int64_t> ints(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) ints[k] = static_cast<std::int64_t>(a[k]);
    auto m = ExactMatrix::from_integers(static_cast<std::size_t>(n), ints);
    if (exact_hypotheses(m, cfg)) return m;
  }
  return std::nullopt;
}

ConjectureVerdict test_conjecture(const ExactMatrix& a, const LabelledTree& tree, bool augmented) {
  if (a.size() != static_cast<std::size_t>(tree.size())) {
    throw DimensionError("matrix size does not match the tree");
  }
  ConjectureVerdict v;
  v.augmented = augmented;
  if (augmented) {
    v.hypotheses = pendant_deletion_hypothesis(a, tree);
    v.hypotheses_hold = v.hypotheses.verdict();
  } else {
    v.hypotheses.ttp = is_t_tp(a, tree);
    v.hypotheses_hold = v.hypotheses.ttp.verdict;
  }
  if (a.size() >= 2) {
    v.adjoint = check_adjoint_conclusion(a, tree);
  } else {
    v.adjoint.verdict = true;
    v.adjoint.adjugate = ExactMatrix::identity(1);
  }
  SmallestEigenvalue smallest;
  try {
    v.spectral = smallest_eig_vector(a, tree);
    smallest = v.spectral->smallest;
    v.eigenvector_signed = v.spectral->signed_ok == Signed::Yes;
  } catch (const SpectralError& e) {
    v.spectral_error = e.what();
    smallest = smallest_eigenvalue(a);
  }
  v.smallest_real = smallest.is_real;
  v.smallest_simple = smallest.is_simple;
  v.ambiguous = smallest.ambiguous;
  v.undecided = v.hypotheses_hold && v.ambiguous;
  v.counterexample = v.hypotheses_hold && !v.undecided && !v.conclusion_holds();
  return v;
}

VerdictSummary summarize(const ConjectureVerdict& v) {
  VerdictSummary s;
  s.ttp = v.hypotheses.ttp.verdict;
  s.pendants_ok = v.hypotheses.pendants_ok();
  s.hypotheses_hold = v.hypotheses_hold;
  s.adjoint_ok = v.adjoint.verdict;
  s.adjoint_mismatches = v.adjoint.mismatches;
  s.smallest_real = v.smallest_real;
  s.smallest_simple = v.smallest_simple;
  s.ambiguous = v.ambiguous;
  if (v.spectral) {
    s.smallest_re = v.spectral->smallest.value.real();
    s.smallest_im = v.spectral->smallest.value.imag();
    s.eigenvector = v.spectral->eigenvector_unit;
  }
  s.eigenvector_signed = v.eigenvector_signed;
  s.counterexample = v.counterexample;
  return s;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index) + 0x632be59bd9b4e019ULL));
}

unsigned default_threads() {
  if (const char* env = std::getenv("TTP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

BatchReport batch_verify(const GenConfig& cfg, std::size_t trials, unsigned threads) {
  return run_batch(cfg, trials, 3, threads);
}

BatchReport search_counterexamples(const GenConfig& cfg, std::size_t trials, std::size_t keep,
                                   unsigned threads) {
  return run_batch(cfg, trials, keep, threads);
}

std::vector<TreeSweepEntry> sweep_trees(int n, const GenConfig& cfg, std::size_t trials_per_tree,
                                        std::size_t keep, unsigned threads) {
  if (n < 2 || n > 7) throw DimensionError("tree sweeps support 2 <= n <= 7");
  std::vector<TreeSweepEntry> out;
  LabelledTreeEnumerator trees(n);
  while (auto tree = trees.next()) {
    GenConfig c = cfg;
    c.tree = *tree;
    out.push_back({*tree, search_counterexamples(c, trials_per_tree, keep, threads)});
  }
  return out;
}

}  // namespace ttp
