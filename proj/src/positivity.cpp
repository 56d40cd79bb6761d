#include "ttp/positivity.hpp"

#include <algorithm>
#include <tuple>

#include "ttp/errors.hpp"

namespace ttp {

namespace {

void require_tree_size(const ExactMatrix& a, const LabelledTree& tree) {
  if (a.size() != static_cast<std::size_t>(tree.size())) {
    throw DimensionError("matrix is " + std::to_string(a.size()) + "x" +
                         std::to_string(a.size()) + " but the tree has " +
                         std::to_string(tree.size()) + " vertices");
  }
}

// Calls visit(subset) for every k-subset of 1..n in lexicographic order
// until it returns false. Returns false if stopped early.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    if (!visit(idx)) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos + 1) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

IndexList relabel(const IndexList& positions, const IndexList& labels) {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(labels[p - 1]);
  return IndexList(std::move(out));
}

MinorWitness relabel(const MinorWitness& w, const IndexList& labels) {
  return MinorWitness{relabel(w.rows, labels), relabel(w.cols, labels), w.value};
}

TpReport tp_all_minors(const ExactMatrix& m) {
  TpReport report;
  const int n = static_cast<int>(m.size());
  for (int k = 1; k <= n && report.verdict; ++k) {
    for_each_subset(n, k, [&](const std::vector<int>& rows) {
      IndexList r(rows);
      return for_each_subset(n, k, [&](const std::vector<int>& cols) {
        IndexList c(cols);
        Rational v = minor(m, r, c);
        ++report.minors_checked;
        if (v <= 0) {
          report.verdict = false;
          report.witness = MinorWitness{r, c, std::move(v)};
          return false;
        }
        return true;
      });
    });
  }
  return report;
}

TpReport tp_initial_minors(const ExactMatrix& m) {
  const int n = static_cast<int>(m.size());
  // The minor ending at (i,j) and extending up-left as far as possible.
  std::vector<std::tuple<int, IndexList, IndexList>> minors;
  minors.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int k = std::min(i, j);
      minors.emplace_back(k, IndexList::iota(k, i - k + 1), IndexList::iota(k, j - k + 1));
    }
  std::ranges::sort(minors);
  TpReport report;
  for (const auto& [k, rows, cols] : minors) {
    Rational v = minor(m, rows, cols);
    ++report.minors_checked;
    if (v <= 0) {
      report.verdict = false;
      report.witness = MinorWitness{rows, cols, std::move(v)};
      break;
    }
  }
  return report;
}

}  // namespace

bool HypothesisReport::pendants_ok() const {
  return std::ranges::all_of(pendants, [](const PendantResult& p) { return p.report.verdict; });
}

TpReport is_tp(const ExactMatrix& m, TpMode mode) {
  return mode == TpMode::AllMinors ? tp_all_minors(m) : tp_initial_minors(m);
}

ExactMatrix path_matrix(const ExactMatrix& a, const TreePath& path) {
  return submatrix(a, path.vertices, path.vertices);
}

TtpReport is_t_tp(const ExactMatrix& a, const LabelledTree& tree, TpMode mode) {
  require_tree_size(a, tree);
  TtpReport report;
  if (tree.size() == 1) {
    // The single vertex is the only path.
    TreePath p{IndexList{1}};
    report.paths.push_back({p, is_tp(a, mode)});
  } else {
    for (auto& path : maximal_paths(tree)) {
      TpReport r = is_tp(path_matrix(a, path), mode);
      if (r.witness) r.witness = relabel(*r.witness, path.vertices);
      report.paths.push_back({std::move(path), std::move(r)});
    }
  }
  for (std::size_t k = 0; k < report.paths.size(); ++k) {
    if (!report.paths[k].report.verdict) {
      report.verdict = false;
      report.first_failure = k;
      break;
    }
  }
  return report;
}

PMatrixReport is_p_matrix(const ExactMatrix& m) {
  PMatrixReport report;
  const int n = static_cast<int>(m.size());
  for (int k = 1; k <= n && report.verdict; ++k) {
    for_each_subset(n, k, [&](const std::vector<int>& s) {
      IndexList idx(s);
      Rational v = minor(m, idx, idx);
      ++report.minors_checked;
      if (v <= 0) {
        report.verdict = false;
        report.witness = MinorWitness{idx, idx, std::move(v)};
        return false;
      }
      return true;
    });
  }
  return report;
}

HypothesisReport pendant_deletion_hypothesis(const ExactMatrix& a, const LabelledTree& tree,
                                             TpMode mode) {
  HypothesisReport report;
  report.ttp = is_t_tp(a, tree, mode);
  const auto all = IndexList::iota(tree.size());
  for (int p : pendant_vertices(tree)) {
    PendantResult r;
    r.pendant = p;
    r.kept = all.without(p);
    r.report = is_p_matrix(submatrix(a, r.kept, r.kept));
    if (r.report.witness) r.report.witness = relabel(*r.report.witness, r.kept);
    report.pendants.push_back(std::move(r));
  }
  return report;
}

SignMatrix predicted_adjoint_sign(const LabelledTree& tree) {
  const auto s = tree_signing(tree, 1);
  const std::size_t n = s.size();
  std::vector<std::int8_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = static_cast<std::int8_t>(s[i] * s[j]);
  return SignMatrix(n, std::move(out));
}

AdjointCheck check_adjoint_conclusion(const ExactMatrix& a, const LabelledTree& tree) {
  require_tree_size(a, tree);
  AdjointCheck check;
  check.adjugate = adjugate(a);
  const auto predicted = predicted_adjoint_sign(tree);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sign(check.adjugate(i, j)) != predicted(i, j)) {
        check.mismatches.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
      }
    }
  check.verdict = check.mismatches.empty();
  return check;
}

}  // namespace ttp
