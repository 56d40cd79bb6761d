#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttp/index_list.hpp"

namespace ttp {

using Edge = std::pair<int, int>;

/// Tree on vertices 1..n. Edges are stored with the smaller label first and
/// sorted; validity (n-1 edges, connected, acyclic) is checked on
/// construction.
class LabelledTree {
 public:
  /// Throws TreeError on self-loops, out-of-range labels, duplicate edges,
  /// wrong edge count, cycles or disconnection.
  static LabelledTree validate(int n, std::span<const Edge> edges);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const std::vector<int>& neighbours(int vertex) const {
    return adjacency_[vertex - 1];
  }
  [[nodiscard]] int degree(int vertex) const {
    return static_cast<int>(adjacency_[vertex - 1].size());
  }
  [[nodiscard]] bool adjacent(int u, int v) const;

  friend bool operator==(const LabelledTree& a, const LabelledTree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  LabelledTree(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Vertices of an induced path, in path order, smaller endpoint first.
struct TreePath {
  IndexList vertices;

  friend bool operator==(const TreePath&, const TreePath&) = default;
  friend auto operator<=>(const TreePath&, const TreePath&) = default;
};

/// Entries in {+1, -1, 0}.
using SignVector = std::vector<int>;

struct SigningVerdict {
  bool ok = false;
  /// First vertex with a zero entry, when the vector is not totally nonzero.
  std::optional<int> zero_vertex;
  /// First tree edge whose endpoints do not have opposite signs.
  std::optional<Edge> violated_edge;
};

LabelledTree make_star(int n, int center = 1);
/// Path visiting `labels` in order.
LabelledTree make_path(const IndexList& labels);
/// Naturally labelled path 1-2-...-n.
LabelledTree make_path(int n);
/// Path 5-4-1 with prongs 2 and 3 at vertex 1.
LabelledTree make_pitchfork();

/// Degree-1 vertices, ascending.
IndexList pendant_vertices(const LabelledTree& tree);

/// Leaf-to-leaf paths in canonical orientation, sorted. Every path of the
/// tree is a subpath of one of these. Requires n >= 2.
std::vector<TreePath> maximal_paths(const LabelledTree& tree);

/// Vertices of the unique path from u to v, in order.
IndexList path_between(const LabelledTree& tree, int from, int to);

/// +1 at the anchor, alternating across every edge.
SignVector tree_signing(const LabelledTree& tree, int anchor = 1);

SigningVerdict is_signed_according_to(std::span<const double> v, const LabelledTree& tree);

/// Restartable enumeration of every labelled tree on 1..n (2 <= n <= 8)
/// through Prüfer sequences, in lexicographic order of the sequence.
class LabelledTreeEnumerator {
 public:
  explicit LabelledTreeEnumerator(int n);

  std::optional<LabelledTree> next();
  void reset();
  /// n^(n-2)
  [[nodiscard]] long long count() const;

 private:
  int n_;
  std::vector<int> sequence_;
  bool done_ = false;
};

std::vector<LabelledTree> enumerate_labelled_trees(int n);

/// Decodes a Prüfer sequence (length n-2, entries in 1..n).
LabelledTree tree_from_prufer(int n, std::span<const int> sequence);

// Tree text format: first non-comment line is n, then one "u v" edge per line.
LabelledTree parse_tree(std::string_view text);
std::string format_tree(const LabelledTree& tree);

/// `star:<n>[:<center>]`, `path:<n>`, `pitchfork` or `file:<path>`.
LabelledTree parse_tree_spec(std::string_view spec);

std::string to_string(const SignVector& signs);

}  // namespace ttp
