#include "ttp/tree.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

#include "ttp/errors.hpp"

namespace ttp {

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

LabelledTree::LabelledTree(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(n)) {
  for (const auto& [u, v] : edges_) {
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
  }
  for (auto& adj : adjacency_) std::ranges::sort(adj);
}

LabelledTree LabelledTree::validate(int n, std::span<const Edge> edges) {
  if (n < 1) throw TreeError("a tree needs at least one vertex");
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw TreeError("edge " + edge_text({u, v}) + " has a label outside 1.." +
                      std::to_string(n));
    }
    if (u == v) throw TreeError("self-loop at vertex " + std::to_string(u));
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::ranges::sort(normalized);
  if (auto dup = std::ranges::adjacent_find(normalized); dup != normalized.end()) {
    throw TreeError("duplicate edge " + edge_text(*dup));
  }
  if (normalized.size() != static_cast<std::size_t>(n - 1)) {
    throw TreeError("a tree on " + std::to_string(n) + " vertices has " +
                    std::to_string(n - 1) + " edges, got " + std::to_string(normalized.size()));
  }
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : normalized) {
    const int a = find_root(parent, e.first);
    const int b = find_root(parent, e.second);
    if (a == b) {
      throw TreeError("edge " + edge_text(e) + " closes a cycle, so the graph is disconnected");
    }
    parent[a] = b;
  }
  return LabelledTree(n, std::move(normalized));
}

bool LabelledTree::adjacent(int u, int v) const {
  return std::ranges::binary_search(adjacency_[u - 1], v);
}

LabelledTree make_star(int n, int center) {
  if (n < 2) throw TreeError("a star needs at least 2 vertices");
  if (center < 1 || center > n) throw TreeError("star center out of range");
  std::vector<Edge> edges;
  for (int v = 1; v <= n; ++v) {
    if (v != center) edges.emplace_back(center, v);
  }
  return LabelledTree::validate(n, edges);
}

LabelledTree make_path(const IndexList& labels) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) throw TreeError("a path needs at least one vertex");
  if (labels.max() > n) throw TreeError("path labels must be exactly 1..n");
  std::vector<Edge> edges;
  for (int k = 0; k + 1 < n; ++k) edges.emplace_back(labels[k], labels[k + 1]);
  return LabelledTree::validate(n, edges);
}

LabelledTree make_path(int n) { return make_path(IndexList::iota(n)); }

LabelledTree make_pitchfork() {
  const std::vector<Edge> edges{{1, 2}, {1, 3}, {1, 4}, {4, 5}};
  return LabelledTree::validate(5, edges);
}

IndexList pendant_vertices(const LabelledTree& tree) {
  std::vector<int> out;
  for (int v = 1; v <= tree.size(); ++v) {
    if (tree.degree(v) == 1) out.push_back(v);
  }
  return IndexList(std::move(out));
}

IndexList path_between(const LabelledTree& tree, int from, int to) {
  const int n = tree.size();
  if (from < 1 || from > n || to < 1 || to > n) throw DimensionError("vertex out of range");
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  parent[from] = from;
  std::queue<int> queue;
  queue.push(from);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    if (u == to) break;
    for (int w : tree.neighbours(u)) {
      if (parent[w] == 0) {
        parent[w] = u;
        queue.push(w);
      }
    }
  }
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::ranges::reverse(path);
  return IndexList(std::move(path));
}

std::vector<TreePath> maximal_paths(const LabelledTree& tree) {
  if (tree.size() < 2) throw DimensionError("maximal paths need n >= 2");
  const auto leaves = pendant_vertices(tree);
  std::vector<TreePath> out;
  for (std::size_t a = 0; a < leaves.size(); ++a)
    for (std::size_t b = a + 1; b < leaves.size(); ++b)
      out.push_back(TreePath{path_between(tree, leaves[a], leaves[b])});
  std::ranges::sort(out);
  return out;
}

SignVector tree_signing(const LabelledTree& tree, int anchor) {
  const int n = tree.size();
  if (anchor < 1 || anchor > n) throw DimensionError("anchor out of range");
  SignVector s(static_cast<std::size_t>(n), 0);
  s[anchor - 1] = 1;
  std::queue<int> queue;
  queue.push(anchor);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int w : tree.neighbours(u)) {
      if (s[w - 1] == 0) {
        s[w - 1] = -s[u - 1];
        queue.push(w);
      }
    }
  }
  return s;
}

SigningVerdict is_signed_according_to(std::span<const double> v, const LabelledTree& tree) {
  if (v.size() != static_cast<std::size_t>(tree.size())) {
    throw DimensionError("vector length does not match the tree");
  }
  SigningVerdict verdict;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) {
      verdict.zero_vertex = static_cast<int>(i) + 1;
      break;
    }
  }
  for (const auto& e : tree.edges()) {
    if (!(v[e.first - 1] * v[e.second - 1] < 0.0)) {
      verdict.violated_edge = e;
      break;
    }
  }
  verdict.ok = !verdict.zero_vertex && !verdict.violated_edge;
  return verdict;
}

LabelledTree tree_from_prufer(int n, std::span<const int> sequence) {
  if (n < 2) throw TreeError("Prüfer decoding needs n >= 2");
  if (sequence.size() != static_cast<std::size_t>(n - 2)) {
    throw TreeError("Prüfer sequence must have length n-2");
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int v : sequence) {
    if (v < 1 || v > n) throw TreeError("Prüfer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int v : sequence) {
    int leaf = 1;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  int u = 0;
  for (int w = 1; w <= n; ++w) {
    if (degree[w] == 1) {
      if (u == 0) {
        u = w;
      } else {
        edges.emplace_back(u, w);
        break;
      }
    }
  }
  return LabelledTree::validate(n, edges);
}

LabelledTreeEnumerator::LabelledTreeEnumerator(int n) : n_(n) {
  if (n < 2 || n > 8) throw DimensionError("tree enumeration supports 2 <= n <= 8");
  reset();
}

void LabelledTreeEnumerator::reset() {
  sequence_.assign(static_cast<std::size_t>(n_ - 2), 1);
  done_ = false;
}

long long LabelledTreeEnumerator::count() const {
  long long c = 1;
  for (int k = 0; k < n_ - 2; ++k) c *= n_;
  return c;
}

std::optional<LabelledTree> LabelledTreeEnumerator::next() {
  if (done_) return std::nullopt;
  auto tree = tree_from_prufer(n_, sequence_);
  // Odometer step; wrapping past the last digit ends the stream.
  std::size_t pos = sequence_.size();
  while (pos > 0) {
    --pos;
    if (sequence_[pos] < n_) {
      ++sequence_[pos];
      break;
    }
    sequence_[pos] = 1;
    if (pos == 0) done_ = true;
  }
  if (sequence_.empty()) done_ = true;
  return tree;
}

std::vector<LabelledTree> enumerate_labelled_trees(int n) {
  LabelledTreeEnumerator it(n);
  std::vector<LabelledTree> out;
  out.reserve(static_cast<std::size_t>(it.count()));
  while (auto t = it.next()) out.push_back(std::move(*t));
  return out;
}

LabelledTree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> n;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!n) {
      if (tokens.size() != 1) throw ParseError(where + "expected the vertex count");
      n = parse_int(tokens[0], "vertex count");
      continue;
    }
    if (tokens.size() != 2) throw ParseError(where + "expected an edge 'u v'");
    edges.emplace_back(parse_int(tokens[0], "vertex"), parse_int(tokens[1], "vertex"));
  }
  if (!n) throw ParseError("tree text has no vertex count");
  try {
    return LabelledTree::validate(*n, edges);
  } catch (const TreeError& e) {
    throw ParseError(std::string("invalid tree: ") + e.what());
  }
}

std::string format_tree(const LabelledTree& tree) {
  std::string out = std::to_string(tree.size()) + "\n";
  for (const auto& [u, v] : tree.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

LabelledTree parse_tree_spec(std::string_view spec) {
  std::vector<std::string_view> parts;
  if (spec.starts_with("file:")) {
    const std::string path(spec.substr(5));
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read tree file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tree(buf.str());
  }
  std::size_t start = 0;
  while (true) {
    const auto colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  try {
    if (parts[0] == "pitchfork" && parts.size() == 1) return make_pitchfork();
    if (parts[0] == "star" && (parts.size() == 2 || parts.size() == 3)) {
      const int n = parse_int(parts[1], "star size");
      const int center = parts.size() == 3 ? parse_int(parts[2], "star center") : 1;
      return make_star(n, center);
    }
    if (parts[0] == "path" && parts.size() == 2) return make_path(parse_int(parts[1], "path size"));
  } catch (const TreeError& e) {
    throw ParseError(std::string("invalid tree spec '") + std::string(spec) + "': " + e.what());
  }
  throw ParseError("unknown tree spec '" + std::string(spec) +
                   "' (expected star:<n>[:<center>], path:<n>, pitchfork or file:<path>)");
}

std::string to_string(const SignVector& signs) {
  std::string out = "(";
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (k) out += ',';
    out += signs[k] > 0 ? '+' : (signs[k] < 0 ? '-' : '0');
  }
  return out + ")";
}

}  // namespace ttp
