#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "ttp/conjecture.hpp"
#include "ttp/errors.hpp"
#include "ttp/fixtures.hpp"
#include "ttp/matrix_io.hpp"
#include "ttp/positivity.hpp"
#include "ttp/report_json.hpp"
#include "ttp/spectral.hpp"
#include "ttp/tree.hpp"

namespace {

using namespace ttp;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const Fixture* find_fixture(const std::string& name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return &f;
  }
  // Short aliases: star4, star5, pitchfork.
  for (const auto& f : fixtures()) {
    if (f.name.rfind(name + "-", 0) == 0) return &f;
  }
  return nullptr;
}

struct Input {
  ExactMatrix matrix;
  std::optional<LabelledTree> tree;
};

// A matrix file, '-' for stdin, or the name of an embedded fixture (which
// also supplies a default tree).
Input load_matrix(const std::string& source) {
  if (source == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return {parse_matrix(text), std::nullopt};
  }
  std::string name = source;
  if (name.rfind("fixture:", 0) == 0) name = name.substr(8);
  if (name == source && std::filesystem::exists(source)) {
    return {read_matrix_file(source), std::nullopt};
  }
  if (const Fixture* f = find_fixture(name)) return {f->matrix, f->tree};
  throw UsageError("no such matrix file or fixture: " + source);
}

LabelledTree resolve_tree(const std::string& spec, const std::optional<LabelledTree>& fallback) {
  if (!spec.empty()) return parse_tree_spec(spec);
  if (fallback) return *fallback;
  throw UsageError("--tree is required for this matrix");
}

void require_size(const ExactMatrix& a, const LabelledTree& t) {
  if (static_cast<int>(a.size()) != t.size()) {
    throw DimensionError("matrix is " + std::to_string(a.size()) + "x" + std::to_string(a.size()) +
                         " but the tree has " + std::to_string(t.size()) + " vertices");
  }
}

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string fixed(std::complex<double> z, int precision) {
  if (z.imag() == 0.0) return fixed(z.real(), precision);
  return fixed(z.real(), precision) + (z.imag() < 0 ? " - " : " + ") +
         fixed(std::abs(z.imag()), precision) + "i";
}

std::string vector_text(const std::vector<double>& v, int precision) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += fixed(v[k], precision);
  }
  return s + ")";
}

std::string witness_text(const MinorWitness& w) {
  return "det A[" + to_string(w.rows) + ";" + to_string(w.cols) + "] = " + to_string(w.value);
}

std::string pairs_text(const std::vector<std::pair<int, int>>& pairs) {
  std::string s;
  for (const auto& [i, j] : pairs) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return s.empty() ? "none" : s;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// ---- check ----------------------------------------------------------------

struct CheckArgs {
  std::string matrix;
  std::string tree;
  std::string mode = "initial";
  bool augmented = false;
  bool json = false;
};

int run_check(const CheckArgs& args) {
  const Input in = load_matrix(args.matrix);
  const LabelledTree tree = resolve_tree(args.tree, in.tree);
  require_size(in.matrix, tree);
  const TpMode mode = args.mode == "all" ? TpMode::AllMinors : TpMode::InitialMinors;

  HypothesisReport report;
  if (args.augmented) {
    report = pendant_deletion_hypothesis(in.matrix, tree, mode);
  } else {
    report.ttp = is_t_tp(in.matrix, tree, mode);
  }
  const CheckReport check = make_check_report(report, args.augmented, mode);

  if (args.json) {
    print_json(to_json(check));
    return check.verdict ? kPass : kFail;
  }
  std::cout << "T-TP (" << report.ttp.paths.size() << " maximal paths): "
            << (report.ttp.verdict ? "yes" : "no") << "\n";
  for (const auto& p : report.ttp.paths) {
    if (p.report.verdict) continue;
    std::cout << "  path " << to_string(p.path.vertices) << " fails: " << witness_text(*p.report.witness)
              << "\n";
  }
  if (args.augmented) {
    for (const auto& p : report.pendants) {
      std::cout << "pendant " << p.pendant << " deleted, block " << to_string(p.kept)
                << " P-matrix: " << (p.report.verdict ? "yes" : "no");
      if (!p.report.verdict) std::cout << " (" << witness_text(*p.report.witness) << ")";
      std::cout << "\n";
    }
  }
  std::cout << "verdict: " << (check.verdict ? "pass" : "fail") << "\n";
  return check.verdict ? kPass : kFail;
}

// ---- adjoint --------------------------------------------------------------

struct AdjointArgs {
  std::string matrix;
  std::string tree;
};

int run_adjoint(const AdjointArgs& args) {
  const Input in = load_matrix(args.matrix);
  if (args.tree.empty()) {
    if (in.matrix.size() < 2) throw DimensionError("adjugate needs n >= 2");
    std::cout << format_matrix(adjugate(in.matrix));
    return kPass;
  }
  const LabelledTree tree = parse_tree_spec(args.tree);
  require_size(in.matrix, tree);
  const AdjointCheck check = check_adjoint_conclusion(in.matrix, tree);
  std::cout << format_matrix(check.adjugate);
  std::cout << "det = " << to_string(det(in.matrix)) << "\n";
  std::cout << "predicted signs " << to_string(tree_signing(tree)) << " outer product; mismatches: "
            << pairs_text(check.mismatches) << "\n";
  return check.verdict ? kPass : kFail;
}

// ---- spectrum -------------------------------------------------------------

struct SpectrumArgs {
  std::string matrix;
  std::string tree;
  int precision = 2;
  bool json = false;
};

int run_spectrum(const SpectrumArgs& args) {
  const Input in = load_matrix(args.matrix);
  const LabelledTree tree = resolve_tree(args.tree, in.tree);
  require_size(in.matrix, tree);
  const SpectralSummary s = smallest_eig_vector(in.matrix, tree);
  if (args.json) {
    nlohmann::json j = to_json(s);
    j["schema"] = kReportSchemaVersion;
    j["kind"] = "spectrum";
    print_json(j);
    return kPass;
  }
  const int p = args.precision;
  std::cout << "characteristic polynomial: " << to_string(s.char_poly) << "\n";
  std::cout << "eigenvalues:";
  for (const auto& z : s.spectrum.roots) std::cout << "  " << fixed(z, p);
  std::cout << "\n";
  std::cout << "smallest eigenvalue: " << fixed(s.smallest.value, p)
            << (s.smallest.is_real ? " (real" : " (non-real")
            << (s.smallest.is_simple ? ", simple" : "")
            << (s.smallest.ambiguous ? ", modulus tie" : "") << ")\n";
  if (!s.eigenvector_last_one.empty()) {
    std::cout << "eigenvector (last entry 1): " << vector_text(s.eigenvector_last_one, p) << "\n";
  }
  if (!s.eigenvector_unit.empty()) {
    std::cout << "eigenvector (unit): " << vector_text(s.eigenvector_unit, p) << "\n";
  }
  std::cout << "method: " << to_string(s.method) << "\n";
  std::cout << "signed according to tree " << to_string(tree_signing(tree)) << ": "
            << to_string(s.signed_ok);
  if (s.signing.violated_edge) {
    std::cout << " (edge " << s.signing.violated_edge->first << "-" << s.signing.violated_edge->second
              << ")";
  } else if (s.signing.zero_vertex) {
    std::cout << " (zero entry at " << *s.signing.zero_vertex << ")";
  }
  std::cout << "\n";
  return kPass;
}

// ---- signing --------------------------------------------------------------

int run_signing(const std::string& tree_spec, int anchor) {
  const LabelledTree tree = parse_tree_spec(tree_spec);
  if (anchor < 1 || anchor > tree.size()) throw UsageError("--anchor out of range");
  std::cout << to_string(tree_signing(tree, anchor)) << "\n";
  return kPass;
}

// ---- conjecture / sweep ---------------------------------------------------

struct BatchArgs {
  std::string tree = "star:4";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string range = "1:150";
  bool augmented = false;
  bool symmetric = false;
  bool no_repair = false;
  std::size_t keep = 3;
  std::size_t max_attempts = 50;
  unsigned threads = 0;
  bool json = false;
  int n = 5;
};

GenConfig make_config(const BatchArgs& args, LabelledTree tree) {
  GenConfig cfg;
  cfg.tree = std::move(tree);
  const auto colon = args.range.find(':');
  if (colon == std::string::npos) throw UsageError("--range must be lo:hi");
  try {
    cfg.lo = std::stoll(args.range.substr(0, colon));
    cfg.hi = std::stoll(args.range.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--range must be lo:hi with integer bounds");
  }
  cfg.seed = args.seed;
  cfg.max_attempts = args.max_attempts;
  cfg.augmented = args.augmented;
  cfg.symmetric = args.symmetric;
  cfg.repair = !args.no_repair;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

void print_batch(const BatchReport& r) {
  std::cout << "trials " << r.trials << ", generated " << r.generated << ", hypotheses hold "
            << r.hypothesis_pass << ", adjugate signs ok " << r.adjoint_pass << ", conclusion holds "
            << r.conclusion_pass << ", counterexamples " << r.counterexamples << ", undecided "
            << r.undecided << "\n";
}

int run_conjecture(const BatchArgs& args) {
  const GenConfig cfg = make_config(args, parse_tree_spec(args.tree));
  const unsigned threads = args.threads ? args.threads : default_threads();
  const BatchReport r = search_counterexamples(cfg, args.trials, args.keep, threads);
  if (args.json) {
    print_json(to_json(r));
  } else {
    print_batch(r);
    for (const auto& e : r.exemplars) {
      std::cout << "\ncounterexample at trial " << e.trial << ":\n" << format_matrix(e.matrix);
      std::cout << "smallest eigenvalue " << fixed(std::complex<double>(e.verdict.smallest_re, e.verdict.smallest_im), 4)
                << ", unit eigenvector " << vector_text(e.verdict.eigenvector, 4)
                << ", adjugate sign mismatches " << pairs_text(e.verdict.adjoint_mismatches) << "\n";
    }
  }
  return r.counterexamples == 0 ? kPass : kFail;
}

int run_sweep(const BatchArgs& args) {
  if (args.n < 2 || args.n > 7) throw UsageError("--n must be between 2 and 7");
  const GenConfig cfg = make_config(args, make_star(args.n));
  const unsigned threads = args.threads ? args.threads : default_threads();
  const auto entries = sweep_trees(args.n, cfg, args.trials, args.keep, threads);
  std::size_t with_counterexample = 0;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries) {
    if (e.report.counterexamples) ++with_counterexample;
    if (args.json) {
      out.push_back({{"edges", e.tree.edges()}, {"report", to_json(e.report)}});
      continue;
    }
    std::string edges;
    for (const auto& [u, v] : e.tree.edges()) {
      edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
    }
    std::cout << edges << ": ";
    print_batch(e.report);
  }
  if (args.json) {
    print_json({{"schema", kReportSchemaVersion}, {"kind", "sweep"}, {"trees", out}});
  } else {
    std::cout << with_counterexample << " of " << entries.size()
              << " trees admit a counterexample in this run\n";
  }
  return kPass;
}

// ---- reproduce / trees ----------------------------------------------------

int run_reproduce(const std::string& name) {
  std::vector<const Fixture*> selected;
  if (name == "all") {
    for (const auto& f : fixtures()) selected.push_back(&f);
  } else if (const Fixture* f = find_fixture(name)) {
    selected.push_back(f);
  } else {
    throw UsageError("unknown fixture '" + name + "'");
  }
  bool ok = true;
  for (const Fixture* f : selected) {
    const Reproduction rep = reproduce(*f);
    std::cout << rep.fixture << ":\n";
    for (const auto& line : rep.lines) {
      std::cout << "  [" << (line.ok ? "ok" : "MISMATCH") << "] " << line.what;
      if (!line.detail.empty()) std::cout << ": " << line.detail;
      std::cout << "\n";
    }
    ok = ok && rep.ok;
  }
  return ok ? kPass : kFail;
}

int run_trees(int n, bool count_only) {
  if (n < 2 || n > 8) throw UsageError("--n must be between 2 and 8");
  LabelledTreeEnumerator it(n);
  if (count_only) {
    std::cout << it.count() << "\n";
    return kPass;
  }
  while (auto t = it.next()) {
    std::string line;
    for (const auto& [u, v] : t->edges()) {
      line += (line.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
    }
    std::cout << line << "\n";
  }
  return kPass;
}

void add_batch_options(CLI::App* cmd, BatchArgs& args) {
  cmd->add_option("--trials", args.trials, "Number of candidates to generate")->capture_default_str();
  cmd->add_option("--seed", args.seed, "Base seed")->capture_default_str();
  cmd->add_option("--range", args.range, "Entry range lo:hi")->capture_default_str();
  cmd->add_flag("--augmented", args.augmented, "Also require the pendant-deletion P-matrix hypothesis");
  cmd->add_flag("--symmetric", args.symmetric, "Generate symmetric matrices");
  cmd->add_flag("--no-repair", args.no_repair, "Plain rejection sampling, no hill-climb repair");
  cmd->add_option("--keep", args.keep, "Counterexamples to store")->capture_default_str();
  cmd->add_option("--max-attempts", args.max_attempts, "Draws per trial before giving up")
      ->capture_default_str();
  cmd->add_option("--threads", args.threads, "Worker threads (default: TTP_THREADS or all cores)");
  cmd->add_flag("--json", args.json, "JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree total positivity toolkit"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Verify T-TP (and the pendant-deletion hypothesis)");
  c->add_option("matrix", check.matrix, "Matrix file, '-' or fixture name")->required();
  c->add_option("--tree", check.tree, "Tree spec: star:n[:c], path:n, pitchfork, file:<path>");
  c->add_option("--mode", check.mode, "Minor set: initial or all")
      ->check(CLI::IsMember({"initial", "all"}))
      ->capture_default_str();
  c->add_flag("--augmented", check.augmented, "Also check the pendant-deletion hypothesis");
  c->add_flag("--json", check.json, "JSON report");

  AdjointArgs adj;
  auto* a = app.add_subcommand("adjoint", "Exact adjugate; with --tree, compare its signs");
  a->add_option("matrix", adj.matrix, "Matrix file, '-' or fixture name")->required();
  a->add_option("--tree", adj.tree, "Tree spec");

  SpectrumArgs spec;
  auto* s = app.add_subcommand("spectrum", "Smallest eigenvalue, eigenvector and its signing");
  s->add_option("matrix", spec.matrix, "Matrix file, '-' or fixture name")->required();
  s->add_option("--tree", spec.tree, "Tree spec");
  s->add_option("--precision", spec.precision, "Decimals in printed eigen data")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();
  s->add_flag("--json", spec.json, "JSON report");

  std::string signing_tree;
  int anchor = 1;
  auto* g = app.add_subcommand("signing", "Sign vector alternating across the tree's edges");
  g->add_option("--tree", signing_tree, "Tree spec")->required();
  g->add_option("--anchor", anchor, "Vertex given sign +")->capture_default_str();

  BatchArgs batch;
  auto* j = app.add_subcommand("conjecture", "Generate hypothesis-satisfying matrices and test them");
  j->add_option("--tree", batch.tree, "Tree spec")->capture_default_str();
  add_batch_options(j, batch);

  BatchArgs sweep;
  sweep.trials = 20;
  sweep.keep = 1;
  auto* w = app.add_subcommand("sweep", "Run the search over every labelled tree on n vertices");
  w->add_option("--n", sweep.n, "Vertices (2..7)")->capture_default_str();
  add_batch_options(w, sweep);

  std::string fixture_name;
  auto* r = app.add_subcommand("reproduce", "Recompute an embedded example and compare");
  r->add_option("fixture", fixture_name, "Fixture name or 'all'")->required();

  int tree_n = 4;
  bool count_only = false;
  auto* t = app.add_subcommand("trees", "List every labelled tree on n vertices");
  t->add_option("--n", tree_n, "Vertices (2..8)")->capture_default_str();
  t->add_flag("--count", count_only, "Print only the number of trees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*c) return run_check(check);
    if (*a) return run_adjoint(adj);
    if (*s) return run_spectrum(spec);
    if (*g) return run_signing(signing_tree, anchor);
    if (*j) return run_conjecture(batch);
    if (*w) return run_sweep(sweep);
    if (*r) return run_reproduce(fixture_name);
    if (*t) return run_trees(tree_n, count_only);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kUsage;
  } catch (const TreeError& e) {
    std::cerr << "tree error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpectralError& e) {
    std::cerr << "spectral error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
