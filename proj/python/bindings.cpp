#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ttp/conjecture.hpp"
#include "ttp/errors.hpp"
#include "ttp/exact_matrix.hpp"
#include "ttp/fixtures.hpp"
#include "ttp/matrix_io.hpp"
#include "ttp/positivity.hpp"
#include "ttp/report_json.hpp"
#include "ttp/spectral.hpp"
#include "ttp/tree.hpp"

namespace py = pybind11;
using namespace ttp;

namespace {

// Entries may be int, Fraction, or "p/q" strings; str() of each is parsed.
ExactMatrix to_matrix(const py::sequence& rows) {
  const std::size_t n = py::len(rows);
  std::vector<Rational> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    const auto seq = row.cast<py::sequence>();
    if (py::len(seq) != n) throw DimensionError("matrix must be square");
    for (const auto& x : seq) entries.push_back(parse_rational(py::str(x).cast<std::string>()));
  }
  return ExactMatrix(n, std::move(entries));
}

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

py::list to_rows(const ExactMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.size(); ++j) row.append(fraction(m(i, j)));
    rows.append(row);
  }
  return rows;
}

// A tree spec string ("star:5", "pitchfork", ...) or an (n, edges) pair.
LabelledTree to_tree(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return parse_tree_spec(obj.cast<std::string>());
  const auto pair = obj.cast<std::pair<int, std::vector<Edge>>>();
  return LabelledTree::validate(pair.first, pair.second);
}

TpMode to_mode(const std::string& mode) {
  if (mode == "initial") return TpMode::InitialMinors;
  if (mode == "all") return TpMode::AllMinors;
  throw std::invalid_argument("mode must be 'initial' or 'all'");
}

std::vector<int> labels(const IndexList& l) { return {l.begin(), l.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tree total positivity toolkit";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("det", [](const py::sequence& a) { return fraction(det(to_matrix(a))); });
  m.def("adjugate", [](const py::sequence& a) { return to_rows(adjugate(to_matrix(a))); });
  m.def(
      "minor",
      [](const py::sequence& a, std::vector<int> rows, std::vector<int> cols) {
        return fraction(minor(to_matrix(a), IndexList(std::move(rows)), IndexList(std::move(cols))));
      },
      py::arg("matrix"), py::arg("rows"), py::arg("cols"));
  m.def(
      "sylvester_rhs",
      [](const py::sequence& a, std::vector<int> alpha, std::vector<int> beta) {
        return fraction(sylvester_rhs(to_matrix(a), IndexList(std::move(alpha)), IndexList(std::move(beta))));
      },
      py::arg("matrix"), py::arg("alpha"), py::arg("beta"));
  m.def("char_poly", [](const py::sequence& a) {
    const Polynomial p = char_poly(to_matrix(a));
    py::list out;
    for (const auto& c : p.coefficients()) out.append(fraction(c));
    return out;
  });
  m.def("parse_matrix", [](const std::string& text) { return to_rows(parse_matrix(text)); });
  m.def("format_matrix", [](const py::sequence& a) { return format_matrix(to_matrix(a)); });

  m.def(
      "is_tp",
      [](const py::sequence& a, const std::string& mode) { return to_json(is_tp(to_matrix(a), to_mode(mode))).dump(); },
      py::arg("matrix"), py::arg("mode") = "initial");
  m.def(
      "is_t_tp",
      [](const py::sequence& a, const py::object& tree, const std::string& mode) {
        return to_json(is_t_tp(to_matrix(a), to_tree(tree), to_mode(mode))).dump();
      },
      py::arg("matrix"), py::arg("tree"), py::arg("mode") = "initial");
  m.def(
      "check",
      [](const py::sequence& a, const py::object& tree, bool augmented, const std::string& mode) {
        const ExactMatrix mat = to_matrix(a);
        const LabelledTree t = to_tree(tree);
        const TpMode md = to_mode(mode);
        HypothesisReport h;
        if (augmented)
          h = pendant_deletion_hypothesis(mat, t, md);
        else
          h.ttp = is_t_tp(mat, t, md);
        return to_json(make_check_report(h, augmented, md)).dump();
      },
      py::arg("matrix"), py::arg("tree"), py::arg("augmented") = false, py::arg("mode") = "initial");
  m.def("is_p_matrix", [](const py::sequence& a) { return to_json(is_p_matrix(to_matrix(a))).dump(); });
  m.def("adjoint_mismatches", [](const py::sequence& a, const py::object& tree) {
    return check_adjoint_conclusion(to_matrix(a), to_tree(tree)).mismatches;
  });
  m.def("smallest_eig_vector", [](const py::sequence& a, const py::object& tree) {
    return to_json(smallest_eig_vector(to_matrix(a), to_tree(tree))).dump();
  });
  m.def(
      "test_conjecture",
      [](const py::sequence& a, const py::object& tree, bool augmented) {
        return to_json(summarize(test_conjecture(to_matrix(a), to_tree(tree), augmented))).dump();
      },
      py::arg("matrix"), py::arg("tree"), py::arg("augmented") = false);

  m.def(
      "search",
      [](const py::object& tree, std::size_t trials, std::uint64_t seed, std::int64_t lo, std::int64_t hi,
         bool augmented, bool symmetric, bool repair, std::size_t keep, std::size_t max_attempts,
         unsigned threads) {
        GenConfig cfg;
        cfg.tree = to_tree(tree);
        cfg.seed = seed;
        cfg.lo = lo;
        cfg.hi = hi;
        cfg.augmented = augmented;
        cfg.symmetric = symmetric;
        cfg.repair = repair;
        cfg.max_attempts = max_attempts;
        cfg.validate();
        py::gil_scoped_release release;
        return to_json(search_counterexamples(cfg, trials, keep, threads ? threads : default_threads())).dump();
      },
      py::arg("tree"), py::arg("trials"), py::arg("seed") = 0, py::arg("lo") = 1, py::arg("hi") = 150,
      py::arg("augmented") = false, py::arg("symmetric") = false, py::arg("repair") = true,
      py::arg("keep") = 3, py::arg("max_attempts") = 50, py::arg("threads") = 1);

  m.def(
      "tree_signing", [](const py::object& tree, int anchor) { return tree_signing(to_tree(tree), anchor); },
      py::arg("tree"), py::arg("anchor") = 1);
  m.def("tree_edges", [](const py::object& tree) { return to_tree(tree).edges(); });
  m.def("maximal_paths", [](const py::object& tree) {
    std::vector<std::vector<int>> out;
    for (const auto& p : maximal_paths(to_tree(tree))) out.push_back(labels(p.vertices));
    return out;
  });
  m.def("enumerate_trees", [](int n) {
    std::vector<std::vector<Edge>> out;
    for (const auto& t : enumerate_labelled_trees(n)) out.push_back(t.edges());
    return out;
  });

  m.def("fixture_names", &fixture_names);
  m.def("fixture_matrix", [](const std::string& name) { return to_rows(fixture(name).matrix); });
  m.def("fixture_tree", [](const std::string& name) {
    const auto& t = fixture(name).tree;
    return std::make_pair(t.size(), t.edges());
  });
  m.def("reproduce", [](const std::string& name) {
    const Reproduction rep = reproduce(fixture(name));
    py::list lines;
    for (const auto& l : rep.lines) lines.append(py::make_tuple(l.what, l.ok, l.detail));
    return py::make_tuple(rep.ok, lines);
  });
}
