#include "ttp/report_json.hpp"

#include <cmath>

#include "ttp/errors.hpp"
#include "ttp/matrix_io.hpp"

namespace ttp {

using nlohmann::json;

namespace {

json indices(const IndexList& list) { return json(std::vector<int>(list.begin(), list.end())); }

json witness_json(const std::optional<MinorWitness>& w) {
  if (!w) return nullptr;
  return json{{"rows", indices(w->rows)}, {"cols", indices(w->cols)}, {"value", to_string(w->value)}};
}

std::optional<MinorWitness> witness_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return MinorWitness{IndexList(j.at("rows").get<std::vector<int>>()),
                      IndexList(j.at("cols").get<std::vector<int>>()),
                      parse_rational(j.at("value").get<std::string>())};
}

json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

void require_kind(const json& j, const char* kind) {
  if (j.at("schema").get<int>() != kReportSchemaVersion) {
    throw ParseError("unsupported report schema version");
  }
  if (j.at("kind").get<std::string>() != kind) {
    throw ParseError(std::string("expected a '") + kind + "' report");
  }
}

}  // namespace

json to_json(const TpReport& report) {
  return json{{"verdict", report.verdict},
              {"minors_checked", report.minors_checked},
              {"witness", witness_json(report.witness)}};
}

json to_json(const TtpReport& report) {
  json paths = json::array();
  for (const auto& p : report.paths) {
    json entry = to_json(p.report);
    entry["path"] = indices(p.path.vertices);
    paths.push_back(std::move(entry));
  }
  return json{{"verdict", report.verdict},
              {"paths", std::move(paths)},
              {"first_failure", report.first_failure ? json(*report.first_failure) : json(nullptr)}};
}

json to_json(const PMatrixReport& report) {
  return json{{"verdict", report.verdict},
              {"minors_checked", report.minors_checked},
              {"witness", witness_json(report.witness)}};
}

json to_json(const HypothesisReport& report) {
  json pendants = json::array();
  for (const auto& p : report.pendants) {
    json entry = to_json(p.report);
    entry["pendant"] = p.pendant;
    entry["kept"] = indices(p.kept);
    pendants.push_back(std::move(entry));
  }
  return json{{"verdict", report.verdict()}, {"ttp", to_json(report.ttp)}, {"pendants", std::move(pendants)}};
}

json to_json(const SpectralSummary& s) {
  json coeffs = json::array();
  for (const auto& c : s.char_poly.coefficients()) coeffs.push_back(to_string(c));
  json spectrum = json::array();
  for (const auto& z : s.spectrum.roots) spectrum.push_back(complex_json(z));
  json smallest{{"value", complex_json(s.smallest.value)},
                {"is_real", s.smallest.is_real},
                {"is_simple", s.smallest.is_simple},
                {"ambiguous", s.smallest.ambiguous},
                {"multiplicity", s.smallest.multiplicity},
                {"modulus_margin", number_or_null(s.smallest.modulus_margin)},
                {"interval", nullptr}};
  if (s.smallest.interval) {
    smallest["interval"] = json{{"lo", to_string(s.smallest.interval->lo)},
                                {"hi", to_string(s.smallest.interval->hi)}};
  }
  json complex_vec = json::array();
  for (const auto& z : s.eigenvector_complex) complex_vec.push_back(complex_json(z));
  json out{{"char_poly", std::move(coeffs)},
           {"char_poly_text", to_string(s.char_poly)},
           {"spectrum", std::move(spectrum)},
           {"spectrum_converged", s.spectrum.converged},
           {"smallest", std::move(smallest)},
           {"method", to_string(s.method)},
           {"eigenvector_unit", s.eigenvector_unit},
           {"eigenvector_last_one", s.eigenvector_last_one},
           {"eigenvector_complex", std::move(complex_vec)},
           {"residual", s.residual},
           {"signed_ok", to_string(s.signed_ok)},
           {"zero_vertex", s.signing.zero_vertex ? json(*s.signing.zero_vertex) : json(nullptr)},
           {"violated_edge", nullptr}};
  if (s.signing.violated_edge) {
    out["violated_edge"] = json::array({s.signing.violated_edge->first, s.signing.violated_edge->second});
  }
  return out;
}

json to_json(const VerdictSummary& v) {
  json mismatches = json::array();
  for (const auto& [i, j] : v.adjoint_mismatches) mismatches.push_back(json::array({i, j}));
  return json{{"ttp", v.ttp},
              {"pendants_ok", v.pendants_ok},
              {"hypotheses_hold", v.hypotheses_hold},
              {"adjoint_ok", v.adjoint_ok},
              {"adjoint_mismatches", std::move(mismatches)},
              {"smallest_real", v.smallest_real},
              {"smallest_simple", v.smallest_simple},
              {"ambiguous", v.ambiguous},
              {"smallest", json{{"re", v.smallest_re}, {"im", v.smallest_im}}},
              {"eigenvector", v.eigenvector},
              {"eigenvector_signed", v.eigenvector_signed},
              {"counterexample", v.counterexample}};
}

VerdictSummary verdict_summary_from_json(const json& j) {
  return guarded([&] {
    VerdictSummary v;
    v.ttp = j.at("ttp").get<bool>();
    v.pendants_ok = j.at("pendants_ok").get<bool>();
    v.hypotheses_hold = j.at("hypotheses_hold").get<bool>();
    v.adjoint_ok = j.at("adjoint_ok").get<bool>();
    for (const auto& m : j.at("adjoint_mismatches")) {
      v.adjoint_mismatches.emplace_back(m.at(0).get<int>(), m.at(1).get<int>());
    }
    v.smallest_real = j.at("smallest_real").get<bool>();
    v.smallest_simple = j.at("smallest_simple").get<bool>();
    v.ambiguous = j.at("ambiguous").get<bool>();
    v.smallest_re = j.at("smallest").at("re").get<double>();
    v.smallest_im = j.at("smallest").at("im").get<double>();
    v.eigenvector = j.at("eigenvector").get<std::vector<double>>();
    v.eigenvector_signed = j.at("eigenvector_signed").get<bool>();
    v.counterexample = j.at("counterexample").get<bool>();
    return v;
  });
}

json to_json(const BatchReport& r) {
  json exemplars = json::array();
  for (const auto& e : r.exemplars) {
    exemplars.push_back(json{{"trial", e.trial},
                             {"matrix", format_matrix(e.matrix)},
                             {"verdict", to_json(e.verdict)}});
  }
  const auto& c = r.config;
  return json{{"schema", kReportSchemaVersion},
              {"kind", "batch"},
              {"config",
               json{{"tree", c.tree},
                    {"lo", c.lo},
                    {"hi", c.hi},
                    {"seed", c.seed},
                    {"max_attempts", c.max_attempts},
                    {"augmented", c.augmented},
                    {"symmetric", c.symmetric},
                    {"repair", c.repair}}},
              {"trials", r.trials},
              {"generated", r.generated},
              {"hypothesis_pass", r.hypothesis_pass},
              {"adjoint_pass", r.adjoint_pass},
              {"conclusion_pass", r.conclusion_pass},
              {"counterexamples", r.counterexamples},
              {"undecided", r.undecided},
              {"exemplars", std::move(exemplars)}};
}

BatchReport batch_report_from_json(const json& j) {
  return guarded([&] {
    require_kind(j, "batch");
    BatchReport r;
    const auto& c = j.at("config");
    r.config.tree = c.at("tree").get<std::string>();
    r.config.lo = c.at("lo").get<std::int64_t>();
    r.config.hi = c.at("hi").get<std::int64_t>();
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.max_attempts = c.at("max_attempts").get<std::size_t>();
    r.config.augmented = c.at("augmented").get<bool>();
    r.config.symmetric = c.at("symmetric").get<bool>();
    r.config.repair = c.at("repair").get<bool>();
    r.trials = j.at("trials").get<std::size_t>();
    r.generated = j.at("generated").get<std::size_t>();
    r.hypothesis_pass = j.at("hypothesis_pass").get<std::size_t>();
    r.adjoint_pass = j.at("adjoint_pass").get<std::size_t>();
    r.conclusion_pass = j.at("conclusion_pass").get<std::size_t>();
    r.counterexamples = j.at("counterexamples").get<std::size_t>();
    r.undecided = j.at("undecided").get<std::size_t>();
    for (const auto& e : j.at("exemplars")) {
      r.exemplars.push_back(Exemplar{e.at("trial").get<std::size_t>(),
                                     parse_matrix(e.at("matrix").get<std::string>()),
                                     verdict_summary_from_json(e.at("verdict"))});
    }
    return r;
  });
}

bool operator==(const CheckReport& a, const CheckReport& b) {
  return a.verdict == b.verdict && a.augmented == b.augmented && a.mode == b.mode &&
         a.ttp == b.ttp && a.failing_paths == b.failing_paths && a.witness == b.witness &&
         a.pendants == b.pendants && a.pendant_witness == b.pendant_witness;
}

CheckReport make_check_report(const HypothesisReport& report, bool augmented, TpMode mode) {
  CheckReport c;
  c.augmented = augmented;
  c.mode = mode == TpMode::AllMinors ? "all-minors" : "initial-minors";
  c.ttp = report.ttp.verdict;
  for (const auto& p : report.ttp.paths) {
    if (!p.report.verdict) c.failing_paths.push_back(to_string(p.path.vertices));
  }
  if (report.ttp.first_failure) c.witness = report.ttp.paths[*report.ttp.first_failure].report.witness;
  if (augmented) {
    for (const auto& p : report.pendants) {
      c.pendants.emplace_back(p.pendant, p.report.verdict);
      if (!p.report.verdict && !c.pendant_witness) c.pendant_witness = {{p.pendant, *p.report.witness}};
    }
    c.verdict = report.verdict();
  } else {
    c.verdict = report.ttp.verdict;
  }
  return c;
}

json to_json(const CheckReport& c) {
  json pendants = json::array();
  for (const auto& [p, ok] : c.pendants) pendants.push_back(json{{"pendant", p}, {"verdict", ok}});
  json pw = nullptr;
  if (c.pendant_witness) {
    pw = witness_json(c.pendant_witness->second);
    pw["pendant"] = c.pendant_witness->first;
  }
  return json{{"schema", kReportSchemaVersion},
              {"kind", "check"},
              {"verdict", c.verdict},
              {"augmented", c.augmented},
              {"mode", c.mode},
              {"ttp", c.ttp},
              {"failing_paths", c.failing_paths},
              {"witness", witness_json(c.witness)},
              {"pendants", std::move(pendants)},
              {"pendant_witness", std::move(pw)}};
}

CheckReport check_report_from_json(const json& j) {
  return guarded([&] {
    require_kind(j, "check");
    CheckReport c;
    c.verdict = j.at("verdict").get<bool>();
    c.augmented = j.at("augmented").get<bool>();
    c.mode = j.at("mode").get<std::string>();
    c.ttp = j.at("ttp").get<bool>();
    c.failing_paths = j.at("failing_paths").get<std::vector<std::string>>();
    c.witness = witness_from(j.at("witness"));
    for (const auto& p : j.at("pendants")) {
      c.pendants.emplace_back(p.at("pendant").get<int>(), p.at("verdict").get<bool>());
    }
    const auto& pw = j.at("pendant_witness");
    if (!pw.is_null()) c.pendant_witness = {{pw.at("pendant").get<int>(), *witness_from(pw)}};
    return c;
  });
}

}  // namespace ttp
