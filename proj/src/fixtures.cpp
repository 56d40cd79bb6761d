#include "ttp/fixtures.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "ttp/conjecture.hpp"
#include "ttp/positivity.hpp"
#include "ttp/spectral.hpp"

namespace ttp {

namespace {

ExactMatrix ints(std::size_t n, std::vector<std::int64_t> v) {
  return ExactMatrix::from_integers(n, v);
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;

  Fixture star4{.name = "star4-example", .matrix = ints(4, {130, 78, 98, 96,   //
                          90, 108, 34, 25,   //
                          116, 57, 137, 44,  //
                          55, 1, 39, 112}),
                .tree = make_star(4, 1)};
  star4.adjugate = ints(4, {1308414, -641920, -560896, -757860,  //
                            -791797, 446528, 327360, 450406,     //
                            -646651, 290240, 328640, 360378,     //
                            -410282, 210176, 158080, 292428});
  star4.eigenvalue = 2.5;
  star4.eigenvalue_tolerance = 0.05;
  star4.eigenvector = {-3.12, 1.93, 1.55, 1.0};
  star4.complex_pair = {{83.6571, 4.24099}};
  star4.signed_ok = true;
  star4.counterexample = false;
  out.push_back(std::move(star4));

  Fixture star5{.name = "star5-counterexample", .matrix = ints(5, {55, 77, 10, 17, 49,  //
                          40, 84, 3, 1, 8,     //
                          57, 74, 86, 15, 47,  //
                          94, 2, 8, 86, 58,    //
                          48, 41, 4, 4, 78}),
                .tree = make_star(5, 1)};
  star5.adjugate = ints(5, {42023084, -27857784, -2494736, -6756454, -17014640,  //
                            -18274672, 7046528, 1241168, 2950496, 7815680,     //
                            2070092, 1908264, -5017752, 386110, 1240248,       //
                            -35907780, 21866360, 2481608, 951670, 18111768,    //
                            -14519176, 12220096, 1012872, 2538312, 279496});
  star5.eigenvalue = -6.16;
  star5.eigenvector = {-2.98, 1.21, -0.02, 2.39, 1.0};
  star5.signed_ok = false;
  star5.adjoint_mismatches = {{3, 1}, {3, 3}};
  star5.counterexample = true;
  out.push_back(std::move(star5));

  Fixture fork{.name = "pitchfork-counterexample", .matrix = ints(5, {88, 50, 35, 78, 38,  //
                         50, 48, 19, 27, 11,  //
                         35, 19, 41, 13, 6,   //
                         78, 27, 13, 86, 44,  //
                         38, 11, 6, 44, 59}),
               .tree = make_pitchfork()};
  fork.eigenvalue = -2.54;
  fork.eigenvector = {-68.08, 32.75, 26.69, 45.57, 1.0};
  fork.signed_ok = false;
  // No adjugate is published for this example; the mismatch set follows
  // from the exact adjugate.
  fork.adjoint_mismatches = {{4, 5}, {5, 4}, {5, 5}};
  fork.counterexample = true;
  out.push_back(std::move(fork));

  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string pairs_text(const std::vector<std::pair<int, int>>& pairs) {
  std::string s = "{";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) s += ",";
    s += "(" + std::to_string(pairs[k].first) + "," + std::to_string(pairs[k].second) + ")";
  }
  return s + "}";
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& f : fixtures()) names.push_back(f.name);
  return names;
}

Reproduction reproduce(const Fixture& fx) {
  Reproduction rep;
  rep.fixture = fx.name;
  auto add = [&](std::string what, bool ok, std::string detail) {
    rep.ok = rep.ok && ok;
    rep.lines.push_back({std::move(what), ok, std::move(detail)});
  };

  add("T-TP", is_t_tp(fx.matrix, fx.tree).verdict, "");

  const AdjointCheck adj = check_adjoint_conclusion(fx.matrix, fx.tree);
  if (fx.adjugate) {
    std::string diff;
    const std::size_t n = fx.matrix.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (adj.adjugate(i, j) != (*fx.adjugate)(i, j)) {
          diff += " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): got " +
                  to_string(adj.adjugate(i, j)) + " expected " + to_string((*fx.adjugate)(i, j));
        }
    add("adjugate exact", diff.empty(),
        diff.empty() ? std::to_string(n * n) + " entries match" : diff);
  }
  add("adjugate sign mismatches", adj.mismatches == fx.adjoint_mismatches,
      "got " + pairs_text(adj.mismatches) + " expected " + pairs_text(fx.adjoint_mismatches));

  const SpectralSummary s = smallest_eig_vector(fx.matrix, fx.tree);
  add("smallest eigenvalue real and simple", s.smallest.is_real && s.smallest.is_simple,
      "margin " + fmt(s.smallest.modulus_margin));
  const double lambda = s.smallest.value.real();
  add("smallest eigenvalue", std::abs(lambda - fx.eigenvalue) <= fx.eigenvalue_tolerance,
      "got " + fmt(lambda) + " expected " + fmt(fx.eigenvalue) + " +- " +
          fmt(fx.eigenvalue_tolerance));

  bool vec_ok = s.eigenvector_last_one.size() == fx.eigenvector.size();
  std::string got = "(";
  for (std::size_t k = 0; k < s.eigenvector_last_one.size(); ++k) {
    if (k) got += ", ";
    got += fmt(s.eigenvector_last_one[k]);
    if (vec_ok && std::abs(s.eigenvector_last_one[k] - fx.eigenvector[k]) > fx.eigenvector_tolerance)
      vec_ok = false;
  }
  add("eigenvector (last entry 1)", vec_ok, "got " + got + ")");

  add("signed according to tree", (s.signed_ok == Signed::Yes) == fx.signed_ok,
      "got " + to_string(s.signed_ok) + " expected " + (fx.signed_ok ? "yes" : "no"));

  if (fx.complex_pair) {
    const std::complex<double> want(fx.complex_pair->first, fx.complex_pair->second);
    double best = std::numeric_limits<double>::infinity();
    std::complex<double> hit;
    for (const auto& z : s.spectrum.roots) {
      const double rel = std::abs(z - want) / std::abs(want);
      if (rel < best) {
        best = rel;
        hit = z;
      }
    }
    add("complex eigenvalue pair", best <= fx.complex_relative_tolerance,
        "got " + fmt(hit.real()) + " +- " + fmt(std::abs(hit.imag())) + "i, relative error " +
            fmt(best));
  }

  const auto verdict = test_conjecture(fx.matrix, fx.tree, false);
  add("counterexample", verdict.counterexample == fx.counterexample,
      std::string("got ") + (verdict.counterexample ? "true" : "false"));
  return rep;
}

}  // namespace ttp
