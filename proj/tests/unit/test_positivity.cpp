#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "support/oracles.hpp"
#include "support/star4_signs.hpp"
#include "ttp/conjecture.hpp"
#include "ttp/errors.hpp"
#include "ttp/fixtures.hpp"
#include "ttp/positivity.hpp"

using namespace ttp;

TEST_SUITE("positivity") {

TEST_CASE("identity is not TP; the witness is a zero entry") {
  const ExactMatrix id = ExactMatrix::identity(3);
  for (TpMode mode : {TpMode::AllMinors, TpMode::InitialMinors}) {
    const TpReport r = is_tp(id, mode);
    CHECK_FALSE(r.verdict);
    REQUIRE(r.witness);
    CHECK(r.witness->value == 0);
    CHECK(r.witness->rows.size() == 1);
  }
}

TEST_CASE("minor counts") {
  const ExactMatrix a{{2, 1}, {1, 2}};
  CHECK(is_tp(a, TpMode::AllMinors).minors_checked == 5);
  CHECK(is_tp(a, TpMode::InitialMinors).minors_checked == 4);
  CHECK(is_tp(a).verdict);
  const ExactMatrix b{{1, 2}, {3, 4}};
  const TpReport r = is_tp(b, TpMode::AllMinors);
  CHECK_FALSE(r.verdict);
  CHECK(r.witness->value == -2);
}

TEST_CASE("all-minors and initial-minors verdicts agree") {
  std::mt19937_64 rng(31);
  int positive = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 4;
    // Small ranges make TP instances reasonably common.
    const ExactMatrix a = trial % 2 ? oracle::random_integer_matrix(rng, n, 1, 4)
                                    : oracle::bidiagonal_tp(rng, n);
    const bool all = is_tp(a, TpMode::AllMinors).verdict;
    CHECK(all == is_tp(a, TpMode::InitialMinors).verdict);
    CHECK(all == oracle::brute_force_tp(a));
    positive += all;
  }
  CHECK(positive >= 150);
}

TEST_CASE("TP is invariant under transposition and double reversal") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const ExactMatrix a = trial % 3 ? oracle::random_integer_matrix(rng, n, 1, 6)
                                    : oracle::bidiagonal_tp(rng, n);
    const bool v = is_tp(a, TpMode::AllMinors).verdict;
    CHECK(v == is_tp(a.transposed()).verdict);
    CHECK(v == is_tp(oracle::reverse_both(a)).verdict);
  }
}

TEST_CASE("path matrix orders rows and columns along the path") {
  const ExactMatrix& a = fixture("star4-example").matrix;
  const ExactMatrix p = path_matrix(a, TreePath{{2, 1, 3}});
  CHECK(p == ExactMatrix{{108, 90, 34}, {78, 130, 98}, {57, 116, 137}});
}

TEST_CASE("worked examples are T-TP for their trees") {
  for (const auto& f : fixtures()) {
    const TtpReport r = is_t_tp(f.matrix, f.tree);
    CHECK(r.verdict);
    CHECK(r.paths.size() == maximal_paths(f.tree).size());
    CHECK(is_t_tp(f.matrix, f.tree, TpMode::AllMinors).verdict);
  }
}

TEST_CASE("T-TP failure carries witness labels of the full matrix") {
  const ExactMatrix& a = fixture("star4-example").matrix;
  const TtpReport r = is_t_tp(a, make_path(4), TpMode::AllMinors);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.first_failure);
  const auto& w = *r.paths[*r.first_failure].report.witness;
  CHECK(minor(a, w.rows, w.cols) == w.value);
  CHECK(w.value <= 0);
  CHECK_THROWS_AS(is_t_tp(a, make_star(5)), DimensionError);
}

TEST_CASE("T-TP verdict is invariant under relabelling") {
  std::mt19937_64 rng(33);
  GenConfig cfg;
  cfg.tree = make_pitchfork();
  for (int trial = 0; trial < 10; ++trial) {
    cfg.seed = trial;
    const auto a = gen_candidate(cfg);
    REQUIRE(a);
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& [u, v] : cfg.tree.edges()) edges.emplace_back(perm[u - 1] + 1, perm[v - 1] + 1);
    const LabelledTree relabelled = LabelledTree::validate(5, edges);
    CHECK(is_t_tp(oracle::relabel(*a, perm), relabelled).verdict);
  }
}

TEST_CASE("P-matrix check") {
  CHECK(is_p_matrix(ExactMatrix::identity(4)).verdict);
  CHECK(is_p_matrix(ExactMatrix::identity(4)).minors_checked == 15);
  const ExactMatrix a{{1, 2}, {3, 4}};
  const PMatrixReport r = is_p_matrix(a);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.witness);
  CHECK(r.witness->rows == IndexList{1, 2});
  CHECK(r.witness->value == -2);
}

TEST_CASE("pendant-deletion hypothesis on the 5x5 star example") {
  const auto& f = fixture("star5-counterexample");
  const HypothesisReport r = pendant_deletion_hypothesis(f.matrix, f.tree);
  CHECK(r.ttp.verdict);
  CHECK_FALSE(r.pendants_ok());
  CHECK_FALSE(r.verdict());
  REQUIRE(r.pendants.size() == 4);
  for (const auto& p : r.pendants) {
    CHECK(p.report.verdict == (p.pendant != 3));
  }
  const auto& bad = r.pendants[1];
  CHECK(bad.kept == IndexList{1, 2, 4, 5});
  CHECK(bad.report.witness->rows == IndexList{1, 2, 4, 5});
  CHECK(bad.report.witness->value == -5017752);
}

TEST_CASE("pendant-deletion hypothesis holds on the 4x4 example") {
  const auto& f = fixture("star4-example");
  CHECK(pendant_deletion_hypothesis(f.matrix, f.tree).verdict());
}

TEST_CASE("predicted adjugate sign pattern of the star") {
  const SignMatrix s = predicted_adjoint_sign(make_star(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(s(i, j) == ((i == 0) == (j == 0) ? 1 : -1));
}

TEST_CASE("adjugate conclusion on the worked examples") {
  for (const auto& f : fixtures()) {
    const AdjointCheck c = check_adjoint_conclusion(f.matrix, f.tree);
    CHECK(c.mismatches == f.adjoint_mismatches);
    CHECK(c.verdict == f.adjoint_mismatches.empty());
    if (f.adjugate) CHECK(c.adjugate == *f.adjugate);
  }
}

TEST_CASE("minor signs behind the star-4 adjugate pattern") {
  CHECK(star4::check_minor_signs(fixture("star4-example").matrix).empty());
  GenConfig cfg;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    cfg.seed = seed;
    const auto a = gen_candidate(cfg);
    REQUIRE(a);
    CHECK(star4::check_minor_signs(*a) == "");
    CHECK(check_adjoint_conclusion(*a, cfg.tree).verdict);
  }
}

}  // TEST_SUITE
