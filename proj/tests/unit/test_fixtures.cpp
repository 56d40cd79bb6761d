#include <doctest.h>

#include "ttp/fixtures.hpp"

using namespace ttp;

TEST_SUITE("fixtures") {

TEST_CASE("every embedded example reproduces") {
  CHECK(fixture_names() ==
        std::vector<std::string>{"star4-example", "star5-counterexample", "pitchfork-counterexample"});
  for (const auto& f : fixtures()) {
    const Reproduction rep = reproduce(f);
    CHECK(rep.fixture == f.name);
    for (const auto& line : rep.lines) {
      INFO(f.name, ": ", line.what, " ", line.detail);
      CHECK(line.ok);
    }
    CHECK(rep.ok);
  }
}

TEST_CASE("unknown fixture") { CHECK_THROWS_AS(fixture("no-such-example"), std::out_of_range); }

}  // TEST_SUITE
