#include "doctest.h"
#include "oracles.hpp"

using namespace etk::oracles;

TEST_CASE("radical matches the brute-force nil ideal on 200 random algebras") {
  const auto r = radical_oracle(200, 2024);
  CAPTURE(r.first_failure);
  CHECK(r.cases == 200);
  CHECK(r.failures == 0);
}

TEST_CASE("Brauer quotients of permutation modules count fixed points") {
  const auto r = brauer_fixed_point_oracle(100, 77);
  CAPTURE(r.first_failure);
  CHECK(r.cases == 100);
  CHECK(r.failures == 0);
}

TEST_CASE("Jordan blocks of size one at involutions match Brauer dimensions") {
  const auto r = jordan_brauer_oracle(100, 77);
  CAPTURE(r.first_failure);
  CHECK(r.cases > 100);
  CHECK(r.failures == 0);
}
