#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupcut/complex2d.hpp"
#include "groupcut/gridoracle.hpp"

using namespace groupcut;

namespace {
Rat q(long n, long d) { return Rat(n, d); }
}

TEST_CASE("restrict_to_grid") {
  GridFunction g = restrict_to_grid(gmic(q(1, 2)), 4);
  REQUIRE(g.values.size() == 4);
  CHECK(g.values[0] == Rat(0));
  CHECK(g.values[1] == q(1, 2));
  CHECK(g.values[2] == Rat(1));
  CHECK(g.values[3] == q(1, 2));

  CHECK_THROWS_AS(restrict_to_grid(gmic(q(1, 2)), 1), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_grid(gmic(q(1, 3)), 4), std::invalid_argument);  // f off-grid
  // discontinuity at a grid point refuses
  CHECK_THROWS_AS(restrict_to_grid(equiv7_example_1(), 4), std::invalid_argument);
}

TEST_CASE("grid minimality") {
  CHECK(grid_minimality(restrict_to_grid(gmic(q(1, 2)), 4)));
  CHECK(grid_minimality(restrict_to_grid(gmic(q(2, 5)), 10)));

  GridFunction zero{2, {Rat(0), Rat(0)}, q(1, 2)};
  CHECK_FALSE(grid_minimality(zero));  // pi(f) != 1

  // perturbing one value of a minimal grid function breaks the system
  GridFunction g = restrict_to_grid(gmic(q(1, 2)), 4);
  g.values[1] += Rat(1);
  CHECK_FALSE(grid_minimality(g));
}

TEST_CASE("restrictions of a minimal function satisfy the grid system") {
  for (long qq : {4l, 8l, 12l}) {
    GridFunction g = restrict_to_grid(two_slope(q(3, 4), q(1, 3)), qq * 12);
    CHECK(grid_minimality(g));
  }
}

TEST_CASE("grid perturbation dimension") {
  CHECK(grid_perturbation_dimension(restrict_to_grid(gmic(q(1, 2)), 4)) == 0);
  // q = 2, f = 1/2: unique minimal function, trivial null space
  GridFunction tiny{2, {Rat(0), Rat(1)}, q(1, 2)};
  REQUIRE(grid_minimality(tiny));
  CHECK(grid_perturbation_dimension(tiny) == 0);

  // flat-top construction: slack everywhere except the symmetry pairs,
  // null space of dimension 2 (verified by independent enumeration)
  GridFunction loose{6, {Rat(0), q(1, 2), q(1, 2), Rat(1), q(1, 2), q(1, 2)}, q(1, 2)};
  REQUIRE(grid_minimality(loose));
  CHECK(grid_perturbation_dimension(loose) == 2);
}

TEST_CASE("oracle verdicts for catalog functions") {
  CHECK(grid_extremality_oracle(gmic(q(4, 5)), 4) == GridVerdict::Extreme);
  CHECK(grid_extremality_oracle(gmic(q(1, 3)), 4) == GridVerdict::Extreme);
  CHECK(grid_extremality_oracle(two_slope(q(4, 5), q(1, 2)), 4) == GridVerdict::Extreme);
  CHECK_THROWS_AS(grid_extremality_oracle(equiv7_example_1(), 4), std::invalid_argument);
}

TEST_CASE("one-direction soundness: grid perturbations interpolate to effective ones") {
  // any nontrivial grid perturbation of a function whose breakpoints sit on
  // the grid certifies non-extremality
  GridFunction loose{6, {Rat(0), q(1, 2), q(1, 2), Rat(1), q(1, 2), q(1, 2)}, q(1, 2)};
  RatMat basis = grid_perturbation_basis(loose);
  REQUIRE_FALSE(basis.empty());
  std::map<Rat, Rat> vals;
  for (long i = 0; i < 6; ++i) vals[q(i, 6)] = loose.values[i];
  PwlFunction fn = interpolate_from_grid(vals, q(1, 2));
  REQUIRE(check_minimality(fn).minimal);
  CHECK(grid_extremality_oracle(fn, 4) == GridVerdict::NotExtreme);
}
