#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "groupcut/interval.hpp"

using namespace groupcut;

namespace {

Rat q(long n, long d) { return Rat(n, d); }

OpenInterval iv(long a, long b, long c, long d) { return OpenInterval(Rat(a, b), Rat(c, d)); }

Rat random_rat(std::mt19937& rng, long maxden = 12) {
  long d = 1 + static_cast<long>(rng() % maxden);
  long n = static_cast<long>(rng() % (2 * maxden + 1)) - maxden;
  return Rat(n, d);
}

IntervalUnion random_union(std::mt19937& rng, long grid) {
  std::vector<OpenInterval> parts;
  int n = 1 + rng() % 3;
  for (int i = 0; i < n; ++i) {
    long a = rng() % grid;
    long b = a + 1 + rng() % 3;
    parts.emplace_back(Rat(a, grid), Rat(std::min(b, grid), grid));
  }
  return IntervalUnion(std::move(parts));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(q(2, 4).str() == "1/2");
  CHECK(q(-2, 4).str() == "-1/2");
  CHECK(q(6, 3).str() == "2");
  CHECK(q(6, 3).is_integer());
  CHECK(Rat::parse("7/21") == q(1, 3));
  CHECK(Rat::parse("-3") == Rat(-3));
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);

  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rat a = random_rat(rng), b = random_rat(rng);
    CHECK((a + b) - b == a);
    CHECK((a * b).str() == (b * a).str());
    if (b != Rat(0)) CHECK((a / b) * b == a);
  }
}

TEST_CASE("floor and mod1") {
  CHECK(q(5, 4).mod1() == q(1, 4));
  CHECK(q(-1, 4).mod1() == q(3, 4));
  CHECK(Rat(3).mod1() == Rat(0));
  CHECK(q(-5, 2).floor() == -3);
}

TEST_CASE("interval intersection") {
  // (0,1/2) cap (1/4,3/4) = (1/4,1/2)
  CHECK(interval_intersect(iv(0, 1, 1, 2), iv(1, 4, 3, 4)) == iv(1, 4, 1, 2));
  // touching intervals have empty open intersection
  CHECK(interval_intersect(iv(0, 1, 1, 4), iv(1, 4, 1, 2)).is_empty());
  CHECK(interval_intersect(iv(0, 1, 1, 1), OpenInterval::empty()).is_empty());
}

TEST_CASE("interval union canonical form") {
  // overlapping parts merge
  IntervalUnion u({iv(0, 1, 1, 4), iv(1, 8, 1, 2)});
  CHECK(u.parts().size() == 1);
  CHECK(u.parts()[0] == iv(0, 1, 1, 2));
  // touching parts stay separate: the shared endpoint is not a member
  IntervalUnion t({iv(0, 1, 1, 4), iv(1, 4, 1, 2)});
  CHECK(t.parts().size() == 2);
  CHECK_FALSE(t.contains(q(1, 4)));
  CHECK(t.contains(q(1, 8)));
  // union of (0,1/24) and (7/8,11/12) stays two parts
  IntervalUnion c2 = union_of(IntervalUnion(OpenInterval(q(0, 1), q(1, 24))),
                              IntervalUnion(OpenInterval(q(7, 8), q(11, 12))));
  CHECK(c2.parts().size() == 2);
}

TEST_CASE("difference removes the closure of the subtrahend") {
  // (0,1) minus cl((1/2,1)) = (0,1/2)
  IntervalUnion whole(iv(0, 1, 1, 1));
  IntervalUnion res = difference(whole, IntervalUnion(iv(1, 2, 1, 1)));
  CHECK(res == IntervalUnion(iv(0, 1, 1, 2)));
  // removing an interior piece keeps two open parts
  IntervalUnion mid = difference(whole, IntervalUnion(iv(1, 3, 1, 2)));
  CHECK(mid.parts().size() == 2);
  CHECK(mid.parts()[0] == iv(0, 1, 1, 3));
  CHECK(mid.parts()[1] == iv(1, 2, 1, 1));
}

TEST_CASE("boundary of a union") {
  std::vector<Rat> b = boundary(IntervalUnion(iv(1, 2, 1, 1)));
  REQUIRE(b.size() == 2);
  CHECK(b[0] == q(1, 2));
  CHECK(b[1] == Rat(1));
}

TEST_CASE("set algebra laws by membership sampling") {
  std::mt19937 rng(11);
  const long grid = 24;
  for (int trial = 0; trial < 60; ++trial) {
    IntervalUnion a = random_union(rng, grid);
    IntervalUnion b = random_union(rng, grid);
    IntervalUnion c = random_union(rng, grid);
    IntervalUnion lhs = intersect(union_of(a, b), c);
    IntervalUnion rhs = union_of(intersect(a, c), intersect(b, c));
    IntervalUnion whole(OpenInterval(Rat(0), Rat(1)));
    IntervalUnion dm1 = difference(whole, union_of(a, b));
    IntervalUnion dm2 = intersect(difference(whole, a), difference(whole, b));
    // sample on the half-grid to hit part interiors and endpoints
    for (long k = 0; k <= 2 * grid; ++k) {
      Rat x(k, 2 * grid);
      CHECK(lhs.contains(x) == rhs.contains(x));
      CHECK(dm1.contains(x) == dm2.contains(x));
    }
  }
}

TEST_CASE("interval union round-trips through its text form") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    IntervalUnion u = random_union(rng, 16);
    CHECK(IntervalUnion::parse(u.str()) == u);
  }
  CHECK(IntervalUnion::parse("{}").is_empty());
}
