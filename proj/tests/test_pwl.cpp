#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "groupcut/complex2d.hpp"
#include "groupcut/pwl.hpp"

using namespace groupcut;

namespace {
Rat q(long n, long d) { return Rat(n, d); }
}

TEST_CASE("equiv7_example_1 evaluation") {
  PwlFunction fn = equiv7_example_1();
  CHECK(fn.eval(q(3, 4)) == q(1, 2));  // 2(1-x) at 3/4
  CHECK(fn.eval(Rat(0)) == Rat(0));
  CHECK(fn.eval(q(5, 4)) == q(1, 2));  // periodicity: reduces to 1/4
  CHECK(fn.eval(q(1, 4)) == q(1, 2));
  CHECK(fn.eval(q(1, 2)) == Rat(1));
}

TEST_CASE("limits at breakpoints and interior points") {
  PwlFunction fn = equiv7_example_1();
  LimitTriple t = fn.limits(q(1, 2));
  CHECK(t.left == q(1, 2));
  CHECK(t.value == Rat(1));
  CHECK(t.right == Rat(1));
  LimitTriple o = fn.limits(Rat(0));
  CHECK(o.left == Rat(0));   // continuous from the left at the origin
  CHECK(o.value == Rat(0));
  CHECK(o.right == q(1, 2));

  PwlFunction m = minimal_no_covered_interval();
  LimitTriple tm = m.limits(q(1, 2));
  CHECK(tm.left == q(1, 2));
  CHECK(tm.value == Rat(1));
  CHECK(tm.right == q(1, 2));
  CHECK(m.eval(q(1, 2)) == Rat(1));

  LimitTriple g = gmic(q(4, 5)).limits(q(2, 5));
  CHECK(g.left == q(1, 2));
  CHECK(g.value == q(1, 2));
  CHECK(g.right == q(1, 2));
}

TEST_CASE("eval agrees with limits at continuity points") {
  for (const PwlFunction& fn : {gmic(q(4, 5)), equiv7_example_1()}) {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
      Rat x(static_cast<long>(rng() % 97), 97);
      LimitTriple t = fn.limits(x);
      if (t.is_continuous()) CHECK(t.value == fn.eval(x));
    }
  }
}

TEST_CASE("catalog limits at the origin") {
  LimitTriple t = equiv7_example_1().limits(Rat(0));
  CHECK(t.left == q(1, 2) - q(1, 2));  // 0: left-continuous
  CHECK(t.right == q(1, 2));
  CHECK(gmic(q(1, 2)).eval(q(1, 4)) == q(1, 2));
  CHECK_THROWS_AS(make_builtin("gmic", {Rat(2)}), std::invalid_argument);
  CHECK_THROWS_AS(make_builtin("no_such_function", {}), std::invalid_argument);
}

TEST_CASE("interpolate_from_grid") {
  std::map<Rat, Rat> tent{{Rat(0), Rat(0)}, {q(1, 2), Rat(1)}};
  PwlFunction t = interpolate_from_grid(tent, q(1, 2));
  CHECK(t == gmic(q(1, 2)));

  // gmic(4/5) restricted to the 1/10-grid and re-interpolated is itself
  PwlFunction g = gmic(q(4, 5));
  std::map<Rat, Rat> vals;
  for (long i = 0; i < 10; ++i) vals[q(i, 10)] = g.eval(q(i, 10));
  CHECK(interpolate_from_grid(vals, q(4, 5)) == g);

  std::map<Rat, Rat> hat{{Rat(0), Rat(0)}, {q(1, 3), Rat(1)}, {q(2, 3), Rat(0)}};
  PwlFunction h = interpolate_from_grid(hat, q(1, 3));
  CHECK(h.eval(q(1, 6)) == q(1, 2));
  CHECK(h.eval(q(5, 6)) == Rat(0));

  std::map<Rat, Rat> missing{{Rat(0), Rat(0)}, {q(1, 3), Rat(1)}};
  CHECK_THROWS_AS(interpolate_from_grid(missing, q(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(interpolate_from_grid(hat, q(1, 5)), std::invalid_argument);
}

TEST_CASE("linear combinations") {
  PwlFunction pi = equiv7_example_1();
  PerturbationFn zero = zero_perturbation();
  PwlFunction same = perturbed(pi, Rat(1), zero);
  CHECK(same.curve().canonicalized() == pi.curve().canonicalized());

  // pert + (-1) pert = 0
  std::vector<Rat> xs{Rat(0), q(1, 4), q(1, 2), Rat(1)};
  std::vector<Rat> vs{Rat(0), q(1, 3), Rat(0), Rat(0)};
  PerturbationFn p(PiecewiseCurve::interpolate(xs, vs));
  PerturbationFn diff = linear_combine({{Rat(1), &p}, {Rat(-1), &p}});
  CHECK(diff.is_zero());
}

TEST_CASE("canonicalization drops removable breakpoints only") {
  // Insert a collinear continuous point into gmic
  PwlFunction g = gmic(q(1, 2));
  std::vector<Rat> xs{Rat(0), q(1, 4), q(1, 2), Rat(1)};
  std::vector<Rat> vs{Rat(0), q(1, 2), Rat(1), Rat(0)};
  PwlFunction fat(PiecewiseCurve::interpolate(xs, vs), q(1, 2));
  CHECK(fat.canonicalized() == g);
  // A discontinuity is never dropped
  PwlFunction e = equiv7_example_1();
  CHECK(e.canonicalized() == e);
}

TEST_CASE("continuity set") {
  CHECK(equiv7_example_1().continuity_set() ==
        IntervalUnion({OpenInterval(Rat(0), q(1, 2)), OpenInterval(q(1, 2), Rat(1))}));
  CHECK(gmic(q(4, 5)).continuity_set() == IntervalUnion(OpenInterval(Rat(0), Rat(1))));
}

TEST_CASE("catalog functions are minimal") {
  CHECK(check_minimality(equiv7_example_1()).minimal);
  CHECK(check_minimality(minimal_no_covered_interval()).minimal);
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    long d = 2 + rng() % 30;
    long n = 1 + rng() % (d - 1);
    CHECK(check_minimality(gmic(Rat(n, d))).minimal);
  }
  CHECK(check_minimality(two_slope(q(4, 5), q(1, 2))).minimal);
  CHECK(check_minimality(two_slope(q(7, 10), q(1, 3))).minimal);
}
