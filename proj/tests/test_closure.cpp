#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "groupcut/closure.hpp"
#include "groupcut/perturbation.hpp"

using namespace groupcut;

namespace {

Rat q(long n, long d) { return Rat(n, d); }
OpenInterval iv(long a, long b, long c, long d) { return OpenInterval(Rat(a, b), Rat(c, d)); }

mpz_class denominator_of(const FinitePresentation& p) {
  std::vector<Rat> data;
  for (const Move& m : p.moves()) {
    data.push_back(m.param());
    data.push_back(m.domain().lo());
    data.push_back(m.domain().hi());
  }
  for (const auto& c : p.components())
    for (const auto& part : c.parts()) {
      data.push_back(part.lo());
      data.push_back(part.hi());
    }
  return common_denominator(data);
}

}  // namespace

TEST_CASE("initial ensemble of equiv7_example_1 matches the figure") {
  FinitePresentation p = initial_ensemble(equiv7_example_1());
  REQUIRE(p.moves().size() == 2);
  CHECK(p.moves()[0] == Move::translation(Rat(0), iv(0, 1, 1, 2)));
  CHECK(p.moves()[1] == Move::reflection(q(1, 2), iv(0, 1, 1, 2)));
  REQUIRE(p.components().size() == 1);
  CHECK(p.components()[0] == IntervalUnion(iv(1, 2, 1, 1)));
}

TEST_CASE("initial ensemble of gmic covers everything") {
  FinitePresentation p = initial_ensemble(gmic(q(4, 5)));
  IntervalUnion covered = p.covered_set();
  CHECK(covered == IntervalUnion({iv(0, 1, 4, 5), iv(4, 5, 1, 1)}));
  // all surviving moves lie inside components, so the reduced form is bare
  CHECK(p.moves().empty());
}

TEST_CASE("every minimal function carries identity moves over its continuity cells") {
  for (const PwlFunction& fn :
       {equiv7_example_1(), minimal_no_covered_interval(), two_slope(q(4, 5), q(1, 2))}) {
    FinitePresentation p = initial_ensemble(fn);
    for (const auto& part : fn.canonicalized().continuity_set().parts())
      CHECK(joined_membership(p, Move::translation(Rat(0), part)));
  }
  CHECK_THROWS_AS(initial_ensemble(PwlFunction(
                      PiecewiseCurve::interpolate({Rat(0), q(1, 2), Rat(1)},
                                                  {Rat(0), q(1, 2), Rat(0)}),
                      q(1, 2))),
                  std::domain_error);
}

TEST_CASE("moves closure of equiv7_example_1 is already closed") {
  FinitePresentation p = initial_ensemble(equiv7_example_1());
  ClosureResult r = moves_closure(p);
  CHECK_FALSE(r.budget_exhausted);
  CHECK(r.promotion_count == 0);
  CHECK(canonical_eq(r.presentation, p));
}

TEST_CASE("closure of a lone reflection adds only the partial identity") {
  FinitePresentation p({Move::reflection(q(1, 2), iv(0, 1, 1, 2))}, {},
                       IntervalUnion(OpenInterval(Rat(0), Rat(1))));
  ClosureResult r = moves_closure(p);
  REQUIRE(r.presentation.moves().size() == 2);
  CHECK(r.presentation.moves()[0] == Move::translation(Rat(0), iv(0, 1, 1, 2)));
  CHECK(r.presentation.moves()[1] == Move::reflection(q(1, 2), iv(0, 1, 1, 2)));
  CHECK(r.presentation.components().empty());
}

TEST_CASE("closure is idempotent and deterministic") {
  for (const PwlFunction& fn :
       {equiv7_example_1(), gmic(q(4, 5)), minimal_no_covered_interval(),
        two_slope(q(4, 5), q(1, 2))}) {
    FinitePresentation p = initial_ensemble(fn);
    ClosureResult r1 = moves_closure(p);
    ClosureResult r2 = moves_closure(r1.presentation);
    CHECK(canonical_eq(r2.presentation, r1.presentation));
    // order independence
    ClosureResult r3 = moves_closure(p, ClosureOptions{0, true});
    CHECK(canonical_eq(r3.presentation, r1.presentation));
    // shuffled input move order
    std::vector<Move> shuffled = p.moves();
    std::mt19937 rng(99);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ClosureResult r4 =
        moves_closure(FinitePresentation(shuffled, p.components(), p.continuity()));
    CHECK(canonical_eq(r4.presentation, r1.presentation));
  }
}

TEST_CASE("closure output contains the input ensemble and preserves the grid") {
  for (const PwlFunction& fn :
       {equiv7_example_1(), gmic(q(7, 10)), two_slope(q(4, 5), q(1, 2))}) {
    FinitePresentation p = initial_ensemble(fn);
    ClosureResult r = moves_closure(p);
    for (const Move& m : p.moves()) CHECK(joined_membership(r.presentation, m));
    for (const auto& c : p.components())
      CHECK(r.presentation.covered_set().contains(c));
    // rational grid preservation: the closure lives on the input's grid
    mpz_class qin = denominator_of(p);
    mpz_class qout = denominator_of(r.presentation);
    mpz_class rem;
    mpz_mod(rem.get_mpz_t(), qin.get_mpz_t(), qout.get_mpz_t());
    CHECK(rem == 0);
    CHECK(r.promotion_count == 0);
  }
}

TEST_CASE("pi respects its own closure, with the paper's constant for equiv7") {
  PwlFunction fn = equiv7_example_1();
  ClosureResult r = moves_closure(initial_ensemble(fn));
  CHECK(respects_check(fn.curve(), r.presentation, 32));
  // c(rho_{1/2}|(0,1/2)) = pi(x) + pi(1/2 - x) = 1 on the open interval
  Move rho = Move::reflection(q(1, 2), iv(0, 1, 1, 2));
  Rat c = fn.eval(rho.map(q(1, 8))) + fn.eval(q(1, 8));
  CHECK(c == Rat(1));
  // identity moves always give constant 0
  CHECK(fn.eval(q(1, 8)) - fn.eval(q(1, 8)) == Rat(0));
}

TEST_CASE("respects_check catches violations") {
  FinitePresentation p({Move::translation(q(1, 2), iv(0, 1, 1, 4))}, {},
                       IntervalUnion(OpenInterval(Rat(0), Rat(1))));
  // theta nonzero on the domain, zero on the image: not constant difference
  PiecewiseCurve theta = PiecewiseCurve::interpolate(
      {Rat(0), q(1, 8), q(1, 4), Rat(1)}, {Rat(0), Rat(1), Rat(0), Rat(0)});
  CHECK_FALSE(respects_check(theta, p, 8));
  // affine-with-common-slope on components is enforced
  FinitePresentation pc({}, {IntervalUnion({iv(0, 1, 1, 4), iv(1, 2, 3, 4)})},
                        IntervalUnion(OpenInterval(Rat(0), Rat(1))));
  PiecewiseCurve kink = PiecewiseCurve::interpolate(
      {Rat(0), q(1, 8), q(1, 4), Rat(1)}, {Rat(0), q(1, 8), Rat(0), Rat(0)});
  CHECK_FALSE(respects_check(kink, pc, 8));
  PiecewiseCurve slope_mismatch = PiecewiseCurve::interpolate(
      {Rat(0), q(1, 4), q(1, 2), q(3, 4), Rat(1)},
      {Rat(0), q(1, 4), q(1, 2), Rat(0), Rat(0)});
  CHECK_FALSE(respects_check(slope_mismatch, pc, 8));
}

TEST_CASE("closure respects endpoint limits of discontinuous functions") {
  // minimal_no_covered_interval respects its closure including the
  // one-sided limits at the domain ends
  PwlFunction fn = minimal_no_covered_interval();
  ClosureResult r = moves_closure(initial_ensemble(fn));
  CHECK(respects_check(fn.curve(), r.presentation, 32));
  REQUIRE(r.presentation.components().empty());
  // the two reflections of the example are present
  CHECK(joined_membership(r.presentation, Move::reflection(q(1, 2), iv(0, 1, 1, 2))));
  CHECK(joined_membership(r.presentation, Move::reflection(q(3, 2), iv(1, 2, 1, 1))));
}

TEST_CASE("budget exhaustion is reported, not looped") {
  FinitePresentation p = initial_ensemble(equiv7_example_1());
  // force zero productive rounds: budget 0 means automatic; use 1 round on
  // an already-closed presentation; then a tiny budget on a fresh one
  FinitePresentation fresh({Move::reflection(q(1, 2), iv(0, 1, 1, 2)),
                            Move::reflection(q(3, 8), iv(0, 1, 3, 8))},
                           {}, IntervalUnion(OpenInterval(Rat(0), Rat(1))));
  ClosureResult r = moves_closure(fresh, ClosureOptions{1, false});
  // either it finished in one round or it reports exhaustion; both are
  // well-formed outcomes
  if (r.budget_exhausted) {
    CHECK_FALSE(r.steps.empty());
  } else {
    CHECK(canonical_eq(moves_closure(r.presentation).presentation, r.presentation));
  }
}
