#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "groupcut/perturbation.hpp"

using namespace groupcut;

namespace {

Rat q(long n, long d) { return Rat(n, d); }
OpenInterval iv(long a, long b, long c, long d) { return OpenInterval(Rat(a, b), Rat(c, d)); }

struct Pipeline {
  PwlFunction fn;
  ClosureResult closure;
  RefinementData ref;
  explicit Pipeline(PwlFunction f)
      : fn(f.canonicalized()),
        closure(moves_closure(initial_ensemble(fn))),
        ref(refine(fn, closure.presentation)) {}
};

std::vector<std::string> strs(const std::vector<Rat>& v) {
  std::vector<std::string> out;
  for (const Rat& x : v) out.push_back(x.str());
  return out;
}

// The paper's one-dimensional basis element for equiv7_example_1:
// 0 at 0, x - 1/4 on (0,1/2), 0 on [1/2,1).
PerturbationFn paper_basis_equiv7() {
  BreakpointSet b({Rat(0), q(1, 2), Rat(1)});
  std::vector<LimitTriple> ts{{Rat(0), Rat(0), q(-1, 4)},
                              {q(1, 4), Rat(0), Rat(0)},
                              {Rat(0), Rat(0), q(-1, 4)}};
  return PerturbationFn(PiecewiseCurve(b, ts));
}

bool proportional(const PerturbationFn& a, const PerturbationFn& b) {
  // find a scalar: compare at a few probe points incl. limits
  for (const Rat& x : {q(1, 8), q(1, 4), q(3, 8), q(5, 8)}) {
    Rat va = a.eval(x), vb = b.eval(x);
    if ((va == Rat(0)) != (vb == Rat(0))) return false;
    if (va == Rat(0)) continue;
    Rat lambda = vb / va;
    PerturbationFn scaled = linear_combine({{lambda, &a}, {Rat(-1), &b}});
    return scaled.is_zero();
  }
  return a.is_zero() && b.is_zero();
}

}  // namespace

TEST_CASE("refine on equiv7_example_1 reproduces the paper's sets") {
  Pipeline p(equiv7_example_1());
  CHECK(strs(p.ref.X) == std::vector<std::string>{"0", "1/2", "1"});
  CHECK(strs(p.ref.Z) == std::vector<std::string>{"1/4"});
  CHECK(strs(p.ref.Bprime.points()) == std::vector<std::string>{"0", "1/4", "1/2", "1"});
  CHECK(p.ref.C == IntervalUnion(iv(1, 2, 1, 1)));
  CHECK(p.ref.U == IntervalUnion(iv(0, 1, 1, 2)));
  CHECK(p.ref.Uprime == IntervalUnion({iv(0, 1, 1, 4), iv(1, 4, 1, 2)}));
}

TEST_CASE("refine on minimal_no_covered_interval") {
  Pipeline p(minimal_no_covered_interval());
  CHECK(p.ref.C.is_empty());
  CHECK(strs(p.ref.Bprime.points()) ==
        std::vector<std::string>{"0", "1/4", "1/2", "3/4", "1"});
}

TEST_CASE("refine on gmic: everything covered") {
  Pipeline p(gmic(q(4, 5)));
  CHECK(p.ref.U.is_empty());
  CHECK(p.ref.Uprime.is_empty());
  CHECK(p.ref.Bprime.points() == p.fn.curve().breakpoints().points());
  CHECK(uncovered_components(p.fn, p.closure.presentation, p.ref).empty());
}

TEST_CASE("uncovered components of the paper examples") {
  Pipeline e(equiv7_example_1());
  auto comps = uncovered_components(e.fn, e.closure.presentation, e.ref);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].intervals ==
        std::vector<OpenInterval>{iv(0, 1, 1, 4), iv(1, 4, 1, 2)});
  CHECK(comps[0].fundamental_domain == iv(0, 1, 1, 4));
  REQUIRE(comps[0].connecting_moves.size() == 2);
  CHECK(comps[0].connecting_moves[0] == Move::translation(Rat(0), iv(0, 1, 1, 4)));
  CHECK(comps[0].connecting_moves[1] == Move::reflection(q(1, 2), iv(0, 1, 1, 4)));

  Pipeline m(minimal_no_covered_interval());
  auto mc = uncovered_components(m.fn, m.closure.presentation, m.ref);
  REQUIRE(mc.size() == 2);
  CHECK(mc[0].intervals == std::vector<OpenInterval>{iv(0, 1, 1, 4), iv(1, 4, 1, 2)});
  CHECK(mc[1].intervals == std::vector<OpenInterval>{iv(1, 2, 3, 4), iv(3, 4, 1, 1)});
}

TEST_CASE("endpoints of restricted maximal moves lie in X cup Y cup boundary") {
  Pipeline e(equiv7_example_1());
  FinitePresentation ru = restrict_to(e.closure.presentation, e.ref.U);
  std::vector<Rat> xy = e.ref.X;
  xy.insert(xy.end(), e.ref.Y.begin(), e.ref.Y.end());
  std::sort(xy.begin(), xy.end());
  for (const Move& m : ru.moves()) {
    for (const Rat& p : {m.domain().lo(), m.domain().hi(), m.image().lo(), m.image().hi()})
      CHECK(std::binary_search(xy.begin(), xy.end(), p));
  }
}

TEST_CASE("finite-dimensional space of equiv7_example_1 is the paper's line") {
  Pipeline p(equiv7_example_1());
  PerturbationSpace space = finite_dim_space(p.fn, p.ref, p.closure.presentation);
  REQUIRE(space.finite_basis.size() == 1);
  CHECK(proportional(space.finite_basis[0], paper_basis_equiv7()));
}

TEST_CASE("finite-dimensional space of gmic is trivial") {
  for (const Rat& f : {q(1, 5), q(1, 3), q(4, 5), q(7, 10)}) {
    Pipeline p(gmic(f));
    PerturbationSpace space = finite_dim_space(p.fn, p.ref, p.closure.presentation);
    CHECK(space.finite_basis.empty());
  }
}

TEST_CASE("two-sided discontinuous input is refused by the solver") {
  Pipeline p(minimal_no_covered_interval());
  CHECK_THROWS_AS(finite_dim_space(p.fn, p.ref, p.closure.presentation), UnsupportedFunction);
}

TEST_CASE("equivariant sample: antisymmetric bump") {
  Pipeline p(equiv7_example_1());
  auto comps = uncovered_components(p.fn, p.closure.presentation, p.ref);
  REQUIRE(comps.size() == 1);
  PerturbationFn s = equivariant_sample(comps[0], Rat(1));
  CHECK(s.eval(q(1, 8)) == Rat(1));    // peak on the fundamental domain
  CHECK(s.eval(q(3, 8)) == Rat(-1));   // mirrored with character -1
  // antisymmetry pi~(x) = -pi~(f - x) on the component
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    Rat x(static_cast<long>(rng() % 65), 128);
    CHECK(s.eval(x) == -s.eval(q(1, 2) - x));
  }
  // vanishes (with limits) at every vertex of T
  for (const Rat& b : p.ref.Bprime.points()) {
    LimitTriple t = s.limits(b);
    CHECK(t.left == Rat(0));
    CHECK(t.value == Rat(0));
    CHECK(t.right == Rat(0));
  }
  // respects the full closure
  CHECK(respects_check(s.curve(), p.closure.presentation, 32));
}

TEST_CASE("equivariant sample violates moves with a foreign parameter") {
  // as in the proof of the respected-moves theorem: a same-domain move whose
  // parameter is not among the connecting moves is not respected
  Pipeline p(equiv7_example_1());
  auto comps = uncovered_components(p.fn, p.closure.presentation, p.ref);
  PerturbationFn s = equivariant_sample(comps[0], Rat(1));
  FinitePresentation foreign({Move::translation(q(1, 8), iv(0, 1, 1, 8))}, {},
                             p.closure.presentation.continuity());
  CHECK_FALSE(respects_check(s.curve(), foreign, 8));
  FinitePresentation rho_foreign({Move::reflection(q(1, 4), iv(0, 1, 1, 4))}, {},
                                 p.closure.presentation.continuity());
  CHECK_FALSE(respects_check(s.curve(), rho_foreign, 8));
}

TEST_CASE("epsilon for the paper witness verifies on both sides") {
  Pipeline p(equiv7_example_1());
  PerturbationSpace space = finite_dim_space(p.fn, p.ref, p.closure.presentation);
  EpsilonResult er = epsilon_for(p.fn, space.finite_basis[0]);
  CHECK(er.effective);
  CHECK(er.eps > Rat(0));
  CHECK(check_minimality(perturbed(p.fn, er.eps, space.finite_basis[0])).minimal);
  CHECK(check_minimality(perturbed(p.fn, -er.eps, space.finite_basis[0])).minimal);
}

TEST_CASE("epsilon of the zero perturbation is one") {
  EpsilonResult er = epsilon_for(equiv7_example_1(), zero_perturbation());
  CHECK(er.effective);
  CHECK(er.eps == Rat(1));
}

TEST_CASE("a non-perturbation is rejected with a certificate") {
  // pi~ breaking the symmetry: nonzero at f/2 only
  PwlFunction fn = gmic(q(1, 2));
  PerturbationFn bad(PiecewiseCurve::interpolate(
      {Rat(0), q(1, 8), q(1, 4), Rat(1)}, {Rat(0), Rat(0), q(1, 16), Rat(0)}));
  EpsilonResult er = epsilon_for(fn, bad);
  CHECK_FALSE(er.effective);
  CHECK(er.eps == Rat(0));
  CHECK_FALSE(er.diagnostic.empty());
}

TEST_CASE("decompose splits mixtures exactly") {
  Pipeline p(equiv7_example_1());
  PerturbationSpace space = finite_dim_space(p.fn, p.ref, p.closure.presentation);
  auto comps = uncovered_components(p.fn, p.closure.presentation, p.ref);
  const PerturbationFn& basis = space.finite_basis[0];

  // already piecewise linear over T: (pert, 0)
  auto [t0, z0] = decompose(p.fn, p.ref, basis);
  CHECK(t0 == basis);
  CHECK(z0.is_zero());

  // an equivariant sample alone: (0, sample)
  PerturbationFn s = equivariant_sample(comps[0], q(1, 4));
  auto [t1, z1] = decompose(p.fn, p.ref, s);
  CHECK(t1.is_zero());
  CHECK(z1 == s);

  // mixtures reconstruct exactly
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    Rat a(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 7));
    if (rng() % 2) a = -a;
    Rat h(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 5));
    PerturbationFn sample = equivariant_sample(comps[0], h);
    PerturbationFn mix = linear_combine({{a, &basis}, {Rat(1), &sample}});
    auto [tp, zp] = decompose(p.fn, p.ref, mix);
    PerturbationFn expected_t = linear_combine({{a, &basis}});
    CHECK(tp == expected_t);
    CHECK(zp == sample);
    PerturbationFn back = linear_combine({{Rat(1), &tp}, {Rat(1), &zp}});
    CHECK(back == mix);
  }
}

TEST_CASE("extremality verdicts for the catalog") {
  ExtremalityReport g = extremality_test(gmic(q(4, 5)));
  CHECK(g.verdict == Verdict::Extreme);
  CHECK_FALSE(g.witness.has_value());

  ExtremalityReport e = extremality_test(equiv7_example_1());
  CHECK(e.verdict == Verdict::NotExtreme);
  REQUIRE(e.witness.has_value());
  CHECK(e.epsilon > Rat(0));
  CHECK(proportional(*e.witness, paper_basis_equiv7()));

  ExtremalityReport m = extremality_test(minimal_no_covered_interval());
  CHECK(m.verdict == Verdict::Unsupported);
  CHECK(m.reason == "two-sided discontinuous at the origin");
  CHECK(m.components.size() == 2);

  ExtremalityReport nm = extremality_test(PwlFunction(
      PiecewiseCurve::interpolate({Rat(0), q(1, 2), Rat(1)}, {Rat(0), q(1, 2), Rat(0)}),
      q(1, 2)));
  CHECK(nm.verdict == Verdict::Unsupported);
}

TEST_CASE("equivariant-only witness: flat-top two-slope construction") {
  // interpolation of (0, 1/2, 1/2, 1, 1/2, 1/2) on sixths: minimal with a
  // nontrivial perturbation space
  std::map<Rat, Rat> vals;
  std::vector<Rat> vs{Rat(0), q(1, 2), q(1, 2), Rat(1), q(1, 2), q(1, 2)};
  for (long i = 0; i < 6; ++i) vals[q(i, 6)] = vs[i];
  PwlFunction fn = interpolate_from_grid(vals, q(1, 2));
  ExtremalityReport rep = extremality_test(fn);
  CHECK(rep.verdict == Verdict::NotExtreme);
  REQUIRE(rep.witness.has_value());
  CHECK(check_minimality(perturbed(fn, rep.epsilon, *rep.witness)).minimal);
  CHECK(check_minimality(perturbed(fn, -rep.epsilon, *rep.witness)).minimal);
}
