#include "groupcut/gridoracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "groupcut/linalg.hpp"

namespace groupcut {

std::vector<size_t> rref(RatMat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t ncols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < m.size(); ++col) {
    size_t pr = row;
    while (pr < m.size() && m[pr][col] == Rat(0)) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[row], m[pr]);
    Rat inv = Rat(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == Rat(0)) continue;
      Rat factor = m[r][col];
      for (size_t c = col; c < ncols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RatMat nullspace_basis(RatMat m, size_t ncols) {
  for (const auto& r : m)
    if (r.size() != ncols) throw std::invalid_argument("nullspace_basis: ragged matrix");
  std::vector<size_t> pivots = rref(m);
  std::vector<char> is_pivot(ncols, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  RatMat basis;
  for (size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    RatVec v(ncols, Rat(0));
    v[fc] = Rat(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m[pi][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

GridFunction restrict_to_grid(const PwlFunction& fn, long q) {
  if (q < 2) throw std::invalid_argument("restrict_to_grid: q must be at least 2");
  if (!fn.f().den().fits_slong_p() || q % fn.f().den().get_si() != 0)
    throw std::invalid_argument("restrict_to_grid: f not on the (1/q)-grid");
  GridFunction g;
  g.q = q;
  g.f = fn.f();
  g.values.reserve(q);
  for (long i = 0; i < q; ++i) {
    Rat x(i, q);
    LimitTriple t = fn.limits(x);
    if (!t.is_continuous())
      throw std::invalid_argument("restrict_to_grid: discontinuity at grid point " + x.str());
    g.values.push_back(t.value);
  }
  return g;
}

namespace {
long f_index(const GridFunction& g) {
  Rat fq = g.f * Rat(g.q);
  if (!fq.is_integer() || fq <= Rat(0) || fq >= Rat(g.q))
    throw std::invalid_argument("grid function: f must be an interior grid point");
  return fq.num().get_si();
}
}  // namespace

bool grid_minimality(const GridFunction& g) {
  long q = g.q;
  if (g.values[0] != Rat(0)) return false;
  long fi = f_index(g);
  if (g.values[fi % q] != Rat(1)) return false;
  for (const Rat& v : g.values)
    if (v < Rat(0)) return false;
  for (long i = 0; i < q; ++i) {
    for (long j = i; j < q; ++j) {
      if (g.values[i] + g.values[j] - g.values[(i + j) % q] < Rat(0)) return false;
    }
    long k = ((fi - i) % q + q) % q;
    if (g.values[i] + g.values[k] - g.values[fi % q] != Rat(0)) return false;
  }
  return true;
}

RatMat grid_perturbation_basis(const GridFunction& g) {
  if (!grid_minimality(g))
    throw std::invalid_argument("grid_perturbation_basis: input is not grid-minimal");
  long q = g.q;
  long fi = f_index(g) % q;
  std::set<RatVec> rows;
  auto unit_row = [&](long i) {
    RatVec r(q, Rat(0));
    r[i] = Rat(1);
    return r;
  };
  rows.insert(unit_row(0));
  rows.insert(unit_row(fi));
  for (long i = 0; i < q; ++i)
    for (long j = i; j < q; ++j) {
      if (g.values[i] + g.values[j] - g.values[(i + j) % q] != Rat(0)) continue;
      RatVec r(q, Rat(0));
      r[i] += Rat(1);
      r[j] += Rat(1);
      r[(i + j) % q] -= Rat(1);
      bool zero = std::all_of(r.begin(), r.end(), [](const Rat& v) { return v == Rat(0); });
      if (!zero) rows.insert(std::move(r));
    }
  RatMat m(rows.begin(), rows.end());
  return nullspace_basis(std::move(m), q);
}

long grid_perturbation_dimension(const GridFunction& g) {
  return static_cast<long>(grid_perturbation_basis(g).size());
}

PerturbationFn grid_perturbation_to_fn(const GridFunction& g, const RatVec& coords) {
  if (coords.size() != static_cast<size_t>(g.q))
    throw std::invalid_argument("grid_perturbation_to_fn: wrong length");
  std::vector<Rat> xs, vs;
  for (long i = 0; i < g.q; ++i) {
    xs.emplace_back(i, g.q);
    vs.push_back(coords[i]);
  }
  xs.emplace_back(1);
  vs.push_back(coords[0]);
  return PerturbationFn(PiecewiseCurve::interpolate(std::move(xs), std::move(vs)));
}

GridVerdict grid_extremality_oracle(const PwlFunction& fn, long oversample) {
  if (oversample < 1) throw std::invalid_argument("grid_extremality_oracle: oversample >= 1");
  if (!fn.curve().is_continuous())
    throw std::invalid_argument("grid_extremality_oracle: function must be continuous");
  std::vector<Rat> data = fn.curve().breakpoints().points();
  data.push_back(fn.f());
  mpz_class q = common_denominator(data);
  if (!q.fits_slong_p() || q.get_si() > 100000)
    throw std::invalid_argument("grid_extremality_oracle: breakpoint grid too fine");
  long Q = q.get_si() * oversample;
  if (Q < 2) Q = 2;
  GridFunction g = restrict_to_grid(fn, Q);
  return grid_perturbation_dimension(g) == 0 ? GridVerdict::Extreme : GridVerdict::NotExtreme;
}

}  // namespace groupcut
