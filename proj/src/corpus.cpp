#include "groupcut/corpus.hpp"

#include <map>
#include <optional>
#include <random>

#include "groupcut/complex2d.hpp"
#include "groupcut/gridoracle.hpp"

namespace groupcut {

namespace {

std::optional<PwlFunction> random_symmetric_grid(std::mt19937& rng, long max_q) {
  long q = 4 + static_cast<long>(rng() % static_cast<unsigned>(std::max(1l, max_q - 3)));
  long fi = 1 + static_cast<long>(rng() % static_cast<unsigned>(q - 1));
  std::vector<Rat> v(q, Rat(0));
  std::vector<char> fixed(q, 0);
  v[0] = Rat(0);
  fixed[0] = 1;
  v[fi] = Rat(1);
  fixed[fi] = 1;
  for (long i = 1; i < q; ++i) {
    if (fixed[i]) continue;
    long j = ((fi - i) % q + q) % q;
    if (j == i) {
      v[i] = Rat(1, 2);
      fixed[i] = 1;
      continue;
    }
    Rat r(static_cast<long>(rng() % 5), 4);
    v[i] = r;
    v[j] = Rat(1) - r;
    fixed[i] = fixed[j] = 1;
  }
  GridFunction g{q, v, Rat(fi, q)};
  if (!grid_minimality(g)) return std::nullopt;
  std::map<Rat, Rat> values;
  for (long i = 0; i < q; ++i) values[Rat(i, q)] = v[i];
  return interpolate_from_grid(values, g.f);
}

std::optional<PwlFunction> perturbed_restriction(std::mt19937& rng, long max_q) {
  long q = 3 + static_cast<long>(rng() % static_cast<unsigned>(std::max(1l, max_q - 2)));
  long fi = 1 + static_cast<long>(rng() % static_cast<unsigned>(q - 1));
  GridFunction g = restrict_to_grid(gmic(Rat(fi, q)), q);
  RatMat basis = grid_perturbation_basis(g);
  if (basis.empty()) return std::nullopt;
  const RatVec& b = basis[rng() % basis.size()];
  std::optional<Rat> cap;
  auto tighten = [&](const Rat& num, const Rat& den) {
    Rat r = num / den.abs();
    if (!cap || r < *cap) cap = r;
  };
  for (long i = 0; i < q; ++i) {
    for (long j = i; j < q; ++j) {
      Rat slack = g.values[i] + g.values[j] - g.values[(i + j) % q];
      Rat db = b[i] + b[j] - b[(i + j) % q];
      if (slack == Rat(0) || db == Rat(0)) continue;
      tighten(slack, db);
    }
    if (b[i] != Rat(0)) tighten(g.values[i] == Rat(0) ? Rat(1) : g.values[i], b[i]);
  }
  Rat eps = cap ? *cap / Rat(2) : Rat(1, 4);
  if (eps <= Rat(0)) return std::nullopt;
  std::map<Rat, Rat> values;
  for (long i = 0; i < q; ++i) values[Rat(i, q)] = g.values[i] + eps * b[i];
  GridFunction gp{q, {}, g.f};
  for (long i = 0; i < q; ++i) gp.values.push_back(values[Rat(i, q)]);
  if (!grid_minimality(gp)) return std::nullopt;
  return interpolate_from_grid(values, g.f);
}

}  // namespace

std::vector<PwlFunction> random_minimal_corpus(const CorpusOptions& opts) {
  std::mt19937 rng(opts.seed);
  std::vector<PwlFunction> out;
  long attempts = 0;
  long cap = 200l * opts.count;
  while (static_cast<int>(out.size()) < opts.count && attempts++ < cap) {
    std::optional<PwlFunction> candidate;
    switch (rng() % 4) {
      case 0: {
        long q = 2 + static_cast<long>(rng() % static_cast<unsigned>(opts.max_q - 1));
        long fi = 1 + static_cast<long>(rng() % static_cast<unsigned>(q - 1));
        candidate = gmic(Rat(fi, q));
        break;
      }
      case 1: {
        // Two-slope shape with peak position j/q, keeping breakpoints on
        // the (1/q)-grid: s = (fi - 2j)/(q - fi).
        long q = 5 + static_cast<long>(rng() % static_cast<unsigned>(std::max(1l, opts.max_q - 4)));
        long fi = 3 + static_cast<long>(rng() % static_cast<unsigned>(std::max(1l, q - 3)));
        if (fi >= q) break;
        long j = 1 + static_cast<long>(rng() % static_cast<unsigned>(std::max(1l, (fi - 1) / 2)));
        Rat s = Rat(fi - 2 * j, q - fi);
        if (!(Rat(0) < s && s < Rat(1))) break;
        try {
          candidate = two_slope(Rat(fi, q), s);
        } catch (const std::invalid_argument&) {
          candidate.reset();
        }
        break;
      }
      case 2:
        candidate = random_symmetric_grid(rng, opts.max_q);
        break;
      default:
        candidate = perturbed_restriction(rng, opts.max_q);
        break;
    }
    if (!candidate) continue;
    if (!candidate->curve().is_continuous()) continue;
    if (!check_minimality(*candidate).minimal) continue;
    out.push_back(std::move(*candidate));
  }
  return out;
}

}  // namespace groupcut
