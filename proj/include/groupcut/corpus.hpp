#ifndef GROUPCUT_CORPUS_HPP
#define GROUPCUT_CORPUS_HPP

#include <vector>

#include "groupcut/pwl.hpp"

namespace groupcut {

struct CorpusOptions {
  unsigned seed = 1;
  int count = 100;
  long max_q = 10;
};

/// Deterministic stream of continuous minimal functions with breakpoints in
/// (1/q)Z, q <= max_q: catalog two-slope shapes, random symmetric grid
/// functions filtered through the finite minimality system, and slack-scaled
/// grid perturbations of catalog restrictions.
std::vector<PwlFunction> random_minimal_corpus(const CorpusOptions& opts);

}  // namespace groupcut

#endif
