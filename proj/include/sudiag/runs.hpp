#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sudiag/face.hpp"
#include "sudiag/permutation.hpp"

namespace sudiag {

// Splits s into maximal runs in which every adjacent pair (x, y) satisfies
// keep(x, y).  Concatenating the runs restores s; the greedy left-to-right
// split is the unique maximal one.
template <typename Keep>
std::vector<std::vector<int>> monotonicRuns(Keep&& keep, std::span<const int> s) {
  std::vector<std::vector<int>> runs;
  for (int v : s) {
    if (!runs.empty() && keep(runs.back().back(), v))
      runs.back().push_back(v);
    else
      runs.push_back(std::vector<int>{v});
  }
  return runs;
}

// Maximal non-strictly ascending runs of the image sequence.
std::vector<std::vector<int>> risingPartition(const Permutation& s);

// Maximal non-strictly descending runs of the image sequence.
std::vector<std::vector<int>> fallingPartition(const Permutation& s);

// The step-matrix face of a permutation: falling runs (each sorted ascending)
// as the left factor, rising runs in reversed list order as the second, and
// the corner sign attached.  These are the seeds of the whole enumeration.
SignedFace buildStepFace(const Permutation& s);

}  // namespace sudiag
