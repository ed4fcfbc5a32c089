#include "sudiag/runs.hpp"

#include "sudiag/signs.hpp"

namespace sudiag {

std::vector<std::vector<int>> risingPartition(const Permutation& s) {
  return monotonicRuns([](int x, int y) { return x <= y; }, std::span<const int>(s.images()));
}

std::vector<std::vector<int>> fallingPartition(const Permutation& s) {
  return monotonicRuns([](int x, int y) { return x >= y; }, std::span<const int>(s.images()));
}

SignedFace buildStepFace(const Permutation& s) {
  OrderedPartition left;
  for (const auto& run : fallingPartition(s))
    left.append(Part::fromElements(run));  // mask storage sorts the run

  const auto rising = risingPartition(s);
  OrderedPartition rightInternal;
  for (auto it = rising.rbegin(); it != rising.rend(); ++it)
    rightInternal.append(Part::fromElements(*it));

  return cornerSign(Face{left, rightInternal});
}

}  // namespace sudiag
