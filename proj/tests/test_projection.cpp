#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "sudiag/errors.hpp"
#include "sudiag/projection.hpp"

using namespace sudiag;

using VecVec = std::vector<std::vector<int>>;

namespace {

bool consecutive(const VecVec& parts) {
  return isDerivedConsecutive(OrderedPartition::fromVectors(parts));
}

}  // namespace

TEST_CASE("derived-consecutive scans interval coverage left to right") {
  CHECK(consecutive({{1}, {2, 3}}));
  CHECK_FALSE(consecutive({{1, 3}, {2}}));
  CHECK(consecutive({{2}, {1, 3}}));
  CHECK(consecutive({{2, 3}, {1}}));
  CHECK(consecutive({{3}, {1, 2}}));
  CHECK(consecutive({{1, 2, 3}}));
  CHECK(consecutive({{3}, {2}, {1}}));
  CHECK_FALSE(consecutive({{1, 4}, {2, 3}}));
  CHECK_FALSE(consecutive({{2, 4}, {1}, {3}}));
  CHECK(consecutive({}));
}

TEST_CASE("associahedron term counts match the published sequence") {
  const std::size_t expected[] = {1, 2, 6, 22, 91};
  for (int n = 1; n <= 5; ++n)
    CHECK(diagonalOfAssociahedron(n).termCount() == expected[n - 1]);
}

TEST_CASE("the projection keeps a coefficient-preserving sub-diagonal") {
  for (int n = 1; n <= 4; ++n) {
    const Diagonal full = diagonalOfPermutahedron(n);
    const Diagonal projected = diagonalOfAssociahedron(n);
    CHECK(projected.termCount() <= full.termCount());
    for (const auto& [face, coeff] : projected.terms()) {
      CHECK(full.coefficient(face) == coeff);
      CHECK(isDerivedConsecutive(face.left));
      CHECK(isDerivedConsecutive(face.rightInternal.reversed()));
    }
    // and nothing that qualifies is dropped
    std::size_t qualifying = 0;
    for (const auto& [face, coeff] : full.terms()) {
      if (isDerivedConsecutive(face.left) &&
          isDerivedConsecutive(face.rightInternal.reversed()))
        ++qualifying;
    }
    CHECK(projected.termCount() == qualifying);
  }
}

TEST_CASE("projection rejects out-of-range sizes like the full diagonal") {
  CHECK_THROWS_AS(diagonalOfAssociahedron(0), std::invalid_argument);
  CHECK_THROWS_AS(diagonalOfAssociahedron(13), SizeCapError);
}
