#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sudiag/closure.hpp"
#include "sudiag/errors.hpp"
#include "sudiag/permutation.hpp"
#include "sudiag/render.hpp"
#include "sudiag/runs.hpp"

using namespace sudiag;

namespace {

SignedFace stepFaceOf(std::vector<int> images) {
  return buildStepFace(Permutation(std::move(images)));
}

std::set<std::string> renderedSet(const std::vector<SignedFace>& faces) {
  std::set<std::string> out;
  for (const auto& sf : faces) out.insert(renderSignedFace(sf));
  return out;
}

// Accumulates only the seeds whose stream position passes the filter;
// used to exercise merging over disjoint seed splits.
Diagonal diagonalOfSeedSlice(int n, int modulus, int remainder) {
  Diagonal d;
  PermutationStream stream(n);
  int index = 0;
  while (auto p = stream.next()) {
    if (index % modulus == remainder) {
      const auto faces = derivedFaces(buildStepFace(*p));
      d.mergeFrom(accumulateDiagonal(faces));
    }
    ++index;
  }
  return d;
}

}  // namespace

TEST_CASE("an immobile seed derives only itself") {
  const SignedFace seed = stepFaceOf({1, 2, 3});
  const auto faces = derivedFaces(seed);
  REQUIRE(faces.size() == 1);
  CHECK(faces.front() == seed);
}

TEST_CASE("derived faces reach the expected neighbours") {
  CHECK(renderedSet(derivedFaces(stepFaceOf({3, 1, 2}))) ==
        std::set<std::string>{"-1,3|2x3|1,2", "-1|2,3x3|1,2"});
  CHECK(renderedSet(derivedFaces(stepFaceOf({2, 1, 3}))) ==
        std::set<std::string>{"+1,2|3x2|1,3", "+1,2|3x2,3|1"});
}

TEST_CASE("exact duplicates collapse before signs accumulate") {
  const Face f = stepFaceOf({1, 2, 3}).face;
  const Face g = stepFaceOf({1, 3, 2}).face;

  CHECK(accumulateDiagonal({}).empty());

  const std::vector<SignedFace> twice{{1, f}, {1, f}};
  const Diagonal collapsed = accumulateDiagonal(twice);
  CHECK(collapsed.termCount() == 1);
  CHECK(collapsed.coefficient(f) == 1);

  const std::vector<SignedFace> mixed{{1, f}, {-1, g}};
  const Diagonal kept = accumulateDiagonal(mixed);
  CHECK(kept.termCount() == 2);
  CHECK(kept.coefficient(f) == 1);
  CHECK(kept.coefficient(g) == -1);
  CHECK(kept.coefficient(stepFaceOf({2, 1, 3}).face) == 0);
}

TEST_CASE("permutahedron term counts match the published table") {
  const std::size_t expected[] = {1, 2, 8, 50, 432, 4802};
  for (int n = 1; n <= 6; ++n)
    CHECK(diagonalOfPermutahedron(n).termCount() == expected[n - 1]);
}

TEST_CASE("every coefficient in the diagonal is a unit") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [face, coeff] : diagonalOfPermutahedron(n).terms()) {
      CHECK((coeff == 1 || coeff == -1));
    }
  }
}

TEST_CASE("merging partial diagonals is associative, commutative and complete") {
  const Diagonal whole = diagonalOfPermutahedron(4);
  CHECK(mergeDiagonals(whole, Diagonal()) == whole);
  CHECK(mergeDiagonals(Diagonal(), whole) == whole);

  // two-way split of the n=4 seeds
  const Diagonal even = diagonalOfSeedSlice(4, 2, 0);
  const Diagonal odd = diagonalOfSeedSlice(4, 2, 1);
  CHECK(mergeDiagonals(even, odd) == whole);
  CHECK(mergeDiagonals(odd, even) == whole);

  // four-way split of the n=5 seeds, merged in two different orders
  const Diagonal q0 = diagonalOfSeedSlice(5, 4, 0);
  const Diagonal q1 = diagonalOfSeedSlice(5, 4, 1);
  const Diagonal q2 = diagonalOfSeedSlice(5, 4, 2);
  const Diagonal q3 = diagonalOfSeedSlice(5, 4, 3);
  const Diagonal forward = mergeDiagonals(mergeDiagonals(q0, q1), mergeDiagonals(q2, q3));
  const Diagonal scrambled = mergeDiagonals(mergeDiagonals(q3, q1), mergeDiagonals(q0, q2));
  CHECK(forward == scrambled);
  CHECK(forward == diagonalOfPermutahedron(5));
}

TEST_CASE("any thread count yields the identical diagonal") {
  const Diagonal sequential = diagonalOfPermutahedron(4, 1);
  CHECK(diagonalOfPermutahedron(4, 2) == sequential);
  CHECK(diagonalOfPermutahedron(4, 0) == sequential);
}

TEST_CASE("out-of-range sizes are rejected") {
  CHECK_THROWS_AS(diagonalOfPermutahedron(0), std::invalid_argument);
  CHECK_THROWS_AS(diagonalOfPermutahedron(-3), std::invalid_argument);
  CHECK_THROWS_AS(diagonalOfPermutahedron(13), SizeCapError);
}

TEST_CASE("no face arises from two different seeds") {
  for (int n = 1; n <= 4; ++n) {
    std::unordered_map<Face, int, FaceHash> owner;
    PermutationStream stream(n);
    int seedIndex = 0;
    while (auto p = stream.next()) {
      const Diagonal d = accumulateDiagonal(derivedFaces(buildStepFace(*p)));
      for (const auto& [face, coeff] : d.terms()) {
        const auto [it, inserted] = owner.emplace(face, seedIndex);
        CHECK(inserted);
        if (!inserted) CHECK(it->second == seedIndex);
      }
      ++seedIndex;
    }
  }
}

TEST_CASE("canonical terms are fully sorted") {
  const auto terms = canonicalTerms(diagonalOfPermutahedron(3));
  REQUIRE(terms.size() == 8);
  for (std::size_t i = 1; i < terms.size(); ++i)
    CHECK(canonicalLess(terms[i - 1].first, terms[i].first));
  CHECK(renderSignedFace(terms.front().second, terms.front().first) == "+1|2|3x1,2,3");
  CHECK(renderSignedFace(terms.back().second, terms.back().first) == "+2|1,3x2,3|1");
}
