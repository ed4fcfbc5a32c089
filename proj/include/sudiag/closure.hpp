#pragma once

#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sudiag/face.hpp"

namespace sudiag {

// A signed linear combination of faces: a mapping face -> integer
// coefficient.  The enumeration only ever produces coefficients -1 and +1
// (asserted at the end of diagonalOfPermutahedron); keys that cancel to zero
// would stay in the map but are skipped by every renderer.
class Diagonal {
public:
  using TermMap = std::unordered_map<Face, int, FaceHash>;

  void add(const Face& face, int coeff) { terms_[face] += coeff; }

  void mergeFrom(const Diagonal& other) {
    for (const auto& [face, coeff] : other.terms_) terms_[face] += coeff;
  }

  std::size_t termCount() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of a face, zero when absent.
  int coefficient(const Face& face) const {
    const auto it = terms_.find(face);
    return it == terms_.end() ? 0 : it->second;
  }

  void reserve(std::size_t n) { terms_.reserve(n); }

  bool operator==(const Diagonal&) const = default;

private:
  TermMap terms_;
};

// The seed face plus everything reachable from it by the two-phase shift
// schedule: right-moves swept over the left part indices in order (faces
// produced at index i are themselves re-examined at i), then down-moves as
// the twist-conjugated sweep seeded with the whole first-phase accumulation.
// The list may contain exact duplicates; callers deduplicate.
std::vector<SignedFace> derivedFaces(const SignedFace& seed);

// Removes exact duplicates (equal face AND equal sign), then sums the
// remaining signs per face.
Diagonal accumulateDiagonal(std::span<const SignedFace> faces);

// Coefficient-wise sum; associative and commutative with the empty Diagonal
// as identity, so parallel partial results can be combined in any order.
Diagonal mergeDiagonals(Diagonal a, const Diagonal& b);

// Terms sorted into the canonical output order (lexicographic on the left
// factor, then the second factor in internal order).
std::vector<std::pair<Face, int>> canonicalTerms(const Diagonal& d);

// The full diagonal of the n-dimensional permutahedron: the union over all
// n! step-matrix seeds of their derived faces, deduplicated per seed and
// accumulated.  threads = 1 forces sequential execution, threads <= 0 uses
// the available hardware parallelism; any schedule yields the same Diagonal.
// Rejects n < 1 (invalid argument) and n > kMaxN (SizeCapError).
Diagonal diagonalOfPermutahedron(int n, int threads = 1);

}  // namespace sudiag
