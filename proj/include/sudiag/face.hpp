#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "sudiag/partition.hpp"

namespace sudiag {

// A face of the permutahedron product P_n x P_n: a pair of ordered partitions
// of {1..n}.  The second factor is stored in reversed order relative to how it
// is displayed; rendering and the Tonks criterion undo the reversal.  Faces in
// the diagonal always satisfy
//   left.partCount() + rightInternal.partCount() == n + 1.
struct Face {
  OrderedPartition left;
  OrderedPartition rightInternal;

  int groundSize() const { return left.totalElements(); }

  bool operator==(const Face&) const = default;
};

// A face together with its orientation sign, always -1 or +1.
struct SignedFace {
  std::int8_t sign = 1;
  Face face;

  bool operator==(const SignedFace&) const = default;
};

// Validating constructor for faces arriving from outside the engine (tests,
// parsers).  Both factors must partition the same ground set {1..n} and the
// part counts must sum to n + 1.
inline Face makeFace(OrderedPartition left, OrderedPartition rightInternal) {
  const int n = left.totalElements();
  if (!left.isPartitionOf(n) || !rightInternal.isPartitionOf(n))
    throw std::invalid_argument("face factors must partition the same ground set 1..n");
  if (left.partCount() + rightInternal.partCount() != n + 1)
    throw std::invalid_argument("face part counts must sum to n + 1");
  return Face{left, rightInternal};
}

// Three-way comparison giving the canonical output order: lexicographic on
// the left factor, then on the second factor in its internal order, each as
// a sequence of ascending label sequences.
inline int compareFaces(const Face& a, const Face& b) {
  const int c = comparePartitions(a.left, b.left);
  if (c != 0) return c;
  return comparePartitions(a.rightInternal, b.rightInternal);
}

inline bool canonicalLess(const Face& a, const Face& b) {
  return compareFaces(a, b) < 0;
}

struct FaceHash {
  std::size_t operator()(const Face& f) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    const auto mix = [&h](std::uint64_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(f.left.partCount()));
    for (int i = 0; i < f.left.partCount(); ++i) mix(f.left.part(i).mask());
    for (int i = 0; i < f.rightInternal.partCount(); ++i)
      mix(f.rightInternal.part(i).mask());
    return static_cast<std::size_t>(h);
  }
};

}  // namespace sudiag
