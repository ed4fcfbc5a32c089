#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sudiag/errors.hpp"
#include "sudiag/part.hpp"

namespace sudiag {

// A permutation of {1..n} in one-line notation: images[i] is the image of
// i+1.  Construction validates that the values are a rearrangement of 1..n.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

// Streams all n! permutations of 1..n in lexicographic order.  n = 0 yields
// an empty stream; n above kMaxN raises SizeCapError, negative n is invalid.
class PermutationStream {
public:
  explicit PermutationStream(int n);

  // Next permutation, or absent when the stream is exhausted.
  std::optional<Permutation> next();

private:
  std::vector<int> current_;
  bool done_ = false;
};

// All 2^|s| subsequences of s, preserving relative order and including the
// empty one.  Input length is capped at 16 to keep the result enumerable.
std::vector<std::vector<int>> enumerateSubsets(std::span<const int> s);

}  // namespace sudiag
