#include "sudiag/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sudiag {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation value out of range 1..n");
    if (seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("permutation value repeated");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

PermutationStream::PermutationStream(int n) {
  if (n < 0) throw std::invalid_argument("permutation stream size must be nonnegative");
  if (n > kMaxN)
    throw SizeCapError("ground set size exceeds the supported bound of 12");
  current_.resize(static_cast<std::size_t>(n));
  std::iota(current_.begin(), current_.end(), 1);
  done_ = (n == 0);
}

std::optional<Permutation> PermutationStream::next() {
  if (done_) return std::nullopt;
  Permutation out(current_);
  if (!std::next_permutation(current_.begin(), current_.end())) done_ = true;
  return out;
}

std::vector<std::vector<int>> enumerateSubsets(std::span<const int> s) {
  if (s.size() > 16)
    throw std::invalid_argument("subset enumeration limited to 16 elements");
  const std::uint32_t total = 1u << s.size();
  std::vector<std::vector<int>> out;
  out.reserve(total);
  for (std::uint32_t pick = 0; pick < total; ++pick) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (pick & (1u << i)) subset.push_back(s[i]);
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace sudiag
