#include "sudiag/signs.hpp"

#include <stdexcept>
#include <vector>

namespace sudiag {

int permutationSign(const Permutation& pi) {
  const int n = pi.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int sign = 1;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int length = 0;
    for (int j = start; !seen[static_cast<std::size_t>(j)];
         j = pi.images()[static_cast<std::size_t>(j)] - 1) {
      seen[static_cast<std::size_t>(j)] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

int rightmostSign(const OrderedPartition& q) {
  if (q.empty())
    throw std::invalid_argument("rightmost sign needs a nonempty partition");
  const int n = q.totalElements();
  if (!q.isPartitionOf(n))
    throw std::invalid_argument("rightmost sign: parts must concatenate to a permutation of 1..n");

  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < q.partCount(); ++i)
    for (int v : q.part(i)) images.push_back(v);

  int epsilon = 0;
  for (int i = 0; i + 1 < q.partCount(); ++i) epsilon += (i + 1) * q.part(i).size();

  const int sign = epsilon % 2 == 0 ? 1 : -1;
  return sign * permutationSign(Permutation(std::move(images)));
}

int orderReversingSign(const OrderedPartition& p) {
  int squares = 0;
  for (int i = 0; i < p.partCount(); ++i) {
    const int s = p.part(i).size();
    squares += s * s;
  }
  const int exponent = (squares - p.totalElements()) / 2;
  return exponent % 2 == 0 ? 1 : -1;
}

SignedFace cornerSign(const Face& f) {
  const int r = f.rightInternal.partCount();
  int sign = (r * (r - 1) / 2) % 2 == 0 ? 1 : -1;
  sign *= orderReversingSign(f.left);
  sign *= rightmostSign(f.rightInternal.reversed());
  return SignedFace{static_cast<std::int8_t>(sign), f};
}

}  // namespace sudiag
