#include "sudiag/projection.hpp"

namespace sudiag {

bool isDerivedConsecutive(const OrderedPartition& p) {
  std::uint16_t seen = 0;
  for (int i = 0; i < p.partCount(); ++i) {
    const Part part = p.part(i);
    const std::uint16_t interval = intervalMask(part.min(), part.max());
    if (interval & ~(seen | part.mask())) return false;
    seen = static_cast<std::uint16_t>(seen | part.mask());
  }
  return true;
}

Diagonal diagonalOfAssociahedron(int n, int threads) {
  const Diagonal full = diagonalOfPermutahedron(n, threads);
  Diagonal projected;
  for (const auto& [face, coeff] : full.terms()) {
    if (isDerivedConsecutive(face.left) &&
        isDerivedConsecutive(face.rightInternal.reversed()))
      projected.add(face, coeff);
  }
  return projected;
}

}  // namespace sudiag
