#include "sudiag/moves.hpp"

#include <stdexcept>

namespace sudiag {

bool isAdmissible(const SignedFace& f, Part m) {
  if (m.empty()) return false;
  const OrderedPartition& left = f.face.left;

  // (a) one part contains all of m (disjointness rules out a second one)
  const int j = left.indexOfPartContaining(m.min());
  if (j < 0) return false;
  const Part source = left.part(j);
  if (!source.containsAll(m)) return false;

  // (b) a successor part exists
  if (j + 1 >= left.partCount()) return false;

  // (c) m is a proper subset of its part
  if (!m.isProperSubsetOf(source)) return false;

  // (d) every element of m exceeds the whole successor part
  const Part next = left.part(j + 1);
  if (m.min() <= next.max()) return false;

  // (e) the successor part avoids the rightInternal tail from the first
  // part holding min(m) onward
  const OrderedPartition& right = f.face.rightInternal;
  const int k = right.indexOfPartContaining(m.min());
  std::uint16_t tail = 0;
  for (int t = k; t < right.partCount(); ++t)
    tail = static_cast<std::uint16_t>(tail | right.part(t).mask());
  return !next.intersects(Part::fromMask(tail));
}

std::optional<SignedFace> applyShift(const SignedFace& f, Part m) {
  if (!isAdmissible(f, m)) return std::nullopt;

  SignedFace out = f;
  const int j = out.face.left.indexOfPartContaining(m.min());
  int sign = out.sign;
  for (int e : m) {
    const Part source = out.face.left.part(j);
    const Part target = out.face.left.part(j + 1);
    if (e <= target.max())
      throw std::logic_error("shift element does not exceed its target part; "
                             "admissibility checking is broken");
    const int cuts = source.countAbove(e) + target.countBelow(e);
    sign = cuts % 2 == 0 ? -sign : sign;
    out.face.left.moveElement(j, j + 1, e);
  }
  out.sign = static_cast<std::int8_t>(sign);
  return out;
}

std::vector<Part> admissibleSubsetsAt(int i, const SignedFace& f) {
  std::vector<Part> out;
  const OrderedPartition& left = f.face.left;
  if (i < 0 || i + 2 > left.partCount()) return out;

  // Only subsets of the elements beating the successor part's max can pass
  // condition (d), so nothing else is worth testing.
  const std::uint16_t large = left.part(i).above(left.part(i + 1).max()).mask();
  for (std::uint16_t sub = large; sub != 0;
       sub = static_cast<std::uint16_t>((sub - 1) & large)) {
    const Part m = Part::fromMask(sub);
    if (isAdmissible(f, m)) out.push_back(m);
  }
  return out;
}

SignedFace twist(const SignedFace& f) {
  return SignedFace{f.sign, Face{f.face.rightInternal, f.face.left}};
}

}  // namespace sudiag
