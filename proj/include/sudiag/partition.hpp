#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sudiag/part.hpp"

namespace sudiag {

// An ordered partition: a sequence of pairwise disjoint nonempty parts.  The
// ground set is whatever the parts cover; faces require it to be {1..n}.
// Storage is a fixed array so partitions are cheap to copy, hash and compare;
// slots past partCount() are kept empty so defaulted equality works.
class OrderedPartition {
public:
  static constexpr int kMaxParts = kMaxN + 1;

  OrderedPartition() = default;

  static OrderedPartition fromParts(std::span<const Part> parts) {
    OrderedPartition p;
    for (Part q : parts) p.append(q);
    return p;
  }

  static OrderedPartition fromVectors(const std::vector<std::vector<int>>& parts) {
    OrderedPartition p;
    for (const auto& q : parts) p.append(Part::fromElements(q));
    return p;
  }

  int partCount() const { return count_; }
  bool empty() const { return count_ == 0; }

  Part part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

  // Moves label v between two existing parts.  The caller guarantees v is in
  // the source part and that the source keeps at least one label, so the
  // disjointness and nonemptiness invariants survive.
  void moveElement(int from, int to, int v) {
    parts_[static_cast<std::size_t>(from)].remove(v);
    parts_[static_cast<std::size_t>(to)].insert(v);
  }

  void append(Part p) {
    if (p.empty()) throw std::invalid_argument("partition part must be nonempty");
    if (count_ >= kMaxParts) throw std::invalid_argument("too many parts");
    if (ground_ & p.mask()) throw std::invalid_argument("partition parts must be disjoint");
    parts_[static_cast<std::size_t>(count_)] = p;
    ++count_;
    ground_ = static_cast<std::uint16_t>(ground_ | p.mask());
  }

  std::uint16_t groundMask() const { return ground_; }
  int totalElements() const { return std::popcount(ground_); }

  // True when the parts partition exactly {1..n}.
  bool isPartitionOf(int n) const { return ground_ == fullMask(n); }

  OrderedPartition reversed() const {
    OrderedPartition p;
    for (int i = count_ - 1; i >= 0; --i) p.append(parts_[static_cast<std::size_t>(i)]);
    return p;
  }

  std::vector<std::vector<int>> toVectors() const {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (int i = 0; i < count_; ++i) out.push_back(part(i).toVector());
    return out;
  }

  // 0-based index of the part containing label v, or -1 if no part does.
  int indexOfPartContaining(int v) const {
    for (int i = 0; i < count_; ++i)
      if (part(i).contains(v)) return i;
    return -1;
  }

  bool operator==(const OrderedPartition&) const = default;

private:
  std::array<Part, kMaxParts> parts_{};
  std::uint16_t ground_ = 0;
  std::uint8_t count_ = 0;
};

// Three-way lexicographic comparison as sequences of ascending label
// sequences (part against part via compareParts, shorter prefix first).
inline int comparePartitions(const OrderedPartition& a, const OrderedPartition& b) {
  const int n = a.partCount() < b.partCount() ? a.partCount() : b.partCount();
  for (int i = 0; i < n; ++i) {
    const int c = compareParts(a.part(i), b.part(i));
    if (c != 0) return c;
  }
  return a.partCount() - b.partCount();
}

}  // namespace sudiag
