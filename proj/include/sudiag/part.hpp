#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace sudiag {

// Largest supported ground set {1..kMaxN}.  A part packs into a 16-bit mask,
// and every face of the n-dimensional permutahedron has at most n+1 parts per
// factor.  Term counts grow like 2(n+1)^(n-2), so n beyond 12 is out of reach
// for enumeration no matter the representation.
inline constexpr int kMaxN = 12;

// One block of an ordered partition: a set of labels from {1..kMaxN}, always
// read out in ascending order.  Label v occupies bit v-1, so ascending order
// is structural and min/max/size are single bit operations.
class Part {
public:
  constexpr Part() = default;

  static constexpr Part fromMask(std::uint16_t mask) { return Part(mask); }

  // Builds a part from labels given in any order; rejects labels outside
  // {1..kMaxN} and duplicates.
  static Part fromElements(std::span<const int> elements) {
    std::uint16_t m = 0;
    for (int v : elements) {
      if (v < 1 || v > kMaxN)
        throw std::invalid_argument("part element out of range 1..12");
      const std::uint16_t bit = static_cast<std::uint16_t>(1u << (v - 1));
      if (m & bit) throw std::invalid_argument("duplicate part element");
      m |= bit;
    }
    return Part(m);
  }

  static Part fromElements(std::initializer_list<int> elements) {
    return fromElements(std::span<const int>(elements.begin(), elements.size()));
  }

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }

  // Smallest / largest label; parts handled by the engine are never empty.
  constexpr int min() const { return std::countr_zero(mask_) + 1; }
  constexpr int max() const { return std::bit_width(mask_); }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= 16 && (mask_ >> (v - 1)) & 1u;
  }
  constexpr bool containsAll(Part other) const {
    return (mask_ & other.mask_) == other.mask_;
  }
  constexpr bool intersects(Part other) const { return (mask_ & other.mask_) != 0; }
  constexpr bool isProperSubsetOf(Part other) const {
    return (other.mask_ & mask_) == mask_ && mask_ != other.mask_;
  }

  constexpr Part unionWith(Part other) const { return Part(mask_ | other.mask_); }
  constexpr Part intersectWith(Part other) const { return Part(mask_ & other.mask_); }
  constexpr Part minus(Part other) const {
    return Part(static_cast<std::uint16_t>(mask_ & ~other.mask_));
  }

  void insert(int v) { mask_ |= static_cast<std::uint16_t>(1u << (v - 1)); }
  void remove(int v) { mask_ &= static_cast<std::uint16_t>(~(1u << (v - 1))); }

  // Number of labels strictly greater / strictly less than v.
  constexpr int countAbove(int v) const { return std::popcount(static_cast<std::uint16_t>(mask_ >> v)); }
  constexpr int countBelow(int v) const {
    return std::popcount(static_cast<std::uint16_t>(mask_ & ((1u << (v - 1)) - 1u)));
  }
  // The sub-part of labels strictly greater than v.
  constexpr Part above(int v) const {
    return Part(static_cast<std::uint16_t>((mask_ >> v) << v));
  }

  std::vector<int> toVector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  // Iterates labels in ascending order.
  class iterator {
  public:
    constexpr explicit iterator(std::uint16_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= static_cast<std::uint16_t>(rest_ - 1);
      return *this;
    }
    constexpr bool operator==(const iterator&) const = default;

  private:
    std::uint16_t rest_;
  };
  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr bool operator==(const Part&) const = default;

private:
  constexpr explicit Part(std::uint16_t mask) : mask_(mask) {}

  std::uint16_t mask_ = 0;
};

// Mask of the full interval {lo..hi}; lo <= hi, both in 1..16.
constexpr std::uint16_t intervalMask(int lo, int hi) {
  const std::uint32_t upto = (1u << hi) - 1u;
  const std::uint32_t below = (1u << (lo - 1)) - 1u;
  return static_cast<std::uint16_t>(upto & ~below);
}

// Mask of the full ground set {1..n}.
constexpr std::uint16_t fullMask(int n) {
  return n == 0 ? 0 : intervalMask(1, n);
}

// Three-way comparison of two parts as ascending label sequences, i.e. the
// order in which [1,2] < [2] even though its mask is numerically larger.
// The smallest differing label decides: whichever part owns it comes first,
// unless the other part has nothing at or beyond that label (a proper prefix
// sorts first).
constexpr int compareParts(Part a, Part b) {
  if (a == b) return 0;
  const std::uint32_t diff = a.mask() ^ b.mask();
  const std::uint32_t low = diff & (~diff + 1u);
  const std::uint32_t above = ~((low << 1) - 1u);
  if (a.mask() & low) return (b.mask() & above) ? -1 : 1;
  return (a.mask() & above) ? 1 : -1;
}

}  // namespace sudiag
