#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lagrangian {

// Subset of a ground set {1..n}, n <= 64, stored as a bitmask (bit e-1 holds
// element e).
class eset {
 public:
  constexpr eset() = default;
  constexpr explicit eset(std::uint64_t bits) : bits_(bits) {}

  static constexpr eset full(int n) {
    return eset(n >= 64 ? ~0ull : (1ull << n) - 1);
  }
  static eset of(std::initializer_list<int> elems) {
    eset s;
    for (int e : elems) s = s.with(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int e) const { return (bits_ >> (e - 1)) & 1; }
  constexpr eset with(int e) const { return eset(bits_ | (1ull << (e - 1))); }
  constexpr eset without(int e) const { return eset(bits_ & ~(1ull << (e - 1))); }
  int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(eset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(eset o) const {
    return subset_of(o) && bits_ != o.bits_;
  }

  friend constexpr eset operator|(eset a, eset b) { return eset(a.bits_ | b.bits_); }
  friend constexpr eset operator&(eset a, eset b) { return eset(a.bits_ & b.bits_); }
  friend constexpr eset operator-(eset a, eset b) { return eset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(eset a, eset b) { return a.bits_ == b.bits_; }
  friend constexpr auto operator<=>(eset a, eset b) { return a.bits_ <=> b.bits_; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  // Ascending comma-separated element list, e.g. "1,2,4". Empty set -> "".
  std::string label() const {
    std::string out;
    for (int e : elements()) {
      if (!out.empty()) out.push_back(',');
      out += std::to_string(e);
    }
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Size-then-mask order; within one cardinality this matches lexicographic
// order on the ascending element lists.
inline bool canonical_less(eset a, eset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

}  // namespace lagrangian
