#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace glb {

/// Largest ambient dimension supported by the bitmask representation.
inline constexpr std::size_t kMaxDim = 64;

/// Strictly increasing set of basis positions, stored as a bitmask.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;
  static constexpr MultiIndex from_bits(std::uint64_t bits) { return MultiIndex(bits); }
  static constexpr MultiIndex single(std::size_t i) { return MultiIndex(std::uint64_t{1} << i); }

  /// Sorts an arbitrary index sequence. Returns the sorted index and the sign
  /// of the sorting permutation, or nullopt if an index repeats.
  static std::optional<std::pair<MultiIndex, int>> from_sequence(std::span<const std::size_t> seq);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t grade() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  /// Highest position + 1, or 0 when empty.
  constexpr std::size_t span_end() const { return bits_ == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  std::vector<std::size_t> indices() const;

  /// Number of elements strictly below position i.
  constexpr std::size_t rank_of(std::size_t i) const {
    const std::uint64_t below = i == 0 ? 0 : (i >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1);
    return static_cast<std::size_t>(std::popcount(bits_ & below));
  }

  constexpr MultiIndex without(std::size_t i) const { return MultiIndex(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr MultiIndex with(std::size_t i) const { return MultiIndex(bits_ | (std::uint64_t{1} << i)); }

  friend constexpr bool operator==(MultiIndex a, MultiIndex b) { return a.bits_ == b.bits_; }

  /// Canonical order: by grade, then lexicographically on the index lists.
  friend constexpr bool operator<(MultiIndex a, MultiIndex b) {
    if (a.grade() != b.grade()) return a.grade() < b.grade();
    if (a.bits_ == b.bits_) return false;
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    const std::uint64_t lowest = diff & (~diff + 1);
    return (a.bits_ & lowest) != 0;
  }

 private:
  constexpr explicit MultiIndex(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Sign of e_A ∧ e_B relative to e_{A∪B}; zero when A and B intersect.
constexpr int merge_sign(MultiIndex a, MultiIndex b) {
  if ((a.bits() & b.bits()) != 0) return 0;
  // Count pairs (x in A, y in B) with x > y.
  std::size_t inversions = 0;
  std::uint64_t rest = b.bits();
  while (rest != 0) {
    const int y = std::countr_zero(rest);
    rest &= rest - 1;
    const std::uint64_t above = y >= 63 ? 0 : ~((std::uint64_t{2} << y) - 1);
    inversions += static_cast<std::size_t>(std::popcount(a.bits() & above));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace glb
