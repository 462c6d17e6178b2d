#include "glb/multi_index.hpp"

#include <stdexcept>

namespace glb {

std::optional<std::pair<MultiIndex, int>> MultiIndex::from_sequence(std::span<const std::size_t> seq) {
  std::uint64_t bits = 0;
  std::size_t inversions = 0;
  for (std::size_t i : seq) {
    if (i >= kMaxDim) throw std::out_of_range("basis position exceeds maximum dimension");
    const std::uint64_t bit = std::uint64_t{1} << i;
    if ((bits & bit) != 0) return std::nullopt;
    // Earlier entries larger than i each contribute one inversion.
    inversions += static_cast<std::size_t>(std::popcount(bits & ~((bit << 1) - 1)));
    bits |= bit;
  }
  return std::make_pair(MultiIndex(bits), inversions % 2 == 0 ? 1 : -1);
}

std::vector<std::size_t> MultiIndex::indices() const {
  std::vector<std::size_t> out;
  out.reserve(grade());
  std::uint64_t rest = bits_;
  while (rest != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    rest &= rest - 1;
  }
  return out;
}

}  // namespace glb
