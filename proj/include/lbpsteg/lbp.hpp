#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "lbpsteg/image.hpp"

namespace lbpsteg {

struct Offset {
  int drow;
  int dcol;
};

// Neighbors of a 3x3 reference pixel, starting at the right neighbor and
// proceeding counterclockwise. Index q of this table is carried by bit (7 - q)
// of an LbpCode.
inline constexpr std::array<Offset, 8> kNeighborOrder{{
    {0, +1},   // right
    {-1, +1},  // upper right
    {-1, 0},   // up
    {-1, -1},  // upper left
    {0, -1},   // left
    {+1, -1},  // lower left
    {+1, 0},   // down
    {+1, +1},  // lower right
}};

inline constexpr int bit_for_neighbor(std::size_t q) noexcept { return 7 - static_cast<int>(q); }

// 8-bit pattern; a bit is set iff center >= that neighbor.
struct LbpCode {
  std::uint8_t bits = 0;

  constexpr bool center_ge(std::size_t q) const noexcept {
    return (bits >> bit_for_neighbor(q)) & 1u;
  }
  friend constexpr bool operator==(LbpCode, LbpCode) = default;
};

// Code of a 3x3 window given the center and the 8 neighbors in kNeighborOrder.
constexpr LbpCode lbp_code(std::uint8_t center, const std::array<std::uint8_t, 8>& neighbors) noexcept {
  std::uint8_t bits = 0;
  for (std::size_t q = 0; q < 8; ++q) {
    if (center >= neighbors[q]) bits |= static_cast<std::uint8_t>(1u << bit_for_neighbor(q));
  }
  return LbpCode{bits};
}

// Throws OutOfBoundsError when (row, col) lies on the image border.
LbpCode lbp_code(const GrayImage& img, std::size_t row, std::size_t col);

// The 8 neighbors of (row, col) in kNeighborOrder; same bounds rule as lbp_code.
std::array<std::uint8_t, 8> gather_neighbors(const GrayImage& img, std::size_t row, std::size_t col);

}  // namespace lbpsteg
