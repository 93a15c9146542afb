#include "lbpsteg/lbp.hpp"

#include <string>

#include "lbpsteg/error.hpp"

namespace lbpsteg {

std::array<std::uint8_t, 8> gather_neighbors(const GrayImage& img, std::size_t row, std::size_t col) {
  if (row < 1 || col < 1 || row + 1 >= img.height() || col + 1 >= img.width()) {
    throw OutOfBoundsError("LBP center (" + std::to_string(row) + ", " + std::to_string(col) +
                           ") lacks a full 3x3 neighborhood in a " + std::to_string(img.width()) +
                           "x" + std::to_string(img.height()) + " image");
  }
  std::array<std::uint8_t, 8> out{};
  for (std::size_t q = 0; q < 8; ++q) {
    out[q] = img.at(row + kNeighborOrder[q].drow, col + kNeighborOrder[q].dcol);
  }
  return out;
}

LbpCode lbp_code(const GrayImage& img, std::size_t row, std::size_t col) {
  const auto neighbors = gather_neighbors(img, row, col);
  return lbp_code(img.at(row, col), neighbors);
}

}  // namespace lbpsteg
