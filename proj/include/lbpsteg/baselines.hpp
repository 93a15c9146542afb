#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lbpsteg/image.hpp"

namespace lbpsteg {

enum class BaselineKind { LsbReplace, LsbMatch, Lsbmr };

// Classic spatial-domain embedders used as comparison points. Pixels are
// visited row-major; LSBMR consumes them in consecutive pairs.
struct BaselineMethod {
  BaselineKind kind = BaselineKind::LsbReplace;
  int k = 1;               // LsbReplace only: low bits replaced per pixel, 1..4
  std::uint64_t seed = 0;  // drives the +-1 choices of LsbMatch and Lsbmr

  static BaselineMethod lsb_replace(int k);
  static BaselineMethod lsb_match(std::uint64_t seed);
  static BaselineMethod lsbmr(std::uint64_t seed);

  // "lsb1".."lsb4", "lsbm", "lsbmr"
  std::string name() const;
};

// Parses a method name as produced by BaselineMethod::name().
BaselineMethod parse_baseline(const std::string& name, std::uint64_t seed);

// Bits are stored one per byte, each 0 or 1.
using BitVector = std::vector<std::uint8_t>;

BitVector bytes_to_bits(std::span<const std::uint8_t> bytes);  // MSB first

std::size_t baseline_capacity(const GrayImage& cover, const BaselineMethod& method);

// Throws CapacityError when bits do not fit.
GrayImage baseline_embed(const GrayImage& cover, std::span<const std::uint8_t> bits,
                         const BaselineMethod& method);

BitVector baseline_extract(const GrayImage& stego, std::size_t bit_count,
                           const BaselineMethod& method);

// LSBMR pair function: LSB(floor(a / 2) + b).
constexpr unsigned lsbmr_pair_bit(int a, int b) noexcept {
  return static_cast<unsigned>((a / 2 + b) & 1);
}

}  // namespace lbpsteg
