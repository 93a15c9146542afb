#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lbpsteg/image.hpp"
#include "lbpsteg/lbp.hpp"

namespace lbpsteg {

// Number of payload bits written into the low bits of each neighbor pixel.
// Acts as the shared key: extraction must use the same value.
class StegoParams {
 public:
  static constexpr int kMinMu = 1;
  static constexpr int kMaxMu = 4;

  // Throws InvalidArgumentError outside [1, 4].
  explicit StegoParams(int mu);

  int mu() const noexcept { return mu_; }
  // 2^mu: the sync correction and the clamp margin.
  int step() const noexcept { return 1 << mu_; }
  std::uint8_t low_mask() const noexcept { return static_cast<std::uint8_t>(step() - 1); }

 private:
  int mu_;
};

// Non-overlapping 3x3 tiles in row-major order. Right/bottom strips narrower
// than 3 pixels belong to no block.
struct BlockGrid {
  std::size_t block_rows = 0;
  std::size_t block_cols = 0;

  static BlockGrid of(const GrayImage& img) noexcept { return {img.height() / 3, img.width() / 3}; }

  std::size_t count() const noexcept { return block_rows * block_cols; }
  std::size_t reference_row(std::size_t index) const noexcept { return 3 * (index / block_cols) + 1; }
  std::size_t reference_col(std::size_t index) const noexcept { return 3 * (index % block_cols) + 1; }
};

struct Block {
  std::uint8_t center = 0;
  std::array<std::uint8_t, 8> neighbors{};  // kNeighborOrder

  LbpCode lbp() const noexcept { return lbp_code(center, neighbors); }
  friend bool operator==(const Block&, const Block&) = default;
};

Block read_block(const GrayImage& img, const BlockGrid& grid, std::size_t index);
void write_block(GrayImage& img, const BlockGrid& grid, std::size_t index, const Block& block);

constexpr std::uint8_t mask_byte(LbpCode lbp, std::uint8_t p) noexcept {
  return static_cast<std::uint8_t>(lbp.bits ^ p);
}

// Swaps the bits inside each adjacent pair (0<->1, 2<->3, 4<->5, 6<->7).
constexpr std::uint8_t shuffle_byte(std::uint8_t x) noexcept {
  return static_cast<std::uint8_t>(((x & 0x55u) << 1) | ((x & 0xAAu) >> 1));
}

// The pair swap is an involution, so this is shuffle_byte again.
constexpr std::uint8_t unshuffle_byte(std::uint8_t y) noexcept { return shuffle_byte(y); }

// Pulls a neighbor into [2^mu, 255 - 2^mu] so that sync always has room.
std::uint8_t clamp_neighbor(std::uint8_t v, const StegoParams& params) noexcept;

// Replaces the mu low bits of v with `bits`.
std::uint8_t insert_low_bits(std::uint8_t v, unsigned bits, const StegoParams& params) noexcept;

// Restores the center/neighbor ordering of the cover after LSB insertion by
// moving the stego neighbor 2^mu back across the center. Returns an int so
// callers can check the range themselves.
int sync_neighbor(std::uint8_t center, std::uint8_t cover_neighbor, int stego_neighbor,
                  const StegoParams& params) noexcept;

// Embeds params.mu() payload bytes into one clamped block. Neighbor q receives
// bit (7 - q) of each shuffled byte Y_t at low-bit position (mu - 1 - t).
// Throws InvariantError if a neighbor is outside the clamp range or the
// byte count is not mu.
Block embed_block(const Block& clamped, std::span<const std::uint8_t> payload_bytes,
                  const StegoParams& params);

// Inverse of embed_block; returns mu bytes (the rest of the array is zero).
std::array<std::uint8_t, StegoParams::kMaxMu> extract_block(const Block& stego,
                                                            const StegoParams& params) noexcept;

// Clamps the non-reference pixels of the first used_blocks blocks.
GrayImage clamp_cover(const GrayImage& img, const BlockGrid& grid, std::size_t used_blocks,
                      const StegoParams& params);

// Total stream bytes the cover can carry, header included.
std::size_t capacity(const GrayImage& cover, const StegoParams& params) noexcept;

inline constexpr std::size_t kHeaderBytes = 4;
inline constexpr std::size_t kMaxPayloadSide = 65535;

// Largest payload (rows * cols bytes) embed() accepts for this cover.
std::size_t max_payload_bytes(const GrayImage& cover, const StegoParams& params) noexcept;

std::size_t blocks_for_bytes(std::size_t stream_bytes, const StegoParams& params) noexcept;

// 4-byte big-endian header (rows, cols) followed by the pixels, row-major.
std::vector<std::uint8_t> frame_payload(const GrayImage& payload);

// Embeds an already framed byte stream; the last block is zero padded.
// Blocks past the stream are copied from the cover unchanged.
GrayImage embed_stream(const GrayImage& cover, std::span<const std::uint8_t> stream,
                       const StegoParams& params);

// Reads the first byte_count stream bytes back.
std::vector<std::uint8_t> extract_stream(const GrayImage& stego, std::size_t byte_count,
                                         const StegoParams& params);

GrayImage embed(const GrayImage& cover, const GrayImage& payload, const StegoParams& params);

// Blind extraction: needs only the stego image and mu.
GrayImage extract(const GrayImage& stego, const StegoParams& params);

}  // namespace lbpsteg
