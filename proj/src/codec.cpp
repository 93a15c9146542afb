#include "lbpsteg/codec.hpp"

#include <algorithm>
#include <string>

#include "lbpsteg/error.hpp"

namespace lbpsteg {

StegoParams::StegoParams(int mu) : mu_(mu) {
  if (mu < kMinMu || mu > kMaxMu) {
    throw InvalidArgumentError("mu must be in [1, 4], got " + std::to_string(mu));
  }
}

Block read_block(const GrayImage& img, const BlockGrid& grid, std::size_t index) {
  const std::size_t r = grid.reference_row(index);
  const std::size_t c = grid.reference_col(index);
  return Block{img.at(r, c), gather_neighbors(img, r, c)};
}

void write_block(GrayImage& img, const BlockGrid& grid, std::size_t index, const Block& block) {
  const std::size_t r = grid.reference_row(index);
  const std::size_t c = grid.reference_col(index);
  img.at(r, c) = block.center;
  for (std::size_t q = 0; q < 8; ++q) {
    img.at(r + kNeighborOrder[q].drow, c + kNeighborOrder[q].dcol) = block.neighbors[q];
  }
}

std::uint8_t clamp_neighbor(std::uint8_t v, const StegoParams& params) noexcept {
  const int lo = params.step();
  const int hi = 255 - params.step();
  return static_cast<std::uint8_t>(std::clamp<int>(v, lo, hi));
}

std::uint8_t insert_low_bits(std::uint8_t v, unsigned bits, const StegoParams& params) noexcept {
  const std::uint8_t mask = params.low_mask();
  return static_cast<std::uint8_t>((v & ~mask) | (bits & mask));
}

int sync_neighbor(std::uint8_t center, std::uint8_t cover_neighbor, int stego_neighbor,
                  const StegoParams& params) noexcept {
  const bool was_ge = center >= cover_neighbor;
  const bool is_ge = center >= stego_neighbor;
  if (was_ge && !is_ge) return stego_neighbor - params.step();
  if (!was_ge && is_ge) return stego_neighbor + params.step();
  return stego_neighbor;
}

Block embed_block(const Block& clamped, std::span<const std::uint8_t> payload_bytes,
                  const StegoParams& params) {
  const int mu = params.mu();
  if (payload_bytes.size() != static_cast<std::size_t>(mu)) {
    throw InvariantError("embed_block needs exactly mu payload bytes");
  }
  const LbpCode lbp = clamped.lbp();

  std::array<std::uint8_t, StegoParams::kMaxMu> shuffled{};
  for (int t = 0; t < mu; ++t) shuffled[t] = shuffle_byte(mask_byte(lbp, payload_bytes[t]));

  Block out{clamped.center, {}};
  for (std::size_t q = 0; q < 8; ++q) {
    const std::uint8_t v = clamped.neighbors[q];
    if (clamp_neighbor(v, params) != v) {
      throw InvariantError("neighbor " + std::to_string(v) + " outside clamp range for mu=" +
                           std::to_string(mu));
    }
    unsigned bits = 0;
    for (int t = 0; t < mu; ++t) {
      const unsigned bit = (shuffled[t] >> bit_for_neighbor(q)) & 1u;
      bits |= bit << (mu - 1 - t);
    }
    const int synced = sync_neighbor(clamped.center, v, insert_low_bits(v, bits, params), params);
    if (synced < 0 || synced > 255) {
      throw InvariantError("sync left neighbor out of range: " + std::to_string(synced));
    }
    out.neighbors[q] = static_cast<std::uint8_t>(synced);
  }
  return out;
}

std::array<std::uint8_t, StegoParams::kMaxMu> extract_block(const Block& stego,
                                                            const StegoParams& params) noexcept {
  const int mu = params.mu();
  const LbpCode lbp = stego.lbp();
  std::array<std::uint8_t, StegoParams::kMaxMu> shuffled{};
  for (std::size_t q = 0; q < 8; ++q) {
    const unsigned low = stego.neighbors[q] & params.low_mask();
    for (int t = 0; t < mu; ++t) {
      const unsigned bit = (low >> (mu - 1 - t)) & 1u;
      shuffled[t] = static_cast<std::uint8_t>(shuffled[t] | (bit << bit_for_neighbor(q)));
    }
  }
  std::array<std::uint8_t, StegoParams::kMaxMu> out{};
  for (int t = 0; t < mu; ++t) out[t] = mask_byte(lbp, unshuffle_byte(shuffled[t]));
  return out;
}

GrayImage clamp_cover(const GrayImage& img, const BlockGrid& grid, std::size_t used_blocks,
                      const StegoParams& params) {
  GrayImage out = img;
  const std::size_t n = std::min(used_blocks, grid.count());
  for (std::size_t b = 0; b < n; ++b) {
    Block block = read_block(img, grid, b);
    for (auto& v : block.neighbors) v = clamp_neighbor(v, params);
    write_block(out, grid, b, block);
  }
  return out;
}

std::size_t capacity(const GrayImage& cover, const StegoParams& params) noexcept {
  return BlockGrid::of(cover).count() * static_cast<std::size_t>(params.mu());
}

std::size_t max_payload_bytes(const GrayImage& cover, const StegoParams& params) noexcept {
  const std::size_t cap = capacity(cover, params);
  return cap > kHeaderBytes ? cap - kHeaderBytes : 0;
}

std::size_t blocks_for_bytes(std::size_t stream_bytes, const StegoParams& params) noexcept {
  const auto mu = static_cast<std::size_t>(params.mu());
  return (stream_bytes + mu - 1) / mu;
}

std::vector<std::uint8_t> frame_payload(const GrayImage& payload) {
  if (payload.empty()) throw InvalidArgumentError("payload image is empty");
  if (payload.height() > kMaxPayloadSide || payload.width() > kMaxPayloadSide) {
    throw CapacityError("payload dimensions exceed 65535");
  }
  const auto rows = static_cast<std::uint16_t>(payload.height());
  const auto cols = static_cast<std::uint16_t>(payload.width());
  std::vector<std::uint8_t> stream;
  stream.reserve(kHeaderBytes + payload.size());
  stream.push_back(static_cast<std::uint8_t>(rows >> 8));
  stream.push_back(static_cast<std::uint8_t>(rows & 0xFF));
  stream.push_back(static_cast<std::uint8_t>(cols >> 8));
  stream.push_back(static_cast<std::uint8_t>(cols & 0xFF));
  stream.insert(stream.end(), payload.pixels().begin(), payload.pixels().end());
  return stream;
}

GrayImage embed_stream(const GrayImage& cover, std::span<const std::uint8_t> stream,
                       const StegoParams& params) {
  if (cover.width() < 3 || cover.height() < 3) {
    throw CoverTooSmallError("cover must be at least 3x3, got " + std::to_string(cover.width()) +
                             "x" + std::to_string(cover.height()));
  }
  const std::size_t cap = capacity(cover, params);
  if (stream.size() > cap) {
    throw CapacityError("stream of " + std::to_string(stream.size()) +
                        " bytes exceeds cover capacity of " + std::to_string(cap) + " bytes");
  }
  const auto grid = BlockGrid::of(cover);
  const auto mu = static_cast<std::size_t>(params.mu());
  const std::size_t used = blocks_for_bytes(stream.size(), params);

  GrayImage stego = clamp_cover(cover, grid, used, params);
  std::array<std::uint8_t, StegoParams::kMaxMu> chunk{};
  for (std::size_t b = 0; b < used; ++b) {
    chunk.fill(0);
    const std::size_t begin = b * mu;
    const std::size_t n = std::min(mu, stream.size() - begin);
    std::copy_n(stream.begin() + static_cast<std::ptrdiff_t>(begin), n, chunk.begin());
    const Block block = read_block(stego, grid, b);
    write_block(stego, grid, b, embed_block(block, std::span(chunk).first(mu), params));
  }
  return stego;
}

std::vector<std::uint8_t> extract_stream(const GrayImage& stego, std::size_t byte_count,
                                         const StegoParams& params) {
  const std::size_t cap = capacity(stego, params);
  if (byte_count > cap) {
    throw CapacityError("requested " + std::to_string(byte_count) +
                        " stream bytes from an image holding " + std::to_string(cap));
  }
  const auto grid = BlockGrid::of(stego);
  const auto mu = static_cast<std::size_t>(params.mu());
  std::vector<std::uint8_t> out;
  out.reserve(byte_count);
  for (std::size_t b = 0; out.size() < byte_count; ++b) {
    const auto bytes = extract_block(read_block(stego, grid, b), params);
    const std::size_t n = std::min(mu, byte_count - out.size());
    out.insert(out.end(), bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(n));
  }
  return out;
}

GrayImage embed(const GrayImage& cover, const GrayImage& payload, const StegoParams& params) {
  if (cover.width() < 3 || cover.height() < 3) {
    throw CoverTooSmallError("cover must be at least 3x3, got " + std::to_string(cover.width()) +
                             "x" + std::to_string(cover.height()));
  }
  const auto stream = frame_payload(payload);
  const std::size_t cap = capacity(cover, params);
  if (stream.size() > cap) {
    throw CapacityError("payload of " + std::to_string(payload.size()) + " bytes needs " +
                        std::to_string(stream.size()) + " stream bytes; cover holds " +
                        std::to_string(cap) + " at mu=" + std::to_string(params.mu()));
  }
  return embed_stream(cover, stream, params);
}

GrayImage extract(const GrayImage& stego, const StegoParams& params) {
  const std::size_t cap = capacity(stego, params);
  if (cap < kHeaderBytes) {
    throw CorruptStreamError("image too small to hold a stream header");
  }
  const auto header = extract_stream(stego, kHeaderBytes, params);
  const std::size_t rows = (std::size_t{header[0]} << 8) | header[1];
  const std::size_t cols = (std::size_t{header[2]} << 8) | header[3];
  if (rows == 0 || cols == 0) {
    throw CorruptStreamError("stream header declares an empty payload (" + std::to_string(rows) +
                             "x" + std::to_string(cols) + "); wrong mu?");
  }
  if (kHeaderBytes + rows * cols > cap) {
    throw CorruptStreamError("stream header declares " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " payload, more than the " +
                             std::to_string(cap) + "-byte capacity; wrong mu?");
  }
  auto stream = extract_stream(stego, kHeaderBytes + rows * cols, params);
  stream.erase(stream.begin(), stream.begin() + kHeaderBytes);
  return GrayImage(cols, rows, std::move(stream));
}

}  // namespace lbpsteg
