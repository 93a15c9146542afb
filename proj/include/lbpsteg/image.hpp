#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace lbpsteg {

// 8-bit single-channel raster, row-major.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  // Throws DimensionMismatchError when pixels.size() != width * height.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return pixels_[row * width_ + col];
  }
  std::uint8_t& at(std::size_t row, std::size_t col) noexcept {
    return pixels_[row * width_ + col];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }
  std::span<const std::uint8_t> row(std::size_t r) const noexcept {
    return std::span<const std::uint8_t>(pixels_).subspan(r * width_, width_);
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Decodes a binary "P5" PGM with maxval 255. Whitespace and '#' comments are
// accepted anywhere in the header.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

// Canonical "P5\n<w> <h>\n255\n" followed by the raw pixels.
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace lbpsteg
