#include "lbpsteg/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "lbpsteg/error.hpp"

namespace lbpsteg {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height), pixels_(width * height, fill) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (pixels_.size() != width_ * height_) {
    throw DimensionMismatchError("pixel count " + std::to_string(pixels_.size()) +
                                 " does not match " + std::to_string(width_) + "x" +
                                 std::to_string(height_));
  }
}

namespace {

class HeaderCursor {
 public:
  explicit HeaderCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::size_t read_uint(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw FormatError(std::string("PGM header: expected ") + what);
    }
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw FormatError(std::string("PGM header: ") + what + " out of range");
      }
      ++pos_;
    }
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }
  bool done() const { return pos_ >= bytes_.size(); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw FormatError("not a binary PGM (missing P5 magic)");
  }
  HeaderCursor cur(bytes.subspan(2));
  if (cur.done() || !(std::isspace(cur.peek()) || cur.peek() == '#')) {
    throw FormatError("PGM header: expected whitespace after magic");
  }
  const std::size_t width = cur.read_uint("width");
  const std::size_t height = cur.read_uint("height");
  const std::size_t maxval = cur.read_uint("maxval");
  if (width == 0 || height == 0) throw FormatError("PGM header: zero dimension");
  if (maxval != 255) {
    throw UnsupportedDepthError("unsupported PGM maxval " + std::to_string(maxval) +
                                " (only 255 is supported)");
  }
  // Exactly one whitespace byte separates the header from the raster.
  if (cur.done() || !std::isspace(cur.peek())) {
    throw FormatError("PGM header: expected whitespace after maxval");
  }
  cur.advance();

  const std::size_t offset = 2 + cur.pos();
  const std::size_t count = width * height;
  if (bytes.size() - offset < count) {
    throw TruncationError("PGM raster truncated: expected " + std::to_string(count) +
                          " bytes, found " + std::to_string(bytes.size() - offset));
  }
  auto data = bytes.subspan(offset, count);
  return GrayImage(width, height, std::vector<std::uint8_t>(data.begin(), data.end()));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

GrayImage load_pgm(const std::filesystem::path& path) { return read_pgm(read_file(path)); }

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
  write_file(path, write_pgm(img));
}

}  // namespace lbpsteg
