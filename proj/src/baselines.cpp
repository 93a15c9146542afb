#include "lbpsteg/baselines.hpp"

#include <random>

#include "lbpsteg/error.hpp"

namespace lbpsteg {

BaselineMethod BaselineMethod::lsb_replace(int k) {
  if (k < 1 || k > 4) throw InvalidArgumentError("LSB replacement depth must be in [1, 4]");
  return BaselineMethod{BaselineKind::LsbReplace, k, 0};
}

BaselineMethod BaselineMethod::lsb_match(std::uint64_t seed) {
  return BaselineMethod{BaselineKind::LsbMatch, 1, seed};
}

BaselineMethod BaselineMethod::lsbmr(std::uint64_t seed) {
  return BaselineMethod{BaselineKind::Lsbmr, 1, seed};
}

std::string BaselineMethod::name() const {
  switch (kind) {
    case BaselineKind::LsbReplace:
      return "lsb" + std::to_string(k);
    case BaselineKind::LsbMatch:
      return "lsbm";
    case BaselineKind::Lsbmr:
      return "lsbmr";
  }
  return "unknown";
}

BaselineMethod parse_baseline(const std::string& name, std::uint64_t seed) {
  if (name == "lsbm") return BaselineMethod::lsb_match(seed);
  if (name == "lsbmr") return BaselineMethod::lsbmr(seed);
  if (name.size() == 4 && name.starts_with("lsb") && name[3] >= '1' && name[3] <= '4') {
    return BaselineMethod::lsb_replace(name[3] - '0');
  }
  throw InvalidArgumentError("unknown baseline method '" + name + "'");
}

BitVector bytes_to_bits(std::span<const std::uint8_t> bytes) {
  BitVector bits;
  bits.reserve(bytes.size() * 8);
  for (auto b : bytes) {
    for (int i = 7; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((b >> i) & 1u));
  }
  return bits;
}

std::size_t baseline_capacity(const GrayImage& cover, const BaselineMethod& method) {
  switch (method.kind) {
    case BaselineKind::LsbReplace:
      return cover.size() * static_cast<std::size_t>(method.k);
    case BaselineKind::LsbMatch:
      return cover.size();
    case BaselineKind::Lsbmr:
      return cover.size() - cover.size() % 2;
  }
  return 0;
}

namespace {

void require_fits(std::size_t bit_count, const GrayImage& img, const BaselineMethod& method) {
  const std::size_t cap = baseline_capacity(img, method);
  if (bit_count > cap) {
    throw CapacityError(method.name() + ": " + std::to_string(bit_count) +
                        " bits exceed capacity of " + std::to_string(cap));
  }
}

// A +-1 step for LSB matching; saturated pixels step inward.
class PlusMinusOne {
 public:
  explicit PlusMinusOne(std::uint64_t seed) : engine_(seed) {}

  std::uint8_t step(std::uint8_t v) {
    if (v == 0) return 1;
    if (v == 255) return 254;
    // Raw engine bits keep the sequence identical across standard libraries.
    return static_cast<std::uint8_t>((engine_() & 1u) ? v + 1 : v - 1);
  }

 private:
  std::mt19937_64 engine_;
};

void embed_replace(std::span<std::uint8_t> px, std::span<const std::uint8_t> bits, int k) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const std::size_t pixel = i / static_cast<std::size_t>(k);
    const int position = k - 1 - static_cast<int>(i % static_cast<std::size_t>(k));
    const auto mask = static_cast<std::uint8_t>(1u << position);
    px[pixel] = static_cast<std::uint8_t>((px[pixel] & ~mask) | ((bits[i] & 1u) << position));
  }
}

void embed_match(std::span<std::uint8_t> px, std::span<const std::uint8_t> bits, PlusMinusOne& pm) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if ((px[i] & 1u) != (bits[i] & 1u)) px[i] = pm.step(px[i]);
  }
}

void embed_lsbmr(std::span<std::uint8_t> px, std::span<const std::uint8_t> bits, PlusMinusOne& pm) {
  for (std::size_t i = 0; i < bits.size(); i += 2) {
    std::uint8_t& first = px[i];
    std::uint8_t& second = px[i + 1];
    const unsigned m1 = bits[i] & 1u;
    if (i + 1 == bits.size()) {
      // Odd tail: only the first pixel of the pair carries a bit.
      if ((first & 1u) != m1) first = pm.step(first);
      break;
    }
    const unsigned m2 = bits[i + 1] & 1u;
    const int x1 = first;
    const int x2 = second;
    if ((x1 & 1) == static_cast<int>(m1)) {
      if (lsbmr_pair_bit(x1, x2) != m2) second = pm.step(second);
    } else if (x1 > 0 && lsbmr_pair_bit(x1 - 1, x2) == m2) {
      first = static_cast<std::uint8_t>(x1 - 1);
    } else if (x1 < 255 && lsbmr_pair_bit(x1 + 1, x2) == m2) {
      first = static_cast<std::uint8_t>(x1 + 1);
    } else {
      // x1 is saturated and only the outward step would fix m2: step inward
      // and repair the pair bit with the second pixel.
      first = static_cast<std::uint8_t>(x1 == 0 ? 1 : 254);
      second = pm.step(second);
    }
  }
}

}  // namespace

GrayImage baseline_embed(const GrayImage& cover, std::span<const std::uint8_t> bits,
                         const BaselineMethod& method) {
  require_fits(bits.size(), cover, method);
  GrayImage stego = cover;
  PlusMinusOne pm(method.seed);
  switch (method.kind) {
    case BaselineKind::LsbReplace:
      embed_replace(stego.pixels(), bits, method.k);
      break;
    case BaselineKind::LsbMatch:
      embed_match(stego.pixels(), bits, pm);
      break;
    case BaselineKind::Lsbmr:
      embed_lsbmr(stego.pixels(), bits, pm);
      break;
  }
  return stego;
}

BitVector baseline_extract(const GrayImage& stego, std::size_t bit_count,
                           const BaselineMethod& method) {
  require_fits(bit_count, stego, method);
  const auto px = stego.pixels();
  BitVector bits(bit_count);
  switch (method.kind) {
    case BaselineKind::LsbReplace: {
      const auto k = static_cast<std::size_t>(method.k);
      for (std::size_t i = 0; i < bit_count; ++i) {
        const int position = method.k - 1 - static_cast<int>(i % k);
        bits[i] = static_cast<std::uint8_t>((px[i / k] >> position) & 1u);
      }
      break;
    }
    case BaselineKind::LsbMatch:
      for (std::size_t i = 0; i < bit_count; ++i) bits[i] = px[i] & 1u;
      break;
    case BaselineKind::Lsbmr:
      for (std::size_t i = 0; i < bit_count; i += 2) {
        bits[i] = px[i] & 1u;
        if (i + 1 < bit_count) bits[i + 1] = static_cast<std::uint8_t>(lsbmr_pair_bit(px[i], px[i + 1]));
      }
      break;
  }
  return bits;
}

}  // namespace lbpsteg
