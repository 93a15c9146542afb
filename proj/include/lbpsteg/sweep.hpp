#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lbpsteg/analysis.hpp"
#include "lbpsteg/baselines.hpp"
#include "lbpsteg/codec.hpp"
#include "lbpsteg/image.hpp"

namespace lbpsteg {

// Tiles the payload pixels row-major until exactly body_bytes bytes are
// available and reshapes them so both sides fit the 16-bit stream header.
GrayImage fit_payload(const GrayImage& payload, std::size_t body_bytes);

struct RateEmbedding {
  GrayImage stego;
  std::size_t embedded_bits = 0;
};

// Embeds floor(rate% of the stream capacity) bytes, header included, with the
// payload cropped or tiled to fill the remainder. rate 0 returns the cover.
RateEmbedding embed_at_rate(const GrayImage& cover, const GrayImage& payload, double rate_percent,
                            const StegoParams& params);

// Embeds floor(rate% of the method's capacity) bits taken MSB-first from the
// (tiled) payload pixels.
RateEmbedding baseline_at_rate(const GrayImage& cover, const GrayImage& payload,
                               double rate_percent, const BaselineMethod& method);

struct SweepConfig {
  std::vector<double> rates{10, 20, 30, 40, 50};
  std::vector<std::string> methods{"proposed", "lsb1", "lsbm", "lsbmr"};
  std::uint64_t seed = 0;
  int mu = 1;
};

struct NamedImage {
  std::string name;
  GrayImage image;
};

// Rows for one cover: a "cover" reference at rate 0, then every
// (method, rate) pair with quality, histogram, PDH and RS metrics.
std::vector<MetricRow> sweep_image(const NamedImage& cover, const GrayImage& payload,
                                   const SweepConfig& config);

// Processes covers concurrently; rows come back sorted by image, method and
// rate regardless of scheduling.
std::vector<MetricRow> run_sweep(const std::vector<NamedImage>& covers, const GrayImage& payload,
                                 const SweepConfig& config);

}  // namespace lbpsteg
