#include "lbpsteg/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <tuple>

#include "lbpsteg/error.hpp"

namespace lbpsteg {

namespace {

void require_rate(double rate_percent) {
  if (!(rate_percent >= 0.0 && rate_percent <= 100.0)) {
    throw InvalidArgumentError("embedding rate must be in [0, 100], got " +
                               format_number(rate_percent));
  }
}

std::size_t fraction_of(std::size_t total, double rate_percent) {
  return static_cast<std::size_t>(std::floor(static_cast<double>(total) * rate_percent / 100.0));
}

}  // namespace

GrayImage fit_payload(const GrayImage& payload, std::size_t body_bytes) {
  if (payload.empty()) throw InvalidArgumentError("payload image is empty");
  if (body_bytes == 0) throw InvalidArgumentError("payload budget is zero bytes");
  std::size_t cols = std::min(payload.width(), body_bytes);
  // Keep rows within the 16-bit header field.
  cols = std::max(cols, (body_bytes + kMaxPayloadSide - 1) / kMaxPayloadSide);
  if (cols > kMaxPayloadSide) throw CapacityError("payload budget exceeds the stream header range");
  const std::size_t rows = body_bytes / cols;

  std::vector<std::uint8_t> px(rows * cols);
  const auto src = payload.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = src[i % src.size()];
  return GrayImage(cols, rows, std::move(px));
}

RateEmbedding embed_at_rate(const GrayImage& cover, const GrayImage& payload, double rate_percent,
                            const StegoParams& params) {
  require_rate(rate_percent);
  if (rate_percent == 0.0) return {cover, 0};
  const std::size_t stream_bytes = fraction_of(capacity(cover, params), rate_percent);
  if (stream_bytes <= kHeaderBytes) {
    throw CapacityError("rate " + format_number(rate_percent) + "% leaves no room past the header");
  }
  const GrayImage body = fit_payload(payload, stream_bytes - kHeaderBytes);
  const auto stream = frame_payload(body);
  return {embed_stream(cover, stream, params), stream.size() * 8};
}

RateEmbedding baseline_at_rate(const GrayImage& cover, const GrayImage& payload,
                               double rate_percent, const BaselineMethod& method) {
  require_rate(rate_percent);
  const std::size_t bit_count = fraction_of(baseline_capacity(cover, method), rate_percent);
  if (bit_count == 0) return {cover, 0};
  const GrayImage body = fit_payload(payload, (bit_count + 7) / 8);
  BitVector bits = bytes_to_bits(body.pixels());
  bits.resize(bit_count);
  return {baseline_embed(cover, bits, method), bit_count};
}

namespace {

void append_metrics(std::vector<MetricRow>& rows, const NamedImage& cover,
                    const std::string& method, double rate, const RateEmbedding& result,
                    const PdHistogram& cover_pdh) {
  const auto report = quality_report(cover.image, result.stego, result.embedded_bits);
  auto quality = report_rows(cover.name, method, rate, report);
  rows.insert(rows.end(), quality.begin(), quality.end());

  const auto pdh = pd_histogram(result.stego);
  const auto rs = rs_analysis(result.stego);
  rows.push_back({cover.name, method, rate, "hist_distance",
                  histogram_distance(cover.image, result.stego)});
  rows.push_back({cover.name, method, rate, "pdh_correlation",
                  pearson_correlation(cover_pdh.counts(), pdh.counts())});
  rows.push_back({cover.name, method, rate, "rs_r_m", rs.r_m});
  rows.push_back({cover.name, method, rate, "rs_s_m", rs.s_m});
  rows.push_back({cover.name, method, rate, "rs_r_neg_m", rs.r_neg_m});
  rows.push_back({cover.name, method, rate, "rs_s_neg_m", rs.s_neg_m});
}

}  // namespace

std::vector<MetricRow> sweep_image(const NamedImage& cover, const GrayImage& payload,
                                   const SweepConfig& config) {
  const StegoParams params(config.mu);
  // Reject unknown method names before doing any work.
  for (const auto& m : config.methods) {
    if (m != "proposed") parse_baseline(m, config.seed);
  }

  const auto cover_pdh = pd_histogram(cover.image);
  std::vector<MetricRow> rows;
  append_metrics(rows, cover, "cover", 0.0, {cover.image, 0}, cover_pdh);
  for (const auto& m : config.methods) {
    for (double rate : config.rates) {
      if (m == "proposed") {
        append_metrics(rows, cover, m, rate, embed_at_rate(cover.image, payload, rate, params),
                       cover_pdh);
      } else {
        append_metrics(rows, cover, m, rate,
                       baseline_at_rate(cover.image, payload, rate, parse_baseline(m, config.seed)),
                       cover_pdh);
      }
    }
  }
  return rows;
}

std::vector<MetricRow> run_sweep(const std::vector<NamedImage>& covers, const GrayImage& payload,
                                 const SweepConfig& config) {
  std::vector<std::future<std::vector<MetricRow>>> jobs;
  jobs.reserve(covers.size());
  for (const auto& cover : covers) {
    jobs.push_back(std::async(std::launch::async,
                              [&cover, &payload, &config] { return sweep_image(cover, payload, config); }));
  }
  std::vector<MetricRow> rows;
  for (auto& job : jobs) {
    auto part = job.get();
    rows.insert(rows.end(), part.begin(), part.end());
  }
  std::stable_sort(rows.begin(), rows.end(), [](const MetricRow& a, const MetricRow& b) {
    return std::tie(a.image, a.method, a.rate) < std::tie(b.image, b.method, b.rate);
  });
  return rows;
}

}  // namespace lbpsteg
