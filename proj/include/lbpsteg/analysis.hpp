#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lbpsteg/image.hpp"

namespace lbpsteg {

// Reported by psnr() for identical images; written to CSV as "inf".
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

struct QualityReport {
  double psnr = 0.0;
  double q_index = 0.0;
  double bit_rate = 0.0;
  std::size_t embedded_bits = 0;
};

// Exact integer sum of squared differences.
std::uint64_t squared_error(const GrayImage& a, const GrayImage& b);
double mse(const GrayImage& a, const GrayImage& b);
double psnr_from_mse(double mse);
double psnr(const GrayImage& a, const GrayImage& b);

inline constexpr std::size_t kQualityWindow = 8;

// Wang-Bovik universal quality index averaged over all 8x8 windows (step 1).
// A window whose denominator vanishes counts as 1 when both images agree on
// it and is skipped otherwise. Returns NaN if every window is skipped.
double quality_index(const GrayImage& a, const GrayImage& b);

double bit_rate(std::size_t embedded_bits, const GrayImage& cover);

QualityReport quality_report(const GrayImage& cover, const GrayImage& stego,
                             std::size_t embedded_bits);

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(const GrayImage& img);

// Sum of |h_a - h_b| over all bins divided by twice the pixel count; lies in [0, 1].
double histogram_distance(const GrayImage& a, const GrayImage& b);

// Counts of horizontal differences pixel(r, c+1) - pixel(r, c).
class PdHistogram {
 public:
  static constexpr int kMinDiff = -255;
  static constexpr int kMaxDiff = 255;
  static constexpr std::size_t kBins = kMaxDiff - kMinDiff + 1;

  std::uint64_t count(int d) const { return counts_.at(static_cast<std::size_t>(d - kMinDiff)); }
  void add(int d) { ++counts_.at(static_cast<std::size_t>(d - kMinDiff)); }
  std::uint64_t total() const noexcept;
  const std::array<std::uint64_t, kBins>& counts() const noexcept { return counts_; }

 private:
  std::array<std::uint64_t, kBins> counts_{};
};

PdHistogram pd_histogram(const GrayImage& img);

// Pearson correlation of two count vectors of equal length.
double pearson_correlation(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y);

// --- RS analysis -----------------------------------------------------------

struct RsStatistics {
  double r_m = 0.0;
  double s_m = 0.0;
  double r_neg_m = 0.0;
  double s_neg_m = 0.0;
};

using RsMask = std::vector<int>;

inline const RsMask kDefaultRsMask{0, 1, 1, 0};

// F1: 2k <-> 2k+1.
constexpr int flip_positive(int x) noexcept { return x ^ 1; }

// F-1(x) = F1(x + 1) - 1, saturated to [0, 255]: 2k-1 <-> 2k.
constexpr int flip_negative(int x) noexcept {
  const int y = ((x + 1) ^ 1) - 1;
  return y < 0 ? 0 : (y > 255 ? 255 : y);
}

// Parses "0110", "0,1,1,0" or "0,-1,1,0". A compact string may write -1 as "-1".
RsMask parse_rs_mask(const std::string& text);

// Fridrich RS statistics. Each row is cut into consecutive groups of
// mask.size() pixels; a group is regular when flipping increases its
// smoothness sum |x[i+1] - x[i]| and singular when it decreases.
RsStatistics rs_analysis(const GrayImage& img, const RsMask& mask = kDefaultRsMask);

// --- CSV -------------------------------------------------------------------

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Comma separated, LF line endings, fields quoted only when they need it.
std::string emit_csv(const CsvTable& table);

// Shortest round-trip decimal; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double value);

// One measurement in long format.
struct MetricRow {
  std::string image;
  std::string method;
  double rate = 0.0;
  std::string metric;
  double value = 0.0;
};

CsvTable metric_table(std::span<const MetricRow> rows);

std::vector<MetricRow> report_rows(const std::string& image, const std::string& method, double rate,
                                   const QualityReport& report);

// Wide form: one line per report.
struct QualityRow {
  std::string image;
  std::string method;
  double rate = 0.0;
  QualityReport report;
};

CsvTable quality_table(std::span<const QualityRow> rows);

}  // namespace lbpsteg
