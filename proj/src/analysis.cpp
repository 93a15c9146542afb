#include "lbpsteg/analysis.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "lbpsteg/error.hpp"

namespace lbpsteg {

namespace {

void require_same_dims(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw DimensionMismatchError("image dimensions differ: " + std::to_string(a.width()) + "x" +
                                 std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                                 "x" + std::to_string(b.height()));
  }
}

// Summed-area table with one zero row/column of padding.
class IntegralImage {
 public:
  IntegralImage(std::size_t width, std::size_t height)
      : stride_(width + 1), sums_((width + 1) * (height + 1), 0) {}

  std::int64_t& at(std::size_t r, std::size_t c) { return sums_[r * stride_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return sums_[r * stride_ + c]; }

  std::int64_t window(std::size_t r, std::size_t c, std::size_t n) const {
    return at(r + n, c + n) - at(r, c + n) - at(r + n, c) + at(r, c);
  }

 private:
  std::size_t stride_;
  std::vector<std::int64_t> sums_;
};

}  // namespace

std::uint64_t squared_error(const GrayImage& a, const GrayImage& b) {
  require_same_dims(a, b);
  std::uint64_t sum = 0;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int d = int{pa[i]} - int{pb[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return sum;
}

double mse(const GrayImage& a, const GrayImage& b) {
  const auto sse = squared_error(a, b);
  return a.empty() ? 0.0 : static_cast<double>(sse) / static_cast<double>(a.size());
}

double psnr_from_mse(double m) {
  if (m <= 0.0) return kInfinitePsnr;
  return 10.0 * std::log10(255.0 * 255.0 / m);
}

double psnr(const GrayImage& a, const GrayImage& b) { return psnr_from_mse(mse(a, b)); }

double quality_index(const GrayImage& a, const GrayImage& b) {
  require_same_dims(a, b);
  constexpr std::size_t n = kQualityWindow;
  if (a.width() < n || a.height() < n) {
    throw InvalidArgumentError("quality index needs images of at least 8x8");
  }
  const std::size_t w = a.width();
  const std::size_t h = a.height();
  IntegralImage sa(w, h), sb(w, h), saa(w, h), sbb(w, h), sab(w, h);
  for (std::size_t r = 0; r < h; ++r) {
    for (std::size_t c = 0; c < w; ++c) {
      const std::int64_t x = a.at(r, c);
      const std::int64_t y = b.at(r, c);
      auto fill = [&](IntegralImage& s, std::int64_t v) {
        s.at(r + 1, c + 1) = v + s.at(r, c + 1) + s.at(r + 1, c) - s.at(r, c);
      };
      fill(sa, x);
      fill(sb, y);
      fill(saa, x * x);
      fill(sbb, y * y);
      fill(sab, x * y);
    }
  }

  // With N pixels per window, N*sum(xy) - sum(x)sum(y) is N^2 times the
  // covariance; the N factors cancel in Q, so everything stays integral until
  // the final ratio.
  constexpr auto count = static_cast<std::int64_t>(n * n);
  double total = 0.0;
  std::size_t used = 0;
  for (std::size_t r = 0; r + n <= h; ++r) {
    for (std::size_t c = 0; c + n <= w; ++c) {
      const std::int64_t x = sa.window(r, c, n);
      const std::int64_t y = sb.window(r, c, n);
      const std::int64_t var_x = count * saa.window(r, c, n) - x * x;
      const std::int64_t var_y = count * sbb.window(r, c, n) - y * y;
      const std::int64_t cov = count * sab.window(r, c, n) - x * y;
      const std::int64_t var_sum = var_x + var_y;
      const std::int64_t mean_sq = x * x + y * y;
      if (var_sum == 0 || mean_sq == 0) {
        // sum((x - y)^2) == sum(x^2) + sum(y^2) - 2 sum(xy)
        const bool same = saa.window(r, c, n) + sbb.window(r, c, n) == 2 * sab.window(r, c, n);
        if (same) {
          total += 1.0;
          ++used;
        }
        continue;
      }
      total += 4.0 * static_cast<double>(cov) * static_cast<double>(x) * static_cast<double>(y) /
               (static_cast<double>(var_sum) * static_cast<double>(mean_sq));
      ++used;
    }
  }
  if (used == 0) return std::numeric_limits<double>::quiet_NaN();
  return total / static_cast<double>(used);
}

double bit_rate(std::size_t embedded_bits, const GrayImage& cover) {
  if (cover.empty()) throw InvalidArgumentError("bit rate of an empty cover");
  return static_cast<double>(embedded_bits) / static_cast<double>(cover.size());
}

QualityReport quality_report(const GrayImage& cover, const GrayImage& stego,
                             std::size_t embedded_bits) {
  return QualityReport{psnr(cover, stego), quality_index(cover, stego),
                       bit_rate(embedded_bits, cover), embedded_bits};
}

Histogram histogram(const GrayImage& img) {
  Histogram h{};
  for (auto v : img.pixels()) ++h[v];
  return h;
}

double histogram_distance(const GrayImage& a, const GrayImage& b) {
  require_same_dims(a, b);
  if (a.empty()) return 0.0;
  const auto ha = histogram(a);
  const auto hb = histogram(b);
  std::uint64_t l1 = 0;
  for (std::size_t i = 0; i < ha.size(); ++i) l1 += ha[i] > hb[i] ? ha[i] - hb[i] : hb[i] - ha[i];
  return static_cast<double>(l1) / (2.0 * static_cast<double>(a.size()));
}

std::uint64_t PdHistogram::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

PdHistogram pd_histogram(const GrayImage& img) {
  if (img.width() < 2) throw InvalidArgumentError("pixel difference histogram needs width >= 2");
  PdHistogram h;
  for (std::size_t r = 0; r < img.height(); ++r) {
    const auto row = img.row(r);
    for (std::size_t c = 0; c + 1 < row.size(); ++c) h.add(int{row[c + 1]} - int{row[c]});
  }
  return h;
}

double pearson_correlation(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
  if (x.size() != y.size() || x.empty()) {
    throw DimensionMismatchError("correlation needs two non-empty vectors of equal length");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += static_cast<double>(x[i]);
    my += static_cast<double>(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = static_cast<double>(x[i]) - mx;
    const double dy = static_cast<double>(y[i]) - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

RsMask parse_rs_mask(const std::string& text) {
  RsMask mask;
  auto push = [&](int v) {
    if (v < -1 || v > 1) throw InvalidArgumentError("RS mask values must be -1, 0 or 1");
    mask.push_back(v);
  };
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string token = text.substr(start, end - start);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InvalidArgumentError("bad RS mask entry '" + token + "'");
      }
      push(v);
      start = end + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '-' && i + 1 < text.size() && text[i + 1] == '1') {
        push(-1);
        ++i;
      } else if (text[i] == '0' || text[i] == '1') {
        push(text[i] - '0');
      } else {
        throw InvalidArgumentError("bad RS mask '" + text + "'");
      }
    }
  }
  if (mask.size() < 2) throw InvalidArgumentError("RS mask needs at least 2 entries");
  return mask;
}

namespace {

int smoothness(std::span<const int> g) {
  int f = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) f += std::abs(g[i + 1] - g[i]);
  return f;
}

int apply_flip(int mask_value, int x) {
  if (mask_value > 0) return flip_positive(x);
  if (mask_value < 0) return flip_negative(x);
  return x;
}

}  // namespace

RsStatistics rs_analysis(const GrayImage& img, const RsMask& mask) {
  if (mask.size() < 2) throw InvalidArgumentError("RS mask needs at least 2 entries");
  for (int v : mask) {
    if (v < -1 || v > 1) throw InvalidArgumentError("RS mask values must be -1, 0 or 1");
  }
  const std::size_t n = mask.size();
  if (img.width() < n) throw InvalidArgumentError("image narrower than the RS mask");

  std::vector<int> group(n), pos(n), neg(n);
  std::uint64_t groups = 0, r_m = 0, s_m = 0, r_n = 0, s_n = 0;
  for (std::size_t r = 0; r < img.height(); ++r) {
    const auto row = img.row(r);
    for (std::size_t c = 0; c + n <= row.size(); c += n) {
      for (std::size_t i = 0; i < n; ++i) {
        group[i] = row[c + i];
        pos[i] = apply_flip(mask[i], group[i]);
        neg[i] = apply_flip(-mask[i], group[i]);
      }
      const int f0 = smoothness(group);
      const int fp = smoothness(pos);
      const int fn = smoothness(neg);
      r_m += fp > f0;
      s_m += fp < f0;
      r_n += fn > f0;
      s_n += fn < f0;
      ++groups;
    }
  }
  const double total = static_cast<double>(groups);
  return RsStatistics{static_cast<double>(r_m) / total, static_cast<double>(s_m) / total,
                      static_cast<double>(r_n) / total, static_cast<double>(s_n) / total};
}

namespace {

std::string quote_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void append_line(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += quote_field(fields[i]);
  }
  out += '\n';
}

}  // namespace

std::string emit_csv(const CsvTable& table) {
  std::string out;
  append_line(out, table.header);
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw InvalidArgumentError("CSV row width does not match header");
    }
    append_line(out, row);
  }
  return out;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw InvariantError("number formatting failed");
  return std::string(buf, ptr);
}

CsvTable metric_table(std::span<const MetricRow> rows) {
  CsvTable table{{"image", "method", "rate", "metric", "value"}, {}};
  table.rows.reserve(rows.size());
  for (const auto& r : rows) {
    table.rows.push_back({r.image, r.method, format_number(r.rate), r.metric, format_number(r.value)});
  }
  return table;
}

std::vector<MetricRow> report_rows(const std::string& image, const std::string& method, double rate,
                                   const QualityReport& report) {
  return {
      {image, method, rate, "psnr", report.psnr},
      {image, method, rate, "q_index", report.q_index},
      {image, method, rate, "bit_rate", report.bit_rate},
      {image, method, rate, "embedded_bits", static_cast<double>(report.embedded_bits)},
  };
}

CsvTable quality_table(std::span<const QualityRow> rows) {
  CsvTable table{{"image", "method", "rate", "psnr", "q_index", "bit_rate", "embedded_bits"}, {}};
  for (const auto& r : rows) {
    table.rows.push_back({r.image, r.method, format_number(r.rate), format_number(r.report.psnr),
                          format_number(r.report.q_index), format_number(r.report.bit_rate),
                          std::to_string(r.report.embedded_bits)});
  }
  return table;
}

}  // namespace lbpsteg
