// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lbpsteg/analysis.hpp"
#include "lbpsteg/baselines.hpp"
#include "lbpsteg/codec.hpp"
#include "lbpsteg/sweep.hpp"
#include "test_support.hpp"

namespace {

using namespace lbpsteg;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::vector<NamedImage> load_corpus() {
  std::vector<NamedImage> out;
  for (const auto& p : testing::corpus_paths()) out.push_back({p.stem().string(), load_pgm(p)});
  return out;
}

GrayImage crop(const GrayImage& img, std::size_t top, std::size_t left, std::size_t w, std::size_t h) {
  GrayImage out(w, h);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c < w; ++c) out.at(r, c) = img.at(top + r, left + c);
  return out;
}

GrayImage random_bytes_image(std::mt19937_64& rng, std::size_t w, std::size_t h) {
  return testing::random_image(rng, w, h);
}

int clamp_mu(int v, int mu) { return std::min(std::max(v, 1 << mu), 255 - (1 << mu)); }

// Payload shape with rows * cols == bytes exactly, both sides <= 65535.
std::pair<std::size_t, std::size_t> exact_shape(std::mt19937_64& rng, std::size_t bytes) {
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= bytes; ++d) {
    if (bytes % d == 0 && d <= kMaxPayloadSide && bytes / d <= kMaxPayloadSide) divisors.push_back(d);
  }
  const std::size_t cols = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
  return {cols, bytes / cols};
}

// ---- 1 + 2 ----------------------------------------------------------------

struct RoundTripStats {
  int trials = 0;
  int exact = 0;
  std::size_t blocks_checked = 0;
  std::size_t lbp_violations = 0;
};

RoundTripStats round_trip_trials(const std::vector<NamedImage>& corpus) {
  RoundTripStats stats;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> side(64, 256);
  for (int trial = 0; trial < 100; ++trial) {
    const int mu = trial % 4 + 1;
    const StegoParams params(mu);
    const std::size_t w = side(rng), h = side(rng);
    GrayImage cover;
    if (trial % 2 == 0) {
      cover = testing::random_image(rng, w, h);
    } else {
      const auto& src = corpus[static_cast<std::size_t>(trial / 2) % corpus.size()].image;
      cover = crop(src, rng() % (src.height() - h + 1), rng() % (src.width() - w + 1), w, h);
    }
    const auto [cols, rows] = exact_shape(rng, max_payload_bytes(cover, params));
    const auto payload = random_bytes_image(rng, cols, rows);
    const auto stego = embed(cover, payload, params);
    ++stats.trials;
    if (extract(stego, params) == payload) ++stats.exact;

    const auto grid = BlockGrid::of(cover);
    for (std::size_t b = 0; b < grid.count(); ++b) {
      Block clamped = read_block(cover, grid, b);
      for (auto& v : clamped.neighbors) v = static_cast<std::uint8_t>(clamp_mu(v, mu));
      ++stats.blocks_checked;
      if (read_block(stego, grid, b).lbp() != clamped.lbp()) ++stats.lbp_violations;
    }
  }
  return stats;
}

// ---- 3 ---------------------------------------------------------------------

Outcome sync_safety() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t cases = 0, failures = 0;
  for (int mu = 1; mu <= 4; ++mu) {
    const StegoParams params(mu);
    const int step = 1 << mu;
    for (int center = 0; center <= 255; ++center) {
      for (int neighbor = step; neighbor <= 255 - step; ++neighbor) {
        for (int pattern = 0; pattern < step; ++pattern) {
          ++cases;
          const auto v = static_cast<std::uint8_t>(neighbor);
          const int inserted = insert_low_bits(v, static_cast<unsigned>(pattern), params);
          const int synced = sync_neighbor(static_cast<std::uint8_t>(center), v, inserted, params);
          const bool in_range = synced >= 0 && synced <= 255;
          const bool keeps_bits = in_range && (synced & (step - 1)) == pattern;
          const bool relation = (center >= synced) == (center >= neighbor);
          if (!(in_range && keeps_bits && relation)) ++failures;
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = failures == 0 && secs < 60.0;
  o.summary = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures, " +
              fmt(secs, 2) + " s";
  return o;
}

// ---- 4 ---------------------------------------------------------------------

Outcome capacity_bit_rate() {
  const GrayImage cover(512, 512);
  const std::size_t bits = capacity(cover, StegoParams(4)) * 8;
  const double br = bit_rate(bits, cover);
  Outcome o;
  o.pass = bits == 924800 && std::abs(br - 3.53) < 0.005 && br >= 3.37 && br <= 3.99;
  o.summary = std::to_string(bits) + " bits, BR " + fmt(br) + " bpp (reference BR range 3.37-3.99)";
  return o;
}

// ---- 5 ---------------------------------------------------------------------

// Expected MSE of a full-capacity embed with uniformly random inserted bits,
// by enumerating every low-bit pattern for every neighbor pixel.
double oracle_mse(const GrayImage& cover, int mu) {
  const int step = 1 << mu;
  double total = 0.0;
  const std::size_t rows = cover.height() / 3 * 3;
  const std::size_t cols = cover.width() / 3 * 3;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (r % 3 == 1 && c % 3 == 1) continue;
      const int original = cover.at(r, c);
      const int center = cover.at(r / 3 * 3 + 1, c / 3 * 3 + 1);
      const int v = clamp_mu(original, mu);
      const bool below = center >= v;
      double sum = 0.0;
      for (int pattern = 0; pattern < step; ++pattern) {
        const int inserted = v / step * step + pattern;
        // Of inserted - step, inserted, inserted + step keep the one closest
        // to `inserted` that sits on the same side of the center as v.
        int chosen = inserted;
        if ((center >= inserted) != below) chosen = below ? inserted - step : inserted + step;
        sum += double(chosen - original) * double(chosen - original);
      }
      total += sum / step;
    }
  }
  return total / static_cast<double>(cover.size());
}

Outcome psnr_sanity(const std::vector<NamedImage>& corpus, std::vector<std::string>& info) {
  Outcome o;
  std::mt19937_64 rng(77);
  double worst_gap = 0.0;
  bool monotone = true;
  double min_mu1 = kInfinitePsnr;
  double mu4_min = kInfinitePsnr, mu4_max = 0.0, q4_min = 1.0, q4_max = -1.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& cover = corpus[i].image;
    std::string line = corpus[i].name + ":";
    for (int mu : {1, 4}) {
      const StegoParams params(mu);
      const std::size_t body = max_payload_bytes(cover, params);
      const auto payload = random_bytes_image(rng, body / 2, 2);
      const double measured = psnr(cover, embed(cover, payload, params));
      const double predicted = psnr_from_mse(oracle_mse(cover, mu));
      worst_gap = std::max(worst_gap, std::abs(measured - predicted));
      line += " mu" + std::to_string(mu) + " measured " + fmt(measured, 3) + " / oracle " +
              fmt(predicted, 3) + " dB;";
    }
    const auto& payload = corpus[(i + 1) % corpus.size()].image;
    double last = kInfinitePsnr;
    line += " natural payload PSNR by mu:";
    for (int mu = 1; mu <= 4; ++mu) {
      const auto stego = embed_at_rate(cover, payload, 100.0, StegoParams(mu)).stego;
      const double p = psnr(cover, stego);
      line += " " + fmt(p, 2);
      if (!(p < last)) monotone = false;
      last = p;
      if (mu == 1) min_mu1 = std::min(min_mu1, p);
      if (mu == 4) {
        const double q = quality_index(cover, stego);
        mu4_min = std::min(mu4_min, p);
        mu4_max = std::max(mu4_max, p);
        q4_min = std::min(q4_min, q);
        q4_max = std::max(q4_max, q);
      }
    }
    o.details.push_back(line);
  }
  const bool a = worst_gap <= 0.1;
  const bool c = min_mu1 >= 44.0;
  o.pass = a && monotone && c;
  o.summary = "(a) max |measured - oracle| " + fmt(worst_gap, 3) + " dB <= 0.1: " + (a ? "yes" : "no") +
              "; (b) monotone in mu: " + (monotone ? "yes" : "no") + "; (c) min mu=1 PSNR " +
              fmt(min_mu1, 2) + " dB >= 44: " + (c ? "yes" : "no");
  info.push_back("published reference (mu=4, full capacity): PSNR " + fmt(mu4_min, 2) + "-" +
                 fmt(mu4_max, 2) + " dB measured vs 53.57-58.64 dB reported; Q " + fmt(q4_min, 4) +
                 "-" + fmt(q4_max, 4) + " measured vs 0.9973-0.9998 reported");
  return o;
}

// ---- 6 ---------------------------------------------------------------------

Outcome metric_oracles(const std::vector<NamedImage>& corpus) {
  Outcome o;
  const GrayImage flat(64, 64, 120);
  GrayImage plus1 = flat, plus16 = flat;
  for (auto& p : plus1.pixels()) p = 121;
  for (auto& p : plus16.pixels()) p = 136;
  const double p1 = psnr(flat, plus1);
  const double p16 = psnr(flat, plus16);
  const bool closed = std::abs(p1 - 48.13) <= 0.01 && std::abs(p16 - 24.05) <= 0.01;

  bool q_one = true;
  for (const auto& img : corpus) q_one = q_one && quality_index(img.image, img.image) == 1.0;

  std::mt19937_64 rng(606);
  std::uniform_int_distribution<std::size_t> side(2, 64);
  int counting_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto img = testing::random_image(rng, side(rng), side(rng));
    const auto h = histogram(img);
    if (std::accumulate(h.begin(), h.end(), std::uint64_t{0}) != img.size()) ++counting_failures;
    if (pd_histogram(img).total() != img.height() * (img.width() - 1)) ++counting_failures;
  }
  o.pass = closed && q_one && counting_failures == 0;
  o.summary = "PSNR " + fmt(p1, 3) + " dB @MSE1, " + fmt(p16, 3) + " dB @MSE256; Q(a,a)=1 on corpus: " +
              (q_one ? "yes" : "no") + "; counting identity failures over 1000 images: " +
              std::to_string(counting_failures);
  return o;
}

// ---- 7 + 8 -----------------------------------------------------------------

constexpr int kAnalysisMu = 1;

Outcome rs_constancy(const std::vector<NamedImage>& corpus) {
  Outcome o;
  const std::vector<double> rates{0, 10, 20, 30, 40, 50};
  std::vector<MetricRow> rows;
  double worst = 0.0;
  int failing = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& cover = corpus[i];
    const auto& payload = corpus[(i + 1) % corpus.size()].image;
    double lo_m = 1, hi_m = 0, lo_n = 1, hi_n = 0;
    for (double rate : rates) {
      const auto stego = embed_at_rate(cover.image, payload, rate, StegoParams(kAnalysisMu)).stego;
      const auto rs = rs_analysis(stego);
      const double dm = std::abs(rs.r_m - rs.s_m);
      const double dn = std::abs(rs.r_neg_m - rs.s_neg_m);
      lo_m = std::min(lo_m, dm);
      hi_m = std::max(hi_m, dm);
      lo_n = std::min(lo_n, dn);
      hi_n = std::max(hi_n, dn);
      rows.push_back({cover.name, "proposed", rate, "rs_r_m", rs.r_m});
      rows.push_back({cover.name, "proposed", rate, "rs_s_m", rs.s_m});
      rows.push_back({cover.name, "proposed", rate, "rs_r_neg_m", rs.r_neg_m});
      rows.push_back({cover.name, "proposed", rate, "rs_s_neg_m", rs.s_neg_m});
      rows.push_back({cover.name, "proposed", rate, "rs_abs_rm_minus_sm", dm});
      rows.push_back({cover.name, "proposed", rate, "rs_abs_rnm_minus_snm", dn});
    }
    const double variation = std::max(hi_m - lo_m, hi_n - lo_n);
    worst = std::max(worst, variation);
    const bool ok = variation < 0.10;
    if (!ok) ++failing;
    o.details.push_back(cover.name + ": variation |R_m-S_m| " + fmt(hi_m - lo_m) + ", |R_-m-S_-m| " +
                        fmt(hi_n - lo_n) + (ok ? "  ok" : "  >= 0.10"));
  }
  const std::string csv = "acceptance_rs.csv";
  std::ofstream(csv, std::ios::binary) << emit_csv(metric_table(rows));
  o.pass = failing == 0;
  o.summary = "mu=" + std::to_string(kAnalysisMu) + ", rates 0-50%: worst variation " + fmt(worst) +
              " (< 0.10 required), " + std::to_string(failing) + "/" + std::to_string(corpus.size()) +
              " images exceed; CSV " + (fs::current_path() / csv).string();
  return o;
}

Outcome pdh_similarity(const std::vector<NamedImage>& corpus) {
  Outcome o;
  double worst = 1.0;
  int failing = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& cover = corpus[i];
    const auto& payload = corpus[(i + 1) % corpus.size()].image;
    const auto stego = embed_at_rate(cover.image, payload, 50.0, StegoParams(kAnalysisMu)).stego;
    const double r = pearson_correlation(pd_histogram(cover.image).counts(), pd_histogram(stego).counts());
    worst = std::min(worst, r);
    const bool ok = r >= 0.99;
    if (!ok) ++failing;
    o.details.push_back(cover.name + ": PDH correlation " + fmt(r) + (ok ? "  ok" : "  < 0.99"));
  }
  o.pass = failing == 0;
  o.summary = "mu=" + std::to_string(kAnalysisMu) + ", 50% embedding: min correlation " + fmt(worst) +
              " (>= 0.99 required), " + std::to_string(failing) + "/" + std::to_string(corpus.size()) +
              " images below";
  return o;
}

// ---- 9 ---------------------------------------------------------------------

GrayImage tiled(const GrayImage& src, std::size_t side) {
  GrayImage out(side, side);
  for (std::size_t r = 0; r < side; ++r)
    for (std::size_t c = 0; c < side; ++c) out.at(r, c) = src.at(r % src.height(), c % src.width());
  return out;
}

Outcome linear_scaling(const std::vector<NamedImage>& corpus) {
  Outcome o;
  std::mt19937_64 rng(9);
  const StegoParams params(1);
  std::vector<double> xs, ys;
  for (std::size_t side : {256u, 512u, 1024u}) {
    const auto cover = tiled(corpus.front().image, side);
    const auto [cols, rows] = std::pair<std::size_t, std::size_t>{max_payload_bytes(cover, params) / 4, 4};
    const auto payload = random_bytes_image(rng, cols, rows);
    double best = 1e9;
    for (int rep = 0; rep < 9; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto stego = embed(cover, payload, params);
      const auto t1 = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
      if (stego.empty()) return o;
    }
    xs.push_back(static_cast<double>(side * side));
    ys.push_back(best);
    o.details.push_back(std::to_string(side) + "x" + std::to_string(side) + ": " + fmt(best * 1e3, 3) + " ms");
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  const double r2 = syy == 0 ? 1.0 : sxy * sxy / (sxx * syy);
  o.pass = r2 >= 0.95;
  o.summary = "embed time vs pixel count, linear fit R^2 = " + fmt(r2, 4) + " (>= 0.95 required)";
  return o;
}

// ---- 10 --------------------------------------------------------------------

Outcome baseline_round_trips() {
  Outcome o;
  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<std::size_t> side(8, 96);
  int replace_ok = 0, match_ok = 0, lsbmr_ok = 0, lsbmr_dev = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto cover = testing::random_image(rng, side(rng), side(rng));
    const std::uint64_t seed = rng();
    const std::vector<BaselineMethod> methods{BaselineMethod::lsb_replace(trial % 4 + 1),
                                              BaselineMethod::lsb_match(seed), BaselineMethod::lsbmr(seed)};
    for (const auto& m : methods) {
      const std::size_t cap = baseline_capacity(cover, m);
      BitVector bits(std::uniform_int_distribution<std::size_t>(cap / 2, cap)(rng));
      for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
      const auto stego = baseline_embed(cover, bits, m);
      const bool ok = baseline_extract(stego, bits.size(), m) == bits;
      if (m.kind == BaselineKind::LsbReplace) replace_ok += ok;
      if (m.kind == BaselineKind::LsbMatch) match_ok += ok;
      if (m.kind == BaselineKind::Lsbmr) {
        lsbmr_ok += ok;
        for (std::size_t i = 0; i < cover.size(); ++i) {
          lsbmr_dev = std::max(lsbmr_dev, std::abs(int{stego.pixels()[i]} - int{cover.pixels()[i]}));
        }
      }
    }
  }
  o.pass = replace_ok == 100 && match_ok == 100 && lsbmr_ok == 100 && lsbmr_dev <= 1;
  o.summary = "LSB_REPLACE " + std::to_string(replace_ok) + "/100, LSB_MATCH " + std::to_string(match_ok) +
              "/100, LSBMR " + std::to_string(lsbmr_ok) + "/100, LSBMR max deviation " +
              std::to_string(lsbmr_dev);
  return o;
}

}  // namespace

int main() {
  const auto corpus = load_corpus();
  if (corpus.size() < 10) {
    std::cerr << "corpus at " << testing::corpus_dir() << " has " << corpus.size() << " images, need 10\n";
    return 2;
  }
  std::vector<std::string> info;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  RoundTripStats rt;
  criteria.emplace_back("AC1 round-trip exactness", [&] {
    rt = round_trip_trials(corpus);
    return Outcome{rt.exact == rt.trials && rt.trials == 100,
                   std::to_string(rt.exact) + "/" + std::to_string(rt.trials) + " trials exact",
                   {}};
  });
  criteria.emplace_back("AC2 LBP preservation", [&] {
    return Outcome{rt.lbp_violations == 0 && rt.blocks_checked > 0,
                   std::to_string(rt.lbp_violations) + " violations over " +
                       std::to_string(rt.blocks_checked) + " data-carrying blocks",
                   {}};
  });
  criteria.emplace_back("AC3 sync safety (exhaustive)", sync_safety);
  criteria.emplace_back("AC4 capacity / bit rate", capacity_bit_rate);
  criteria.emplace_back("AC5 PSNR sanity", [&] { return psnr_sanity(corpus, info); });
  criteria.emplace_back("AC6 metric oracles", [&] { return metric_oracles(corpus); });
  criteria.emplace_back("AC7 RS constancy", [&] { return rs_constancy(corpus); });
  criteria.emplace_back("AC8 PDH similarity", [&] { return pdh_similarity(corpus); });
  criteria.emplace_back("AC9 linear scaling", [&] { return linear_scaling(corpus); });
  criteria.emplace_back("AC10 baseline round-trips", baseline_round_trips);

  int failed = 0;
  for (auto& [name, check] : criteria) {
    const Outcome o = check();
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.summary << "\n";
    for (const auto& d : o.details) std::cout << "         " << d << "\n";
    if (!o.pass) ++failed;
  }
  for (const auto& line : info) std::cout << "[INFO] " << line << "\n";
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
