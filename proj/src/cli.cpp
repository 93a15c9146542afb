#include "lbpsteg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "lbpsteg/analysis.hpp"
#include "lbpsteg/codec.hpp"
#include "lbpsteg/error.hpp"
#include "lbpsteg/image.hpp"
#include "lbpsteg/sweep.hpp"

namespace lbpsteg::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes: 0 success, 1 usage error, 2 I/O error (unreadable input, or output exists\n"
    "without --force), 3 bad PGM, 4 capacity exceeded, 5 corrupt stream (wrong --mu?),\n"
    "6 other invalid input.";

std::string fixed(double v, int digits) {
  if (std::isinf(v) || std::isnan(v)) return format_number(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void check_output(const fs::path& path, bool force) {
  if (!force && fs::exists(path)) {
    throw IoError("refusing to overwrite " + path.string() + " (pass --force)");
  }
}

void write_text(const fs::path& path, const std::string& text, bool force) {
  check_output(path, force);
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

struct Options {
  std::string cover, payload, out, stego, a, b, image, csv, cover_dir;
  std::string mask = "0110";
  int mu = 1;
  bool force = false;
  std::vector<double> rates{10, 20, 30, 40, 50};
  std::vector<std::string> methods{"proposed", "lsb1", "lsbm", "lsbmr"};
  std::uint64_t seed = 0;
};

void add_mu(CLI::App* cmd, Options& o, bool required) {
  auto* opt = cmd->add_option("--mu", o.mu, "Bits per neighbor pixel (the shared key)")
                  ->check(CLI::Range(StegoParams::kMinMu, StegoParams::kMaxMu));
  if (required) opt->required();
}

void add_force(CLI::App* cmd, Options& o) {
  cmd->add_flag("--force", o.force, "Overwrite existing output files");
}

int do_embed(const Options& o, std::ostream& out) {
  check_output(o.out, o.force);
  const StegoParams params(o.mu);
  const auto cover = load_pgm(o.cover);
  const auto payload = load_pgm(o.payload);
  const auto stego = embed(cover, payload, params);
  save_pgm(stego, o.out);
  const std::size_t bits = (kHeaderBytes + payload.size()) * 8;
  out << "embedded " << payload.width() << "x" << payload.height() << " payload ("
      << bits << " stream bits, " << fixed(bit_rate(bits, cover), 4) << " bpp), PSNR "
      << fixed(psnr(cover, stego), 2) << " dB\n";
  return kOk;
}

int do_extract(const Options& o, std::ostream& out) {
  check_output(o.out, o.force);
  const auto payload = extract(load_pgm(o.stego), StegoParams(o.mu));
  save_pgm(payload, o.out);
  out << "extracted " << payload.width() << "x" << payload.height() << " payload\n";
  return kOk;
}

int do_capacity(const Options& o, std::ostream& out) {
  const StegoParams params(o.mu);
  const auto cover = load_pgm(o.cover);
  const std::size_t cap = capacity(cover, params);
  out << cap << " bytes (" << fixed(bit_rate(cap * 8, cover), 2) << " bpp stream)\n";
  out << "max payload: " << max_payload_bytes(cover, params) << " bytes\n";
  return kOk;
}

int do_metrics(const Options& o, std::ostream& out) {
  const auto a = load_pgm(o.a);
  const auto b = load_pgm(o.b);
  const double p = psnr(a, b);
  const double q = quality_index(a, b);
  const double h = histogram_distance(a, b);
  out << "psnr: " << fixed(p, 4) << " dB\n";
  out << "q_index: " << fixed(q, 6) << "\n";
  out << "hist_distance: " << fixed(h, 6) << "\n";
  if (!o.csv.empty()) {
    const std::string name = fs::path(o.b).stem().string();
    const std::vector<MetricRow> rows{{name, "metrics", 0.0, "psnr", p},
                                      {name, "metrics", 0.0, "q_index", q},
                                      {name, "metrics", 0.0, "hist_distance", h}};
    write_text(o.csv, emit_csv(metric_table(rows)), o.force);
  }
  return kOk;
}

int do_rs(const Options& o, std::ostream& out) {
  const auto mask = parse_rs_mask(o.mask);
  const auto stats = rs_analysis(load_pgm(o.image), mask);
  out << "R_m=" << fixed(stats.r_m, 6) << " S_m=" << fixed(stats.s_m, 6)
      << " R_-m=" << fixed(stats.r_neg_m, 6) << " S_-m=" << fixed(stats.s_neg_m, 6) << "\n";
  if (!o.csv.empty()) {
    const std::string name = fs::path(o.image).stem().string();
    const std::vector<MetricRow> rows{{name, "rs", 0.0, "rs_r_m", stats.r_m},
                                      {name, "rs", 0.0, "rs_s_m", stats.s_m},
                                      {name, "rs", 0.0, "rs_r_neg_m", stats.r_neg_m},
                                      {name, "rs", 0.0, "rs_s_neg_m", stats.s_neg_m}};
    write_text(o.csv, emit_csv(metric_table(rows)), o.force);
  }
  return kOk;
}

int do_pdh(const Options& o, std::ostream& out) {
  const auto pdh = pd_histogram(load_pgm(o.image));
  CsvTable table{{"d", "count"}, {}};
  for (int d = PdHistogram::kMinDiff; d <= PdHistogram::kMaxDiff; ++d) {
    table.rows.push_back({std::to_string(d), std::to_string(pdh.count(d))});
  }
  const std::string text = emit_csv(table);
  if (o.csv.empty()) {
    out << text;
  } else {
    write_text(o.csv, text, o.force);
    out << "pairs: " << pdh.total() << "\n";
  }
  return kOk;
}

int do_compare(const Options& o, std::ostream& out) {
  check_output(o.csv, o.force);
  for (double r : o.rates) {
    if (!(r > 0.0 && r <= 100.0)) throw InvalidArgumentError("rates must lie in (0, 100]");
  }
  std::vector<fs::path> paths;
  if (!fs::is_directory(o.cover_dir)) throw IoError("not a directory: " + o.cover_dir);
  for (const auto& entry : fs::directory_iterator(o.cover_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) throw IoError("no .pgm files in " + o.cover_dir);

  std::vector<NamedImage> covers;
  for (const auto& p : paths) covers.push_back({p.stem().string(), load_pgm(p)});
  SweepConfig config{o.rates, o.methods, o.seed, o.mu};
  const auto rows = run_sweep(covers, load_pgm(o.payload), config);
  write_text(o.csv, emit_csv(metric_table(rows)), o.force);
  out << "wrote " << rows.size() << " rows for " << covers.size() << " images to " << o.csv << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"LBP-preserving blind image steganography toolkit", "lbpsteg"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);
  Options o;

  auto* embed_cmd = app.add_subcommand("embed", "Hide a payload PGM inside a cover PGM");
  embed_cmd->add_option("--cover", o.cover, "Cover image (P5 PGM)")->required();
  embed_cmd->add_option("--payload", o.payload, "Payload image (P5 PGM)")->required();
  embed_cmd->add_option("--out", o.out, "Stego output path")->required();
  add_mu(embed_cmd, o, true);
  add_force(embed_cmd, o);

  auto* extract_cmd = app.add_subcommand("extract", "Recover the payload from a stego PGM");
  extract_cmd->add_option("--stego", o.stego, "Stego image (P5 PGM)")->required();
  extract_cmd->add_option("--out", o.out, "Payload output path")->required();
  add_mu(extract_cmd, o, true);
  add_force(extract_cmd, o);

  auto* capacity_cmd = app.add_subcommand("capacity", "Print the stream capacity of a cover");
  capacity_cmd->add_option("--cover", o.cover, "Cover image (P5 PGM)")->required();
  add_mu(capacity_cmd, o, true);

  auto* metrics_cmd = app.add_subcommand("metrics", "PSNR, quality index and histogram distance");
  metrics_cmd->add_option("--a", o.a, "Reference image")->required();
  metrics_cmd->add_option("--b", o.b, "Distorted image")->required();
  metrics_cmd->add_option("--csv", o.csv, "Write metrics as CSV");
  add_force(metrics_cmd, o);

  auto* rs_cmd = app.add_subcommand("rs", "Regular/singular group statistics");
  rs_cmd->add_option("--image", o.image, "Image to analyse")->required();
  rs_cmd->add_option("--mask", o.mask, "Flip mask, e.g. 0110 or 0,-1,1,0")->capture_default_str();
  rs_cmd->add_option("--csv", o.csv, "Write statistics as CSV");
  add_force(rs_cmd, o);

  auto* pdh_cmd = app.add_subcommand("pdh", "Horizontal pixel difference histogram");
  pdh_cmd->add_option("--image", o.image, "Image to analyse")->required();
  pdh_cmd->add_option("--csv", o.csv, "Write the histogram here instead of stdout");
  add_force(pdh_cmd, o);

  auto* compare_cmd = app.add_subcommand("compare", "Sweep methods and rates over a cover corpus");
  compare_cmd->add_option("--cover-dir", o.cover_dir, "Directory of cover PGMs")->required();
  compare_cmd->add_option("--payload", o.payload, "Payload PGM (cropped or tiled per rate)")
      ->required();
  compare_cmd->add_option("--rates", o.rates, "Percent of each method's capacity")
      ->delimiter(',')
      ->capture_default_str();
  compare_cmd->add_option("--methods", o.methods, "proposed, lsb1..lsb4, lsbm, lsbmr")
      ->delimiter(',')
      ->check(CLI::IsMember({"proposed", "lsb1", "lsb2", "lsb3", "lsb4", "lsbm", "lsbmr"}))
      ->capture_default_str();
  compare_cmd->add_option("--seed", o.seed, "Seed for the +-1 choices of LSBM/LSBMR")
      ->capture_default_str();
  compare_cmd->add_option("--csv", o.csv, "Output CSV")->required();
  add_mu(compare_cmd, o, false);
  compare_cmd->get_option("--mu")->capture_default_str();
  add_force(compare_cmd, o);

  for (auto* sub : app.get_subcommands({})) sub->footer(kExitCodeHelp);

  std::vector<std::string> argv_storage{"lbpsteg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (embed_cmd->parsed()) return do_embed(o, out);
    if (extract_cmd->parsed()) return do_extract(o, out);
    if (capacity_cmd->parsed()) return do_capacity(o, out);
    if (metrics_cmd->parsed()) return do_metrics(o, out);
    if (rs_cmd->parsed()) return do_rs(o, out);
    if (pdh_cmd->parsed()) return do_pdh(o, out);
    if (compare_cmd->parsed()) return do_compare(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kFormat;
  } catch (const UnsupportedDepthError& e) {
    err << "error: " << e.what() << "\n";
    return kFormat;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << "\n";
    return kFormat;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const CoverTooSmallError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const CorruptStreamError& e) {
    err << "error: " << e.what() << "\n";
    return kCorruptStream;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace lbpsteg::cli
