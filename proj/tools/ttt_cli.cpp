// ttt: build, compress, measure and play Tic-Tac-Toe evaluation tensors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ttt/compression.hpp"
#include "ttt/eval_tensor.hpp"
#include "ttt/experiment.hpp"
#include "ttt/metrics.hpp"
#include "ttt/tensor_file.hpp"
#include "ttt/tournament.hpp"

namespace fs = std::filesystem;

namespace {

fs::path default_output(const std::optional<std::string>& out, const std::string& fallback_name) {
  if (out) return *out;
  return fs::path(ttt::resolve_out_dir(std::nullopt)) / fallback_name;
}

void ensure_parent(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
}

void write_text(const fs::path& path, const std::string& text) {
  ensure_parent(path);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

ttt::EvalTensor read_exact(const std::string& path) {
  ttt::EvalTensor t = ttt::read_tensor_file(path);
  if (t.meta.method != ttt::Method::Exact) {
    throw std::invalid_argument(path + " holds an approximation (" + t.meta.label() + "), not the exact tensor");
  }
  return t;
}

int cmd_build(const std::optional<std::string>& out_opt) {
  const fs::path out = default_output(out_opt, "f_all.evt");
  const ttt::EvalTensor exact = ttt::build_exact();
  ensure_parent(out);
  ttt::write_tensor_file(out, exact);
  const auto bytes = ttt::encode_tensor(exact);
  std::printf("valid states: %zu / %d\n", ttt::enumerate_valid_states().size(), ttt::kStateCount);
  std::printf("f_all(empty board): %s\n", ttt::format_real(exact.values[0]).c_str());
  std::printf("wrote %s (%zu bytes, fnv1a64 %016llx)\n", out.string().c_str(), bytes.size(),
              static_cast<unsigned long long>(ttt::fnv1a64(bytes)));
  return 0;
}

int cmd_compress(const std::string& in, const std::string& method_name, int rank,
                 const std::optional<std::string>& out_opt) {
  const ttt::Method method = ttt::parse_method(method_name);
  const double cr = ttt::compression_ratio(method, rank);  // validates the rank first
  const ttt::EvalTensor exact = read_exact(in);
  const ttt::EvalTensor approx = method == ttt::Method::Svd
                                     ? ttt::reconstruct_svd(ttt::compress_svd(exact, rank))
                                     : ttt::reconstruct_hosvd(ttt::compress_hosvd(exact, rank));
  const fs::path out = default_output(out_opt, method_name + "_r" + std::to_string(rank) + ".evt");
  ensure_parent(out);
  ttt::write_tensor_file(out, approx);
  std::printf("method %s rank %d elements %zu\n", method_name.c_str(), rank, ttt::element_count(method, rank));
  std::printf("cr %s\n", ttt::format_real(cr).c_str());
  std::printf("rel_error %s\n", ttt::format_real(ttt::relative_error(exact, approx)).c_str());
  std::printf("wrote %s\n", out.string().c_str());
  return 0;
}

int cmd_metrics(const std::string& in, const std::string& method_name, std::vector<int> ranks,
                const std::optional<std::string>& out) {
  const ttt::Method method = ttt::parse_method(method_name);
  if (ranks.empty()) {
    const int top = method == ttt::Method::Svd ? ttt::kSvdMaxRank : ttt::kHosvdMaxRank;
    for (int r = 0; r <= top; ++r) ranks.push_back(r);
  }
  for (int r : ranks) (void)ttt::compression_ratio(method, r);
  const ttt::EvalTensor exact = read_exact(in);
  ttt::RunConfig config{.subcommand = "metrics", .method = method_name, .ranks = ranks, .inputs = {in}};
  if (out) config.outputs = {*out};
  const std::string csv = ttt::metrics_csv(ttt::compression_points(exact, method, ranks), config);
  if (out) {
    write_text(*out, csv);
  } else {
    std::cout << csv;
  }
  return 0;
}

int cmd_tournament(const std::string& file_a, const std::string& file_b, int games, double w,
                   std::uint64_t seed, unsigned threads, const std::optional<std::string>& out_opt) {
  const ttt::EvalTensor a = ttt::read_tensor_file(file_a);
  const ttt::EvalTensor b = ttt::read_tensor_file(file_b);
  const fs::path prefix = default_output(out_opt, "tournament");
  const std::string json_path = prefix.string() + ".json";
  const std::string csv_path = prefix.string() + ".csv";
  const ttt::RunConfig config{.subcommand = "tournament",
                              .games = games,
                              .w = w,
                              .seed = seed,
                              .inputs = {file_a, file_b},
                              .outputs = {json_path, csv_path}};
  const ttt::MatchReport report = ttt::run_match(a, b, games, w, seed, threads);
  write_text(json_path, ttt::match_json(report, config).dump(2) + "\n");
  write_text(csv_path, ttt::match_csv(report, config));
  std::printf("%s vs %s: %d games, A %d  B %d  draws %d  (rate_A %.3f, rate_B %.3f, draw %.3f)\n",
              report.label_a.c_str(), report.label_b.c_str(), report.games_total, report.wins_a, report.wins_b,
              report.draws, report.rate_a(), report.rate_b(), report.draw_rate());
  std::printf("wrote %s and %s\n", json_path.c_str(), csv_path.c_str());
  return 0;
}

int cmd_sweep(const std::string& kind_name, int games, double w, std::uint64_t seed, unsigned threads,
              const std::optional<std::string>& in, const std::optional<std::string>& out_dir_opt) {
  const ttt::SweepKind kind = ttt::parse_sweep_kind(kind_name);
  const ttt::EvalTensor exact = in ? read_exact(*in) : ttt::build_exact();
  const fs::path out = fs::path(ttt::resolve_out_dir(out_dir_opt)) / (kind_name + ".csv");
  ttt::RunConfig config{.subcommand = "sweep", .games = games, .w = w, .seed = seed, .kind = kind_name,
                        .outputs = {out.string()}};
  if (in) config.inputs = {*in};
  const auto rows = ttt::run_sweep(kind, exact, games, w, seed, threads);
  write_text(out, ttt::sweep_csv(rows, config));
  std::printf("%zu rows written to %s\n", rows.size(), out.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tic-Tac-Toe evaluation tensors: exact build, SVD/HOSVD compression, self-play"};
  app.require_subcommand(1);

  std::optional<std::string> out;
  std::optional<std::string> out_dir;
  std::optional<std::string> in_opt;
  std::string in;
  std::string method = "svd";
  int rank = 0;
  std::vector<int> ranks;
  std::string file_a;
  std::string file_b;
  int games = 500;
  double w = ttt::kDefaultWeight;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string kind = "fig4";

  auto* build = app.add_subcommand("build", "Build the exact evaluation tensor");
  build->add_option("--out,-o", out, "Output tensor file (default $TTT_OUT_DIR/f_all.evt)");

  auto* compress = app.add_subcommand("compress", "Rank-truncate the exact tensor and store the reconstruction");
  compress->add_option("--in,-i", in, "Exact tensor file")->required();
  compress->add_option("--method,-m", method, "svd or hosvd")->check(CLI::IsMember({"svd", "hosvd"}));
  compress->add_option("--rank,-r", rank, "Number of kept singular values")->required();
  compress->add_option("--out,-o", out, "Output tensor file");

  auto* metrics = app.add_subcommand("metrics", "Compression ratio and relative error per rank (CSV)");
  metrics->add_option("--in,-i", in, "Exact tensor file")->required();
  metrics->add_option("--method,-m", method, "svd or hosvd")->check(CLI::IsMember({"svd", "hosvd"}));
  metrics->add_option("--ranks", ranks, "Ranks to evaluate (default: all)")->delimiter(',');
  metrics->add_option("--out,-o", out, "CSV path (default: stdout)");

  auto* tournament = app.add_subcommand("tournament", "Play a side-swapped match between two tensors");
  tournament->add_option("--a", file_a, "Tensor file for player A")->required();
  tournament->add_option("--b", file_b, "Tensor file for player B")->required();
  tournament->add_option("--games,-n", games, "Number of games (even)");
  tournament->add_option("--w", w, "Softmax weight");
  tournament->add_option("--seed,-s", seed, "Master seed");
  tournament->add_option("--threads", threads, "Worker threads (0 = all cores)");
  tournament->add_option("--out,-o", out, "Output prefix for .json and .csv (default $TTT_OUT_DIR/tournament)");

  auto* sweep = app.add_subcommand("sweep", "Reproduce a winning-rate sweep as CSV");
  sweep->add_option("--kind,-k", kind, "fig4 (exact vs svd, r = 0..81) or fig5 (svd vs hosvd)")
      ->check(CLI::IsMember({"fig4", "fig5"}));
  sweep->add_option("--games,-n", games, "Games per point (even)");
  sweep->add_option("--w", w, "Softmax weight");
  sweep->add_option("--seed,-s", seed, "Master seed");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep->add_option("--in,-i", in_opt, "Exact tensor file (default: build in memory)");
  sweep->add_option("--out-dir", out_dir, "Output directory (default $TTT_OUT_DIR or .)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cmd_build(out);
    if (*compress) return cmd_compress(in, method, rank, out);
    if (*metrics) return cmd_metrics(in, method, ranks, out);
    if (*tournament) return cmd_tournament(file_a, file_b, games, w, seed, threads, out);
    if (*sweep) return cmd_sweep(kind, games, w, seed, threads, in_opt, out_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
