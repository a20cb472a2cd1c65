#include "ttt/experiment.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ttt {
namespace {

std::string rank_field(int r) { return r < 0 ? std::string{} : std::to_string(r); }

std::string preamble(const RunConfig& config) { return "# config: " + config.dump() + "\n"; }

}  // namespace

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  if (method) j["method"] = *method;
  if (!ranks.empty()) j["ranks"] = ranks;
  if (games) j["games"] = *games;
  if (w) j["w"] = *w;
  if (seed) j["seed"] = *seed;
  if (kind) j["kind"] = *kind;
  if (!inputs.empty()) j["inputs"] = inputs;
  if (!outputs.empty()) j["outputs"] = outputs;
  return j;
}

SweepKind parse_sweep_kind(std::string_view s) {
  if (s == "fig4") return SweepKind::Fig4;
  if (s == "fig5") return SweepKind::Fig5;
  throw std::invalid_argument("unknown sweep kind: " + std::string(s));
}

std::string_view to_string(SweepKind k) { return k == SweepKind::Fig4 ? "fig4" : "fig5"; }

std::vector<SweepPoint> fig4_points(const EvalTensor& exact, const SvdBasis& svd_basis) {
  auto shared_exact = std::make_shared<const EvalTensor>(exact);
  std::vector<SweepPoint> points;
  for (int r = 0; r <= kSvdMaxRank; ++r) {
    auto approx = std::make_shared<const EvalTensor>(approximate(svd_basis, r));
    const double err = relative_error(exact, *approx);
    points.push_back(SweepPoint{shared_exact, std::move(approx), compression_ratio(Method::Svd, r), r, -1, 0.0, err});
  }
  return points;
}

std::vector<SweepPoint> fig5_points(const EvalTensor& exact, const SvdBasis& svd_basis,
                                    const HosvdBasis& hosvd_basis) {
  std::vector<SweepPoint> points;
  for (double target : kTableOneTargets) {
    const RankMatch m = match_ranks(target);
    auto a = std::make_shared<const EvalTensor>(approximate(svd_basis, m.svd_rank));
    auto b = std::make_shared<const EvalTensor>(approximate(hosvd_basis, m.hosvd_rank));
    const double err_a = relative_error(exact, *a);
    const double err_b = relative_error(exact, *b);
    points.push_back(SweepPoint{std::move(a), std::move(b), target, m.svd_rank, m.hosvd_rank, err_a, err_b});
  }
  return points;
}

std::vector<SweepRow> run_sweep(SweepKind kind, const EvalTensor& exact, int games, double w,
                                std::uint64_t seed, unsigned threads) {
  const SvdBasis svd_basis = SvdBasis::compute(exact);
  const auto points = kind == SweepKind::Fig4
                          ? fig4_points(exact, svd_basis)
                          : fig5_points(exact, svd_basis, HosvdBasis::compute(exact));
  return sweep(points, games, w, seed, threads);
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const RunConfig& config) {
  std::ostringstream out;
  out << preamble(config) << kSweepCsvHeader << "\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << format_real(row.cr) << ',' << rank_field(row.r_svd) << ',' << rank_field(row.r_hosvd) << ','
        << format_real(r.rate_a()) << ',' << format_real(r.rate_b()) << ',' << format_real(r.draw_rate()) << ','
        << format_real(row.rel_error_b) << ',' << format_real(wilson_halfwidth(r.wins_a, r.games_total)) << ','
        << format_real(row.rel_error_a) << "\n";
  }
  return out.str();
}

std::vector<CompressionPoint> compression_points(const EvalTensor& exact, Method method,
                                                 const std::vector<int>& ranks) {
  std::vector<CompressionPoint> points;
  if (ranks.empty()) return points;
  if (method == Method::Svd) {
    const SvdBasis basis = SvdBasis::compute(exact);
    for (int r : ranks) {
      points.push_back({method, r, compression_ratio(method, r), relative_error(exact, approximate(basis, r))});
    }
  } else if (method == Method::Hosvd) {
    const HosvdBasis basis = HosvdBasis::compute(exact);
    for (int r : ranks) {
      points.push_back({method, r, compression_ratio(method, r), relative_error(exact, approximate(basis, r))});
    }
  } else {
    throw std::invalid_argument("metrics need method svd or hosvd");
  }
  return points;
}

std::string metrics_csv(const std::vector<CompressionPoint>& points, const RunConfig& config) {
  std::string out = preamble(config) + kCompressionCsvHeader + "\n";
  for (const auto& p : points) out += to_csv_row(p) + "\n";
  return out;
}

nlohmann::ordered_json match_json(const MatchReport& r, const RunConfig& config) {
  nlohmann::ordered_json j;
  j["config"] = config.to_json();
  j["label_A"] = r.label_a;
  j["label_B"] = r.label_b;
  j["games_total"] = r.games_total;
  j["wins_A"] = r.wins_a;
  j["wins_B"] = r.wins_b;
  j["draws"] = r.draws;
  j["rate_A"] = r.rate_a();
  j["rate_B"] = r.rate_b();
  j["draw_rate"] = r.draw_rate();
  j["ci_halfwidth_A"] = wilson_halfwidth(r.wins_a, r.games_total);
  j["ci_halfwidth_B"] = wilson_halfwidth(r.wins_b, r.games_total);
  auto side = [](const SideTally& t) {
    return nlohmann::ordered_json{{"wins_A", t.wins_a}, {"wins_B", t.wins_b}, {"draws", t.draws}};
  };
  j["A_first"] = side(r.a_first);
  j["A_second"] = side(r.a_second);
  j["seed"] = r.seed;
  j["w"] = r.w;
  return j;
}

std::string match_csv(const MatchReport& r, const RunConfig& config) {
  std::ostringstream out;
  out << preamble(config) << kMatchCsvHeader << "\n"
      << r.label_a << ',' << r.label_b << ',' << r.games_total << ',' << r.wins_a << ',' << r.wins_b << ','
      << r.draws << ',' << format_real(r.rate_a()) << ',' << format_real(r.rate_b()) << ','
      << format_real(r.draw_rate()) << ',' << format_real(wilson_halfwidth(r.wins_a, r.games_total)) << ','
      << format_real(wilson_halfwidth(r.wins_b, r.games_total)) << ',' << r.a_first.wins_a << ','
      << r.a_first.wins_b << ',' << r.a_first.draws << ',' << r.a_second.wins_a << ',' << r.a_second.wins_b
      << ',' << r.a_second.draws << "\n";
  return out.str();
}

std::string resolve_out_dir(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir) return *explicit_dir;
  if (const char* env = std::getenv("TTT_OUT_DIR"); env && *env) return env;
  return ".";
}

}  // namespace ttt
