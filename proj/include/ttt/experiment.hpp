#pragma once

// Experiment drivers shared by the command-line tool and the acceptance
// suite: run configuration, the two published sweeps, and their CSV / JSON
// renderings. Every artifact starts with the configuration that produced it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ttt/compression.hpp"
#include "ttt/metrics.hpp"
#include "ttt/tournament.hpp"

namespace ttt {

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> method;
  std::vector<int> ranks;
  std::optional<int> games;
  std::optional<double> w;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> kind;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  nlohmann::ordered_json to_json() const;
  // Single-line JSON; used as the "# config: ..." CSV preamble.
  std::string dump() const { return to_json().dump(); }
};

enum class SweepKind { Fig4, Fig5 };
SweepKind parse_sweep_kind(std::string_view s);
std::string_view to_string(SweepKind k);

// Exact tensor against svd(r) for every r in 0..81.
std::vector<SweepPoint> fig4_points(const EvalTensor& exact, const SvdBasis& svd_basis);
// svd(r_svd) against hosvd(r_hosvd) at each published compression column.
std::vector<SweepPoint> fig5_points(const EvalTensor& exact, const SvdBasis& svd_basis,
                                    const HosvdBasis& hosvd_basis);

std::vector<SweepRow> run_sweep(SweepKind kind, const EvalTensor& exact, int games, double w,
                                std::uint64_t seed, unsigned threads = 0);

// Columns: cr, r_svd, r_hosvd, rate_A, rate_B, draw_rate, rel_error,
// ci_halfwidth, rel_error_a. rel_error is side B's error, rel_error_a side
// A's; ci_halfwidth is the Wilson half-width of rate_A. An absent rank is an
// empty field.
inline constexpr const char* kSweepCsvHeader =
    "cr,r_svd,r_hosvd,rate_A,rate_B,draw_rate,rel_error,ci_halfwidth,rel_error_a";
std::string sweep_csv(const std::vector<SweepRow>& rows, const RunConfig& config);

std::vector<CompressionPoint> compression_points(const EvalTensor& exact, Method method,
                                                 const std::vector<int>& ranks);
std::string metrics_csv(const std::vector<CompressionPoint>& points, const RunConfig& config);

inline constexpr const char* kMatchCsvHeader =
    "label_A,label_B,games,wins_A,wins_B,draws,rate_A,rate_B,draw_rate,ci_halfwidth_A,ci_halfwidth_B,"
    "A_first_wins_A,A_first_wins_B,A_first_draws,A_second_wins_A,A_second_wins_B,A_second_draws";
nlohmann::ordered_json match_json(const MatchReport& report, const RunConfig& config);
std::string match_csv(const MatchReport& report, const RunConfig& config);

// Explicit value, else $TTT_OUT_DIR, else ".".
std::string resolve_out_dir(const std::optional<std::string>& explicit_dir);

}  // namespace ttt
