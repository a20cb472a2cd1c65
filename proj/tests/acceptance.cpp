// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ttt/compression.hpp"
#include "ttt/eval_tensor.hpp"
#include "ttt/experiment.hpp"
#include "ttt/game.hpp"
#include "ttt/metrics.hpp"
#include "ttt/policy.hpp"
#include "ttt/tournament.hpp"

namespace {

constexpr int kGames = 500;
constexpr double kW = 10.0;
constexpr std::uint64_t kSeed = 1;

int failures = 0;

void report(bool ok, const char* id, const std::string& detail) {
  std::printf("[%s] %s %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ttt::RunConfig sweep_config(ttt::SweepKind kind) {
  ttt::RunConfig c;
  c.subcommand = "sweep";
  c.kind = std::string(ttt::to_string(kind));
  c.games = kGames;
  c.w = kW;
  c.seed = kSeed;
  return c;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  // AC1
  auto t0 = clock::now();
  const auto states = ttt::enumerate_valid_states();
  const ttt::EvalTensor exact = ttt::build_exact();
  const double build_s = seconds_since(t0);
  report(states.size() == 5478 && build_s < 1.0, "AC1",
         fmt("valid states %zu / %d, build %.3f s", states.size(), ttt::kStateCount, build_s));

  // AC2
  {
    const auto s6 = ttt::GameState::parse("OX..XOXO.");
    const double c3 = ttt::lookup(exact, ttt::apply_move(s6, 3));
    const double c4 = ttt::lookup(exact, ttt::apply_move(s6, 4));
    const double c9 = ttt::lookup(exact, ttt::apply_move(s6, 9));
    const double p = ttt::lookup(exact, s6);
    const bool ok = std::abs(c3 - 0.5) < 1e-12 && std::abs(c4 + 0.5) < 1e-12 && std::abs(c9) < 1e-12 &&
                    std::abs(p) < 1e-12;
    report(ok, "AC2", fmt("children (%.15g, %.15g, %.15g), parent %.15g", c3, c4, c9, p));
  }

  const ttt::SvdBasis svd_basis = ttt::SvdBasis::compute(exact);
  const ttt::HosvdBasis hosvd_basis = ttt::HosvdBasis::compute(exact);

  // AC3
  {
    const double es = ttt::relative_error(exact, ttt::approximate(svd_basis, 81));
    const double eh = ttt::relative_error(exact, ttt::approximate(hosvd_basis, 27));
    report(es < 1e-10 && eh < 1e-10, "AC3", fmt("svd(81) %.3g, hosvd(27) %.3g", es, eh));
  }

  // AC4
  {
    const auto& s = svd_basis.factors.singular_values;
    const double norm = ttt::frobenius_norm(exact.values);
    double worst = 0.0;
    for (int r = 0; r <= 81; ++r) {
      double tail = 0.0;
      for (std::size_t i = static_cast<std::size_t>(r); i < s.size(); ++i) tail += s[i] * s[i];
      const double measured = ttt::relative_error(exact, ttt::approximate(svd_basis, r));
      worst = std::max(worst, std::abs(measured - std::sqrt(tail) / norm));
    }
    report(worst < 1e-10, "AC4", fmt("max |E_measured - E_tail| over r=0..81: %.3g", worst));
  }

  // AC5
  {
    const int expected[8][2] = {{0, 0}, {3, 7}, {8, 12}, {12, 14}, {19, 17}, {26, 19}, {49, 24}, {61, 26}};
    bool ok = true;
    std::string got;
    for (std::size_t i = 0; i < 8; ++i) {
      const auto m = ttt::match_ranks(ttt::kTableOneTargets[i]);
      ok = ok && m.svd_rank == expected[i][0] && m.hosvd_rank == expected[i][1];
      got += fmt("(%g;%d;%d)", m.target_cr, m.svd_rank, m.hosvd_rank);
    }
    report(ok, "AC5", got);
  }

  // AC6
  {
    const auto svd18 = ttt::compress_svd(svd_basis, 18).element_count();
    const auto hosvd24 = ttt::compress_hosvd(hosvd_basis, 24).element_count();
    const auto svd49 = ttt::compress_svd(svd_basis, 49).element_count();
    const double cr_h = ttt::compression_ratio(ttt::Method::Hosvd, 24);
    const double cr_s = ttt::compression_ratio(ttt::Method::Svd, 49);
    const bool ok = svd18 == 5832 && hosvd24 == 15768 && svd49 == 15876 && std::abs(cr_h - 0.801) < 5e-4 &&
                    std::abs(cr_s - 0.807) < 5e-4;
    report(ok, "AC6", fmt("svd(18) %zu, hosvd(24) %zu (Cr %.4f), svd(49) %zu (Cr %.4f)", svd18, hosvd24, cr_h,
                          svd49, cr_s));
  }

  // AC7
  std::string fig4_csv;
  {
    const auto points = ttt::fig4_points(exact, svd_basis);
    std::vector<ttt::SweepRow> rows;
    double slowest = 0.0;
    for (const auto& p : points) {
      const auto tp = clock::now();
      rows.push_back(ttt::sweep(std::span(&p, 1), kGames, kW, kSeed).front());
      slowest = std::max(slowest, seconds_since(tp));
    }
    fig4_csv = ttt::sweep_csv(rows, sweep_config(ttt::SweepKind::Fig4));
    const double at_one = rows[61].report.rate_a();
    double max_dev = 0.0;
    double plateau = 0.0;
    int plateau_n = 0;
    for (int r = 18; r <= 81; ++r) {
      const double rate = rows[static_cast<std::size_t>(r)].report.rate_a();
      max_dev = std::max(max_dev, std::abs(rate - at_one));
      plateau += rate;
      ++plateau_n;
    }
    plateau /= plateau_n;
    double min_low = 1.0;
    for (int r = 0; r <= 9; ++r) min_low = std::min(min_low, rows[static_cast<std::size_t>(r)].report.rate_a());
    report(max_dev <= 0.10, "AC7a",
           fmt("max |rate(r) - rate(61)| over r>=18: %.3f (rate(61) %.3f)", max_dev, at_one));
    report(min_low - plateau >= 0.10, "AC7b",
           fmt("min rate over r<=9 %.3f vs plateau %.3f (gap %.3f)", min_low, plateau, min_low - plateau));
    report(slowest < 60.0, "AC7t", fmt("slowest point %.2f s", slowest));
  }

  // AC8
  std::string fig5_csv;
  {
    const auto rows = ttt::run_sweep(ttt::SweepKind::Fig5, exact, kGames, kW, kSeed);
    fig5_csv = ttt::sweep_csv(rows, sweep_config(ttt::SweepKind::Fig5));
    bool low_ok = true;
    std::string low;
    for (std::size_t i = 1; i <= 3; ++i) {
      const auto& r = rows[i].report;
      const double se = ttt::pooled_standard_error(r.wins_a, r.wins_b, r.games_total);
      const double margin = r.rate_b() - r.rate_a();
      low_ok = low_ok && margin > 2.0 * se;
      low += fmt(" Cr %.3g: hosvd-svd %.3f vs 2SE %.3f;", rows[i].cr, margin, 2.0 * se);
    }
    report(low_ok, "AC8a", low);

    const auto& top = rows[7].report;
    const bool modal = top.draws > top.wins_a && top.draws > top.wins_b;
    report(modal, "AC8b", fmt("Cr 1.0: svd %.3f, hosvd %.3f, draw %.3f", top.rate_a(), top.rate_b(), top.draw_rate()));

    const auto& zero = rows[0].report;
    const double se0 = ttt::pooled_standard_error(zero.wins_a, zero.wins_b, zero.games_total);
    const double gap = std::abs(zero.rate_a() - zero.rate_b());
    report(gap <= 3.0 * se0, "AC8c", fmt("Cr 0: |svd - hosvd| %.3f vs 3SE %.3f", gap, 3.0 * se0));
  }

  // AC9
  {
    const auto d = ttt::move_distribution(exact, ttt::GameState{}, ttt::PolicyConfig{0.0, ttt::Side::First, 0});
    ttt::Rng rng(kSeed);
    const int n = 100000;
    std::array<int, 10> count{};
    for (int i = 0; i < n; ++i) ++count[static_cast<std::size_t>(ttt::sample_move(d, rng))];
    double chi2 = 0.0;
    for (int c = 1; c <= 9; ++c) chi2 += std::pow(count[static_cast<std::size_t>(c)] - n / 9.0, 2) / (n / 9.0);
    const bool uniform = chi2 < 26.124;  // chi-square, 8 df, p = 0.001

    const std::vector<double> alpha{0.31, -0.72, 0.05, 0.9, -0.15};
    std::vector<double> shifted = alpha;
    for (double& a : shifted) a += 0.4;
    const auto p = ttt::softmax(alpha, kW);
    const auto q = ttt::softmax(shifted, kW);
    double shift_dev = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) shift_dev = std::max(shift_dev, std::abs(p[i] - q[i]));

    ttt::InvalidLookupCounter counter;
    for (std::uint64_t g = 0; g < 1000; ++g) ttt::play_game(exact, exact, kW, ttt::game_seed(kSeed, g), &counter);

    report(uniform && shift_dev < 1e-12 && counter.invalid() == 0, "AC9",
           fmt("chi2 %.2f (< 26.124), shift dev %.3g, invalid lookups %llu of %llu", chi2, shift_dev,
               static_cast<unsigned long long>(counter.invalid()), static_cast<unsigned long long>(counter.total())));
  }

  // AC10
  {
    const auto fig5_again = ttt::sweep_csv(ttt::run_sweep(ttt::SweepKind::Fig5, exact, kGames, kW, kSeed, 1),
                                           sweep_config(ttt::SweepKind::Fig5));
    const auto fig4_again = ttt::sweep_csv(ttt::run_sweep(ttt::SweepKind::Fig4, exact, kGames, kW, kSeed),
                                           sweep_config(ttt::SweepKind::Fig4));
    report(fig5_again == fig5_csv && fig4_again == fig4_csv, "AC10",
           fmt("fig4 %zu bytes, fig5 %zu bytes, repeat identical: %s", fig4_csv.size(), fig5_csv.size(),
               fig5_again == fig5_csv && fig4_again == fig4_csv ? "yes" : "no"));
  }

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
