#pragma once

// Seeded self-play between two evaluation tensors.
//
// Game g of a match draws its moves from Rng(game_seed(master, g)), where
//
//   game_seed(master, g) = splitmix64(master + (g + 1) * 0x9E3779B97F4A7C15)
//
// so any game can be replayed on its own and the report does not depend on
// how games are scheduled across threads. The first half of a match has A
// moving first, the second half B.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ttt/eval_tensor.hpp"
#include "ttt/game.hpp"
#include "ttt/policy.hpp"

namespace ttt {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t game_seed(std::uint64_t master_seed, std::uint64_t game_index);

struct GameRecord {
  Outcome outcome = Outcome::Ongoing;
  std::vector<Cell> moves;
};

GameRecord play_game_record(const EvalTensor& first, const EvalTensor& second, double w,
                            std::uint64_t seed, LookupObserver* observer = nullptr);

inline Outcome play_game(const EvalTensor& first, const EvalTensor& second, double w,
                         std::uint64_t seed, LookupObserver* observer = nullptr) {
  return play_game_record(first, second, w, seed, observer).outcome;
}

struct SideTally {
  int wins_a = 0;
  int wins_b = 0;
  int draws = 0;
  int games() const { return wins_a + wins_b + draws; }
  friend bool operator==(const SideTally&, const SideTally&) = default;
};

struct MatchReport {
  int games_total = 0;
  int wins_a = 0;
  int wins_b = 0;
  int draws = 0;
  SideTally a_first;
  SideTally a_second;
  std::uint64_t seed = 0;
  double w = kDefaultWeight;
  std::string label_a;
  std::string label_b;

  // Rates use all games, draws included, so they sum to 1.
  double rate_a() const { return static_cast<double>(wins_a) / games_total; }
  double rate_b() const { return static_cast<double>(wins_b) / games_total; }
  double draw_rate() const { return static_cast<double>(draws) / games_total; }

  friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

// 95% Wilson score interval half-width for k successes out of n.
double wilson_halfwidth(int successes, int trials, double z = 1.96);

// Standard error of a difference of two win rates under the pooled two-proportion model.
double pooled_standard_error(int wins_a, int wins_b, int games);

// Throws std::invalid_argument for an odd or non-positive game count.
// threads == 0 uses the hardware concurrency.
MatchReport run_match(const EvalTensor& a, const EvalTensor& b, int games, double w,
                      std::uint64_t seed, unsigned threads = 0);

struct SweepPoint {
  std::shared_ptr<const EvalTensor> a;
  std::shared_ptr<const EvalTensor> b;
  double cr = 0.0;
  int r_svd = -1;    // -1: side not present
  int r_hosvd = -1;
  double rel_error_a = 0.0;
  double rel_error_b = 0.0;
};

struct SweepRow {
  double cr = 0.0;
  int r_svd = -1;
  int r_hosvd = -1;
  double rel_error_a = 0.0;
  double rel_error_b = 0.0;
  MatchReport report;
};

// Every point is played with the same master seed.
std::vector<SweepRow> sweep(std::span<const SweepPoint> points, int games, double w,
                            std::uint64_t seed, unsigned threads = 0);

}  // namespace ttt
