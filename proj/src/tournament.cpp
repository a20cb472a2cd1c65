#include "ttt/tournament.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ttt {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t game_seed(std::uint64_t master_seed, std::uint64_t game_index) {
  return splitmix64(master_seed + (game_index + 1) * 0x9E3779B97F4A7C15ULL);
}

GameRecord play_game_record(const EvalTensor& first, const EvalTensor& second, double w,
                            std::uint64_t seed, LookupObserver* observer) {
  Rng rng(seed);
  GameState state;
  GameRecord rec;
  while ((rec.outcome = classify(state)) == Outcome::Ongoing) {
    const bool first_to_move = state.to_move() == Mark::Circle;
    const PolicyConfig config{w, first_to_move ? Side::First : Side::Second, seed};
    const auto dist = move_distribution(first_to_move ? first : second, state, config, observer);
    const Cell c = sample_move(dist, rng);
    rec.moves.push_back(c);
    state = apply_move(state, c);
  }
  return rec;
}

double wilson_halfwidth(int successes, int trials, double z) {
  if (trials <= 0) return 0.0;
  const double n = trials;
  const double p = successes / n;
  const double z2 = z * z;
  return z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
}

double pooled_standard_error(int wins_a, int wins_b, int games) {
  if (games <= 0) return 0.0;
  const double pooled = static_cast<double>(wins_a + wins_b) / (2.0 * games);
  return std::sqrt(pooled * (1.0 - pooled) * 2.0 / games);
}

MatchReport run_match(const EvalTensor& a, const EvalTensor& b, int games, double w,
                      std::uint64_t seed, unsigned threads) {
  if (games <= 0 || games % 2 != 0) {
    throw std::invalid_argument("a match needs a positive, even number of games");
  }
  const int half = games / 2;
  std::vector<Outcome> outcomes(static_cast<std::size_t>(games));
  auto play_range = [&](int begin, int stride) {
    for (int g = begin; g < games; g += stride) {
      const bool a_first = g < half;
      outcomes[static_cast<std::size_t>(g)] =
          play_game(a_first ? a : b, a_first ? b : a, w, game_seed(seed, static_cast<std::uint64_t>(g)));
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(games));
  if (threads <= 1) {
    play_range(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(play_range, static_cast<int>(t), static_cast<int>(threads));
    }
  }

  MatchReport r;
  r.games_total = games;
  r.seed = seed;
  r.w = w;
  r.label_a = a.meta.label();
  r.label_b = b.meta.label();
  for (int g = 0; g < games; ++g) {
    const bool a_first = g < half;
    SideTally& tally = a_first ? r.a_first : r.a_second;
    switch (outcomes[static_cast<std::size_t>(g)]) {
      case Outcome::FirstWins: (a_first ? tally.wins_a : tally.wins_b)++; break;
      case Outcome::SecondWins: (a_first ? tally.wins_b : tally.wins_a)++; break;
      case Outcome::Draw: tally.draws++; break;
      default: throw std::logic_error("game ended without a terminal outcome");
    }
  }
  r.wins_a = r.a_first.wins_a + r.a_second.wins_a;
  r.wins_b = r.a_first.wins_b + r.a_second.wins_b;
  r.draws = r.a_first.draws + r.a_second.draws;
  return r;
}

std::vector<SweepRow> sweep(std::span<const SweepPoint> points, int games, double w,
                            std::uint64_t seed, unsigned threads) {
  std::vector<SweepRow> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (!p.a || !p.b) throw std::invalid_argument("sweep point is missing a tensor");
    rows.push_back(SweepRow{p.cr, p.r_svd, p.r_hosvd, p.rel_error_a, p.rel_error_b,
                            run_match(*p.a, *p.b, games, w, seed, threads)});
  }
  return rows;
}

}  // namespace ttt
