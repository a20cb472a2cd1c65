#pragma once

// One-ply softmax agent: p_i proportional to exp(w * alpha_i), where alpha_i
// is the evaluation of the board after playing cell i, negated for the second
// player.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ttt/eval_tensor.hpp"
#include "ttt/game.hpp"

namespace ttt {

enum class Side { First, Second };

inline constexpr double kDefaultWeight = 10.0;

struct PolicyConfig {
  double w = kDefaultWeight;
  Side side = Side::First;
  std::uint64_t rng_seed = 0;
};

// Portable stream: mt19937_64, with doubles in [0, 1) built from the top 53
// bits of each output. Identical sequences on every conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

class LookupObserver {
 public:
  virtual ~LookupObserver() = default;
  virtual void on_lookup(StateIndex index) = 0;
};

class InvalidLookupCounter final : public LookupObserver {
 public:
  void on_lookup(StateIndex index) override;
  std::uint64_t total() const { return total_; }
  std::uint64_t invalid() const { return invalid_; }

 private:
  std::uint64_t total_ = 0;
  std::uint64_t invalid_ = 0;
};

struct MoveDistribution {
  std::vector<Cell> cells;      // ascending
  std::vector<double> alpha;    // signed child evaluations
  std::vector<double> probs;
};

// Throws std::invalid_argument if the state is not Ongoing or w is not a
// finite non-negative number.
MoveDistribution move_distribution(const EvalTensor& tensor, const GameState& state,
                                   const PolicyConfig& config, LookupObserver* observer = nullptr);

// Softmax of w * alpha with max subtraction.
std::vector<double> softmax(std::span<const double> alpha, double w);

// Inverse-CDF draw over the cells in ascending order; one uniform per call.
Cell sample_move(const MoveDistribution& dist, Rng& rng);

}  // namespace ttt
