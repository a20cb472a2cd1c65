#include "ttt/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ttt {

void InvalidLookupCounter::on_lookup(StateIndex index) {
  ++total_;
  if (!valid_state_mask()[index.code]) ++invalid_;
}

std::vector<double> softmax(std::span<const double> alpha, double w) {
  std::vector<double> p(alpha.size());
  if (alpha.empty()) return p;
  const double top = w * *std::max_element(alpha.begin(), alpha.end());
  double total = 0.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    p[i] = std::exp(w * alpha[i] - top);
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

MoveDistribution move_distribution(const EvalTensor& tensor, const GameState& state,
                                   const PolicyConfig& config, LookupObserver* observer) {
  if (!(std::isfinite(config.w) && config.w >= 0.0)) {
    throw std::invalid_argument("softmax weight must be finite and non-negative");
  }
  MoveDistribution d;
  d.cells = legal_moves(state);
  if (d.cells.empty()) throw std::invalid_argument("no move to choose in a finished game");
  const double sign = config.side == Side::First ? 1.0 : -1.0;
  d.alpha.reserve(d.cells.size());
  for (Cell c : d.cells) {
    const StateIndex child = apply_move(state, c).encode();
    if (observer) observer->on_lookup(child);
    d.alpha.push_back(sign * tensor.values[child.code]);
  }
  d.probs = softmax(d.alpha, config.w);
  return d;
}

Cell sample_move(const MoveDistribution& dist, Rng& rng) {
  const double u = rng.next_unit();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < dist.cells.size(); ++i) {
    cumulative += dist.probs[i];
    if (u < cumulative) return dist.cells[i];
  }
  // Rounding can leave the cumulative sum just under 1.
  for (std::size_t i = dist.cells.size(); i-- > 0;) {
    if (dist.probs[i] > 0.0) return dist.cells[i];
  }
  return dist.cells.back();
}

}  // namespace ttt
