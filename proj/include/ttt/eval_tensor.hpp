#pragma once

// The evaluation function as a dense 3^9 array indexed by StateIndex.

#include <span>
#include <string>
#include <vector>

#include "ttt/game.hpp"

namespace ttt {

enum class Method : std::uint8_t { Exact = 0, Svd = 1, Hosvd = 2 };

std::string_view to_string(Method m);
Method parse_method(std::string_view name);

struct Provenance {
  Method method = Method::Exact;
  int rank = 0;  // unused for Exact
  std::string label() const;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct EvalTensor {
  std::vector<double> values = std::vector<double>(kStateCount, 0.0);
  Provenance meta{};

  std::span<const double> view() const { return values; }
  static EvalTensor zeros(Provenance meta = {}) { return EvalTensor{std::vector<double>(kStateCount, 0.0), meta}; }
};

// Perfect evaluation under uniformly random play for both sides. Terminal
// states hold +1 / -1 / 0, every other reachable state the mean of its
// children, and every unreachable code 0.
EvalTensor build_exact();

inline double lookup(const EvalTensor& tensor, const GameState& state) {
  return tensor.values[state.encode().code];
}

}  // namespace ttt
