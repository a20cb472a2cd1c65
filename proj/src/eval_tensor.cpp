#include "ttt/eval_tensor.hpp"

#include <stdexcept>

namespace ttt {
namespace {

class ExactBuilder {
 public:
  EvalTensor run() {
    evaluate(GameState{});
    return EvalTensor{std::move(values_), Provenance{Method::Exact, 0}};
  }

 private:
  double evaluate(const GameState& s) {
    const auto code = s.encode().code;
    if (done_[code]) return values_[code];
    double v = 0.0;
    switch (classify(s)) {
      case Outcome::FirstWins: v = 1.0; break;
      case Outcome::SecondWins: v = -1.0; break;
      case Outcome::Draw: v = 0.0; break;
      case Outcome::Ongoing: {
        const auto moves = legal_moves(s);
        double sum = 0.0;
        for (Cell c : moves) sum += evaluate(apply_move(s, c));
        v = sum / static_cast<double>(moves.size());
        break;
      }
      case Outcome::Invalid:
        throw std::logic_error("reached an invalid state from the empty board");
    }
    done_[code] = true;
    values_[code] = v;
    return v;
  }

  std::vector<double> values_ = std::vector<double>(kStateCount, 0.0);
  std::vector<bool> done_ = std::vector<bool>(kStateCount, false);
};

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::Svd: return "svd";
    case Method::Hosvd: return "hosvd";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "exact") return Method::Exact;
  if (name == "svd") return Method::Svd;
  if (name == "hosvd") return Method::Hosvd;
  throw std::invalid_argument("unknown method: " + std::string(name));
}

std::string Provenance::label() const {
  if (method == Method::Exact) return "exact";
  return std::string(to_string(method)) + "(" + std::to_string(rank) + ")";
}

EvalTensor build_exact() { return ExactBuilder{}.run(); }

}  // namespace ttt
