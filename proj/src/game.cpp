#include "ttt/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace ttt {
namespace {

constexpr std::array<std::array<int, 3>, 8> kLines{{
    {0, 1, 2}, {3, 4, 5}, {6, 7, 8},  // rows
    {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // columns
    {0, 4, 8}, {2, 4, 6},             // diagonals
}};

void check_cell(Cell cell) {
  if (cell < 1 || cell > kCells) {
    throw std::invalid_argument("cell out of range 1..9: " + std::to_string(cell));
  }
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Ongoing: return "ongoing";
    case Outcome::FirstWins: return "first_wins";
    case Outcome::SecondWins: return "second_wins";
    case Outcome::Draw: return "draw";
    case Outcome::Invalid: return "invalid";
  }
  return "?";
}

GameState GameState::from_marks(std::span<const int> marks) {
  if (marks.size() != kCells) throw std::invalid_argument("a board has exactly 9 cells");
  GameState s;
  for (std::size_t i = 0; i < kCells; ++i) {
    if (marks[i] < 0 || marks[i] > 2) {
      throw std::invalid_argument("cell value must be 0, 1 or 2");
    }
    s.cells_[i] = static_cast<Mark>(marks[i]);
  }
  return s;
}

GameState GameState::parse(std::string_view board) {
  if (board.size() != kCells) throw std::invalid_argument("board string must have 9 characters");
  std::array<int, kCells> marks{};
  for (std::size_t i = 0; i < kCells; ++i) {
    switch (board[i]) {
      case '.': case '0': case '-': marks[i] = 0; break;
      case 'O': case 'o': case '1': marks[i] = 1; break;
      case 'X': case 'x': case '2': marks[i] = 2; break;
      default: throw std::invalid_argument("bad board character");
    }
  }
  return from_marks(marks);
}

GameState GameState::decode(StateIndex index) {
  if (index.code >= static_cast<std::uint32_t>(kStateCount)) {
    throw std::out_of_range("state code out of range");
  }
  GameState s;
  std::uint32_t c = index.code;
  for (auto& cell : s.cells_) {
    cell = static_cast<Mark>(c % 3);
    c /= 3;
  }
  return s;
}

StateIndex GameState::encode() const {
  std::uint32_t code = 0;
  for (auto it = cells_.rbegin(); it != cells_.rend(); ++it) {
    code = code * 3 + static_cast<std::uint32_t>(*it);
  }
  return StateIndex{code};
}

int GameState::count(Mark m) const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), m));
}

bool GameState::has_line(Mark m) const {
  return std::any_of(kLines.begin(), kLines.end(), [&](const auto& line) {
    return cells_[line[0]] == m && cells_[line[1]] == m && cells_[line[2]] == m;
  });
}

GameState GameState::with(Cell cell, Mark m) const {
  check_cell(cell);
  GameState s = *this;
  s.cells_[static_cast<std::size_t>(cell - 1)] = m;
  return s;
}

std::string GameState::to_string() const {
  std::string out(kCells, '.');
  for (std::size_t i = 0; i < kCells; ++i) {
    if (cells_[i] == Mark::Circle) out[i] = 'O';
    if (cells_[i] == Mark::Cross) out[i] = 'X';
  }
  return out;
}

Outcome classify(const GameState& state) {
  const bool o = state.has_line(Mark::Circle);
  const bool x = state.has_line(Mark::Cross);
  if (o && x) return Outcome::Invalid;
  if (o) return Outcome::FirstWins;
  if (x) return Outcome::SecondWins;
  if (state.count(Mark::Empty) == 0) return Outcome::Draw;
  return Outcome::Ongoing;
}

std::vector<Cell> legal_moves(const GameState& state) {
  std::vector<Cell> moves;
  if (classify(state) != Outcome::Ongoing) return moves;
  for (Cell c = 1; c <= kCells; ++c) {
    if (state.at(c) == Mark::Empty) moves.push_back(c);
  }
  return moves;
}

GameState apply_move(const GameState& state, Cell cell) {
  check_cell(cell);
  if (classify(state) != Outcome::Ongoing) {
    throw std::invalid_argument("cannot move in a finished game");
  }
  if (state.at(cell) != Mark::Empty) {
    throw std::invalid_argument("cell " + std::to_string(cell) + " is occupied");
  }
  return state.with(cell, state.to_move());
}

bool is_valid(const GameState& state) {
  const int n_o = state.count(Mark::Circle);
  const int n_x = state.count(Mark::Cross);
  const int diff = n_o - n_x;
  if (diff != 0 && diff != 1) return false;
  switch (classify(state)) {
    case Outcome::Invalid:
      return false;
    // The winner must have made the last move. With at most five marks any
    // two lines share a cell, so a last move completing both is always legal.
    case Outcome::FirstWins:
      return diff == 1;
    case Outcome::SecondWins:
      return diff == 0;
    default:
      return true;
  }
}

std::vector<StateIndex> enumerate_valid_states() {
  std::vector<bool> seen(kStateCount, false);
  std::vector<GameState> stack{GameState{}};
  seen[0] = true;
  while (!stack.empty()) {
    const GameState s = stack.back();
    stack.pop_back();
    for (Cell c : legal_moves(s)) {
      const GameState next = apply_move(s, c);
      const auto code = next.encode().code;
      if (!seen[code]) {
        seen[code] = true;
        stack.push_back(next);
      }
    }
  }
  std::vector<StateIndex> out;
  out.reserve(kValidStateCount);
  for (std::uint32_t code = 0; code < static_cast<std::uint32_t>(kStateCount); ++code) {
    if (seen[code]) out.push_back(StateIndex{code});
  }
  return out;
}

const std::vector<bool>& valid_state_mask() {
  static const std::vector<bool> mask = [] {
    std::vector<bool> m(kStateCount, false);
    for (StateIndex s : enumerate_valid_states()) m[s.code] = true;
    return m;
  }();
  return mask;
}

const std::array<CellPermutation, 8>& dihedral_symmetries() {
  static const std::array<CellPermutation, 8> syms = [] {
    // Work on (row, col) in 0..2 and map back to 1-based cells.
    auto make = [](auto f) {
      CellPermutation p{};
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          const auto [sr, sc] = f(r, c);
          p[static_cast<std::size_t>(3 * r + c)] = 3 * sr + sc + 1;
        }
      }
      return p;
    };
    using P = std::pair<int, int>;
    return std::array<CellPermutation, 8>{
        make([](int r, int c) { return P{r, c}; }),
        make([](int r, int c) { return P{2 - c, r}; }),
        make([](int r, int c) { return P{2 - r, 2 - c}; }),
        make([](int r, int c) { return P{c, 2 - r}; }),
        make([](int r, int c) { return P{r, 2 - c}; }),
        make([](int r, int c) { return P{2 - r, c}; }),
        make([](int r, int c) { return P{c, r}; }),
        make([](int r, int c) { return P{2 - c, 2 - r}; }),
    };
  }();
  return syms;
}

GameState apply_symmetry(const GameState& state, const CellPermutation& perm) {
  std::array<int, kCells> marks{};
  for (std::size_t k = 0; k < kCells; ++k) {
    marks[k] = static_cast<int>(state.at(perm[k]));
  }
  return GameState::from_marks(marks);
}

}  // namespace ttt
