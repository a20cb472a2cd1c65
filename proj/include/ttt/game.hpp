#pragma once

// Tic-Tac-Toe rules and the base-3 state codec.
//
// Cells are numbered 1..9 row by row from the top-left corner:
//
//   1 2 3
//   4 5 6
//   7 8 9
//
// A state's code is sum_i c_i * 3^(i-1), cell 1 being the least significant
// digit. Every one of the 3^9 codes decodes to a GameState, including boards
// that can never arise in play.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ttt {

inline constexpr int kCells = 9;
inline constexpr int kStateCount = 19683;  // 3^9
inline constexpr int kValidStateCount = 5478;

using Cell = int;  // 1..9

enum class Mark : std::uint8_t { Empty = 0, Circle = 1, Cross = 2 };

enum class Outcome { Ongoing, FirstWins, SecondWins, Draw, Invalid };

std::string_view to_string(Outcome o);

struct StateIndex {
  std::uint32_t code = 0;
  friend constexpr bool operator==(StateIndex, StateIndex) = default;
  friend constexpr auto operator<=>(StateIndex, StateIndex) = default;
};

class GameState {
 public:
  GameState() = default;

  // Marks in cell order 1..9. Values must be 0, 1 or 2.
  static GameState from_marks(std::span<const int> marks);
  // Nine characters from {'.', 'O', 'X'} (also '0', '1', '2'), cell 1 first.
  static GameState parse(std::string_view board);
  static GameState decode(StateIndex index);

  Mark at(Cell cell) const { return cells_.at(static_cast<std::size_t>(cell - 1)); }
  StateIndex encode() const;

  int count(Mark m) const;
  int moves_played() const { return kCells - count(Mark::Empty); }
  // The mark the next move would place: circle after an even number of moves.
  Mark to_move() const { return moves_played() % 2 == 0 ? Mark::Circle : Mark::Cross; }
  bool has_line(Mark m) const;

  GameState with(Cell cell, Mark m) const;

  std::string to_string() const;

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  std::array<Mark, kCells> cells_{};
};

// Line-based classification. Reports Invalid only when both marks hold a line;
// parity is the concern of is_valid().
Outcome classify(const GameState& state);

// Empty cells in ascending order; empty for a terminal (or invalid) state.
std::vector<Cell> legal_moves(const GameState& state);

// Places the mark of the side to move. Throws std::invalid_argument for an
// occupied or out-of-range cell, or when the state is not Ongoing.
GameState apply_move(const GameState& state, Cell cell);

// True iff the state can arise from the empty board by alternating legal play
// that stops at the first completed line or a full board.
bool is_valid(const GameState& state);

// Reachable states in ascending code order; exactly kValidStateCount entries.
std::vector<StateIndex> enumerate_valid_states();

// Indexed by code. Computed once.
const std::vector<bool>& valid_state_mask();

// The 8 symmetries of the square as cell permutations: result cell k holds the
// mark from source cell perm[k-1].
using CellPermutation = std::array<Cell, kCells>;
const std::array<CellPermutation, 8>& dihedral_symmetries();
GameState apply_symmetry(const GameState& state, const CellPermutation& perm);

}  // namespace ttt
