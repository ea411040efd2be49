#include "knightpaths/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace knightpaths {

namespace {

// Sorted by (dr, dc) so that images of a fixed cell come out sorted too.
constexpr std::array<std::pair<int, int>, 8> kKnightOffsets = {{
    {-2, -1}, {-2, 1}, {-1, -2}, {-1, 2}, {1, -2}, {1, 2}, {2, -1}, {2, 1}}};

std::string cell_text(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

void check_transform(const Transform& t) {
  if (t.quarter_turns < 0 || t.quarter_turns > 3)
    throw std::invalid_argument("transform quarter_turns must be in 0..3, got " +
                                std::to_string(t.quarter_turns));
}

}  // namespace

void BoardSpec::validate() const {
  if (size < 3)
    throw std::invalid_argument("board size must be at least 3, got " +
                                std::to_string(size));
}

const std::array<Transform, 8>& all_transforms() {
  static const std::array<Transform, 8> transforms = {{{0, false},
                                                       {1, false},
                                                       {2, false},
                                                       {3, false},
                                                       {0, true},
                                                       {1, true},
                                                       {2, true},
                                                       {3, true}}};
  return transforms;
}

Combination::Combination(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
    throw std::invalid_argument("combination cells must be distinct");
  for (const Cell& c : cells_)
    if (c.row < 0 || c.col < 0)
      throw std::invalid_argument("combination cell " + cell_text(c) +
                                  " has a negative coordinate");
}

bool on_board(Cell c, const BoardSpec& board) {
  return c.row >= 0 && c.col >= 0 && c.row < board.size && c.col < board.size;
}

std::vector<Cell> knight_moves(Cell c, const BoardSpec& board) {
  board.validate();
  if (!on_board(c, board))
    throw std::invalid_argument("cell " + cell_text(c) + " is off the " +
                                std::to_string(board.size) + "x" +
                                std::to_string(board.size) + " board");
  std::vector<Cell> moves;
  moves.reserve(8);
  for (const auto& [dr, dc] : kKnightOffsets) {
    Cell m{c.row + dr, c.col + dc};
    if (on_board(m, board)) moves.push_back(m);
  }
  return moves;
}

bool is_knight_move(Cell a, Cell b) {
  const int dr = std::abs(a.row - b.row);
  const int dc = std::abs(a.col - b.col);
  return (dr == 1 && dc == 2) || (dr == 2 && dc == 1);
}

Frame transformed_frame(const Transform& t, const Frame& f) {
  check_transform(t);
  if (t.quarter_turns % 2 == 1) return Frame{f.height, f.width};
  return f;
}

Cell transform_cell(const Transform& t, Cell c, const Frame& f) {
  check_transform(t);
  if (c.row < 0 || c.col < 0 || c.row >= f.height || c.col >= f.width)
    throw std::invalid_argument("cell " + cell_text(c) + " lies outside the " +
                                std::to_string(f.width) + "x" +
                                std::to_string(f.height) + " frame");
  int width = f.width;
  int height = f.height;
  if (t.reflected) c = Cell{c.row, width - 1 - c.col};
  for (int i = 0; i < t.quarter_turns; ++i) {
    c = Cell{c.col, height - 1 - c.row};
    std::swap(width, height);
  }
  return c;
}

Combination apply_transform(const Transform& t, const Combination& cells,
                            const Frame& f) {
  std::vector<Cell> image;
  image.reserve(cells.size());
  for (const Cell& c : cells) image.push_back(transform_cell(t, c, f));
  return Combination(std::move(image));
}

Combination normalize_translation(std::span<const Cell> cells) {
  if (cells.empty())
    throw std::invalid_argument("cannot normalize an empty cell set");
  int min_row = cells[0].row;
  int min_col = cells[0].col;
  for (const Cell& c : cells) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  std::vector<Cell> shifted;
  shifted.reserve(cells.size());
  for (const Cell& c : cells)
    shifted.push_back(Cell{c.row - min_row, c.col - min_col});
  return Combination(std::move(shifted));
}

Combination normalize_translation(const Combination& cells) {
  return normalize_translation(std::span<const Cell>(cells.cells()));
}

Frame frame_of(const Combination& cells) {
  if (cells.empty())
    throw std::invalid_argument("cannot frame an empty cell set");
  int min_row = cells.cells().front().row;
  int min_col = cells.cells().front().col;
  int max_row = min_row;
  int max_col = min_col;
  for (const Cell& c : cells) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
    max_row = std::max(max_row, c.row);
    max_col = std::max(max_col, c.col);
  }
  if (min_row != 0 || min_col != 0)
    throw std::invalid_argument(
        "frame_of expects a normalized set (minimum row and column 0)");
  return Frame{max_col + 1, max_row + 1};
}

std::vector<int> to_lotto(const Combination& cells) {
  std::vector<int> numbers;
  numbers.reserve(cells.size());
  for (const Cell& c : cells) {
    if (c.row >= kLottoGridSize || c.col >= kLottoGridSize)
      throw std::invalid_argument("cell " + cell_text(c) +
                                  " lies outside the 7x7 lotto grid");
    numbers.push_back(kLottoGridSize * c.row + c.col + 1);
  }
  return numbers;
}

Combination from_lotto(std::span<const int> numbers) {
  std::array<bool, kLottoMax + 1> seen{};
  std::vector<Cell> cells;
  cells.reserve(numbers.size());
  for (int n : numbers) {
    if (n < 1 || n > kLottoMax)
      throw std::invalid_argument("lotto number " + std::to_string(n) +
                                  " is outside 1..49");
    if (seen[n])
      throw std::invalid_argument("duplicate lotto number " + std::to_string(n));
    seen[n] = true;
    cells.push_back(Cell{(n - 1) / kLottoGridSize, (n - 1) % kLottoGridSize});
  }
  return Combination(std::move(cells));
}

}  // namespace knightpaths
