#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace knightpaths {

/// Zero-based board coordinate. Row 0 is the top row, column 0 the left column.
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Square board of side `size`.
struct BoardSpec {
  int size = 0;

  /// Throws std::invalid_argument when size < 3.
  void validate() const;

  friend constexpr bool operator==(const BoardSpec&, const BoardSpec&) = default;
};

/// Bounding rectangle of a translation-normalized cell set.
struct Frame {
  int width = 0;
  int height = 0;

  friend constexpr auto operator<=>(const Frame&, const Frame&) = default;
};

/// One of the eight symmetries of the square: an optional reflection across
/// the vertical axis followed by 0..3 clockwise quarter turns.
struct Transform {
  int quarter_turns = 0;
  bool reflected = false;

  friend constexpr bool operator==(const Transform&, const Transform&) = default;
};

/// The eight square symmetries in a fixed order: the four rotations, then the
/// four reflected variants.
const std::array<Transform, 8>& all_transforms();

/// A set of distinct cells with non-negative coordinates, kept sorted by
/// (row, col).
class Combination {
 public:
  Combination() = default;
  /// Sorts the input; throws std::invalid_argument on duplicate cells or
  /// negative coordinates.
  explicit Combination(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  friend auto operator<=>(const Combination&, const Combination&) = default;

 private:
  std::vector<Cell> cells_;
};

bool on_board(Cell c, const BoardSpec& board);

/// All knight moves from `c` that stay on `board`, sorted by (row, col).
/// Throws when `c` is off the board.
std::vector<Cell> knight_moves(Cell c, const BoardSpec& board);

/// True iff the displacement between the cells is (+-1,+-2) or (+-2,+-1).
bool is_knight_move(Cell a, Cell b);

/// Frame of the image of `f` under `t`: width and height swap on odd turns.
Frame transformed_frame(const Transform& t, const Frame& f);

/// Image of one cell of frame `f` under `t`. Reflection maps (r,c) to
/// (r, width-1-c); a clockwise quarter turn maps (r,c) to (c, height-1-r);
/// the reflection is applied first. Throws when the cell lies outside `f`.
Cell transform_cell(const Transform& t, Cell c, const Frame& f);

/// Image of a cell set under `t` acting within frame `f`, re-sorted.
Combination apply_transform(const Transform& t, const Combination& cells,
                            const Frame& f);

/// Slides the set so its minimum row and minimum column become zero.
/// Throws on empty input.
Combination normalize_translation(std::span<const Cell> cells);
Combination normalize_translation(const Combination& cells);

/// Bounding frame of a normalized set: width = 1 + max column,
/// height = 1 + max row. Throws when the set is empty or not normalized.
Frame frame_of(const Combination& cells);

inline constexpr int kLottoGridSize = 7;
inline constexpr int kLottoMax = kLottoGridSize * kLottoGridSize;

/// Maps cells of the 7x7 lotto grid to their printed numbers, 7*row + col + 1,
/// ascending. Throws when a cell lies outside the grid.
std::vector<int> to_lotto(const Combination& cells);

/// Inverse of to_lotto. Throws on numbers outside 1..49 or duplicates.
Combination from_lotto(std::span<const int> numbers);

}  // namespace knightpaths
