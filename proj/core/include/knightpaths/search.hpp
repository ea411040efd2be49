#pragma once

#include <optional>
#include <span>
#include <vector>

#include "knightpaths/geometry.hpp"

namespace knightpaths {

/// Packed visited masks in the search kernels cover 13*13 = 169 cells.
inline constexpr int kMaxBoardSize = 13;
/// Longest supported cycle; half paths then hold at most 7 vertices.
inline constexpr int kMaxCycleLength = 12;

/// A walk of distinct cells joined by knight moves; k moves = k+1 vertices.
struct Path {
  std::vector<Cell> cells;

  friend auto operator<=>(const Path&, const Path&) = default;
};

/// An ordered vertex list read cyclically. Enumerators emit cycles in
/// canonical rotation (see canonical_rotation), so equal cycles compare equal.
struct Cycle {
  std::vector<Cell> cells;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

bool is_simple_knight_path(std::span<const Cell> cells);

/// True iff the cells are distinct and every consecutive pair, including the
/// wrap-around pair, is a knight move.
bool is_closed_knight_cycle(std::span<const Cell> cells);

/// The least of the 2n traversals (n rotations x 2 directions) of the cycle:
/// it starts at the smallest cell and continues toward its smaller neighbour.
/// Throws when the cells are not distinct or fewer than three.
Cycle canonical_rotation(std::span<const Cell> cycle);

struct SearchConfig {
  int length = 0;
  BoardSpec board{};
  int worker_count = 1;

  /// Config for the default board of side length + 1, single worker.
  static SearchConfig for_length(int length);

  /// Throws std::invalid_argument on out-of-range fields. Odd lengths are
  /// accepted; they enumerate to the empty set.
  void validate() const;
};

/// Every simple knight path from `a` to `b` of exactly `k` moves, in
/// lexicographic order of the vertex sequence. Empty when none exist.
/// Throws when a == b, an endpoint is off the board, or k < 1.
std::vector<Path> enumerate_half_paths(Cell a, Cell b, int k,
                                       const BoardSpec& board);

/// Joins two paths sharing both endpoints into the cycle that walks p1
/// forward and p2 backward, dropping the duplicated endpoints. Returns
/// nothing when the path interiors intersect. Throws on mismatched endpoints
/// or move counts, non-simple inputs, or single-move paths.
std::optional<Cycle> join_paths(const Path& p1, const Path& p2);

/// Meet-in-the-middle enumeration: for each unordered cell pair, all
/// half paths of length/2 moves are joined pairwise; the merged result is
/// deduplicated. Returns each cycle once, in canonical rotation, sorted.
std::vector<Cycle> enumerate_cycles_mitm(const SearchConfig& cfg);

/// Straight depth-first enumeration, the independent cross-check for
/// enumerate_cycles_mitm: cycles are anchored at their smallest cell, extended
/// through larger cells only, and emitted in the direction whose second cell
/// is smaller. Returns the same sorted set.
std::vector<Cycle> enumerate_cycles_dfs(const SearchConfig& cfg);

/// Number of schedulable work units (board cells). For the meet-in-the-middle
/// search, unit u covers every endpoint pair whose smaller endpoint is cell u;
/// for the depth-first search, unit u anchors cycles at cell u. The union of
/// all units is the full cycle set, so unit lists support budgeted runs.
int search_unit_count(const SearchConfig& cfg);

std::vector<Cycle> run_mitm_units(const SearchConfig& cfg,
                                  std::span<const int> units);
std::vector<Cycle> run_dfs_units(const SearchConfig& cfg,
                                 std::span<const int> units);

void sort_unique_cycles(std::vector<Cycle>& cycles);

}  // namespace knightpaths
