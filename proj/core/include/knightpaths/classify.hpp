#pragma once

#include <optional>
#include <span>
#include <vector>

#include "knightpaths/search.hpp"

namespace knightpaths {

/// Translation-normalized cell set that is lexicographically least among the
/// eight square-symmetry images; equal keys define equivalence classes.
using CanonicalKey = Combination;

/// Vertex sequence identifying a placed cycle independently of its starting
/// square and direction.
using CycleKey = std::vector<Cell>;

enum class CountingMode {
  combination,  // count distinct visited-cell sets
  cycle,        // count distinct closed traversals
};

/// Canonical form of a cell set under translation + square symmetry.
/// Throws on empty input.
CanonicalKey canonical_form(const Combination& cells);

CycleKey cycle_key(const Cycle& cycle);

/// Class key of a cycle under translation + square symmetry: the least
/// normalized vertex sequence over all transforms, rotations and reversal.
CycleKey canonical_cycle_form(const Cycle& cycle);

/// Bounding frame reported with width >= height, so congruent frames (equal
/// up to the quarter-turn swap) land in one bucket. A necessary condition
/// for equivalence, used as a pre-filter. Expects a normalized set.
Frame frame_bucket(const Combination& normalized_cells);

struct EquivalenceClass {
  CanonicalKey key;
  /// Canonical traversal; only set in cycle mode.
  CycleKey cycle_form;
  /// Lexicographically least placement of the class on the reference board.
  Combination representative;
  /// Frame bucket of the key (width >= height).
  Frame frame;
  /// Distinct placements (translations x transforms) fitting the board.
  long member_count_on_board = 0;

  friend bool operator==(const EquivalenceClass&,
                         const EquivalenceClass&) = default;
};

struct ClassifyOptions {
  CountingMode mode = CountingMode::combination;
  /// The frame pre-filter is an optimization layer only; results are
  /// identical with it disabled.
  bool use_frame_buckets = true;
};

/// Groups cycles into equivalence classes, sorted by representative (which
/// matches lotto-tuple order on boards that fit the 7x7 grid). Every input
/// cycle must be a valid closed knight cycle on the given board.
std::vector<EquivalenceClass> classify(std::span<const Cycle> cycles,
                                       const BoardSpec& board,
                                       const ClassifyOptions& options = {});

struct CombinationCheck {
  bool traversable = false;
  /// 1-based position in the length-6 catalog; 0 when not traversable.
  int class_id = 0;
  std::optional<EquivalenceClass> cls;
};

/// Decides whether the six lotto numbers can be traversed by a closed knight
/// path (brute force over the 60 distinct cyclic orders) and, if so, returns
/// their class from the length-6 catalog. Throws unless given exactly six
/// distinct numbers in 1..49.
CombinationCheck check_combination(std::span<const int> numbers);

/// Combination-mode classes of all length-6 cycles on the 7x7 board,
/// computed once and cached.
const std::vector<EquivalenceClass>& length6_catalog();

}  // namespace knightpaths
