#include "knightpaths/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace knightpaths {

namespace {

constexpr int kMaxCells = kMaxBoardSize * kMaxBoardSize;
constexpr int kMaxHalfVertices = kMaxCycleLength / 2 + 1;

struct CellMask {
  std::array<std::uint64_t, 3> words{};

  void set(int i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear(int i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }

  /// True iff the intersection with `other` is exactly `expected`.
  bool intersection_equals(const CellMask& other,
                           const CellMask& expected) const {
    return (words[0] & other.words[0]) == expected.words[0] &&
           (words[1] & other.words[1]) == expected.words[1] &&
           (words[2] & other.words[2]) == expected.words[2];
  }
};

struct MoveTable {
  int size = 0;
  // moves[i]: knight neighbours of cell i as indices, ascending.
  std::vector<std::vector<std::uint8_t>> moves;

  explicit MoveTable(const BoardSpec& board) : size(board.size) {
    const int cells = size * size;
    moves.resize(cells);
    for (int i = 0; i < cells; ++i) {
      for (const Cell& m : knight_moves(Cell{i / size, i % size}, board))
        moves[i].push_back(static_cast<std::uint8_t>(m.row * size + m.col));
    }
  }
};

Cell cell_of(int index, int size) { return Cell{index / size, index % size}; }

void validate_units(std::span<const int> units, int unit_count) {
  for (int u : units)
    if (u < 0 || u >= unit_count)
      throw std::invalid_argument("search unit " + std::to_string(u) +
                                  " is out of range (0.." +
                                  std::to_string(unit_count - 1) + ")");
}

// All simple k-move paths starting at `start`, bucketed by their final cell.
// Only paths ending on a cell with a larger index than `start` are kept, so
// each unordered endpoint pair is handled by exactly one unit.
struct HalfPath {
  CellMask mask;
  std::array<std::uint8_t, kMaxHalfVertices> cells;
};

void collect_half_paths(const MoveTable& table, int start, int k,
                        std::vector<std::vector<HalfPath>>& buckets) {
  std::array<std::uint8_t, kMaxHalfVertices> path{};
  path[0] = static_cast<std::uint8_t>(start);
  CellMask mask;
  mask.set(start);

  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      const int end = path[k];
      if (end > start) buckets[end].push_back(HalfPath{mask, path});
      return;
    }
    for (std::uint8_t next : table.moves[path[depth]]) {
      if (mask.test(next)) continue;
      path[depth + 1] = next;
      mask.set(next);
      self(self, depth + 1);
      mask.clear(next);
    }
  };
  dfs(dfs, 0);
}

void mitm_unit(const MoveTable& table, int length, int start,
               std::vector<Cycle>& out) {
  const int k = length / 2;
  const int cells = table.size * table.size;
  std::vector<std::vector<HalfPath>> buckets(cells);
  collect_half_paths(table, start, k, buckets);

  std::vector<Cell> vertices(length);
  for (int end = start + 1; end < cells; ++end) {
    const auto& paths = buckets[end];
    if (paths.size() < 2) continue;
    CellMask endpoints;
    endpoints.set(start);
    endpoints.set(end);
    for (std::size_t i = 0; i + 1 < paths.size(); ++i) {
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        if (!paths[i].mask.intersection_equals(paths[j].mask, endpoints))
          continue;
        for (int t = 0; t <= k; ++t)
          vertices[t] = cell_of(paths[i].cells[t], table.size);
        for (int t = k - 1; t >= 1; --t)
          vertices[2 * k - t] = cell_of(paths[j].cells[t], table.size);
        out.push_back(canonical_rotation(vertices));
      }
    }
  }
}

// Breadth-first knight distances from `target` over the whole board; a lower
// bound for the moves still needed to close a cycle.
std::vector<int> knight_distances(const MoveTable& table, int target) {
  const int cells = table.size * table.size;
  std::vector<int> dist(cells, std::numeric_limits<int>::max());
  std::vector<int> frontier{target};
  dist[target] = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int c : frontier) {
      for (std::uint8_t m : table.moves[c]) {
        if (dist[m] != std::numeric_limits<int>::max()) continue;
        dist[m] = dist[c] + 1;
        next.push_back(m);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

void dfs_unit(const MoveTable& table, int length, int anchor,
              std::vector<Cycle>& out) {
  const std::vector<int> dist = knight_distances(table, anchor);
  std::array<std::uint8_t, kMaxCycleLength> path{};
  path[0] = static_cast<std::uint8_t>(anchor);
  CellMask visited;
  visited.set(anchor);

  auto emit = [&]() {
    std::vector<Cell> vertices(length);
    for (int i = 0; i < length; ++i)
      vertices[i] = cell_of(path[i], table.size);
    out.push_back(Cycle{std::move(vertices)});
  };

  // depth = moves made so far; path[depth] is the current cell.
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == length - 1) {
      if (dist[path[depth]] == 1 && path[1] < path[length - 1]) emit();
      return;
    }
    const int remaining = length - depth - 1;
    for (std::uint8_t next : table.moves[path[depth]]) {
      if (next <= anchor || visited.test(next)) continue;
      // Any walk from `next` back to the anchor has the parity of its
      // knight distance, so both bounds below are exact filters.
      if (dist[next] > remaining || ((remaining - dist[next]) & 1)) continue;
      path[depth + 1] = next;
      visited.set(next);
      self(self, depth + 1);
      visited.clear(next);
    }
  };
  dfs(dfs, 0);
}

template <typename UnitFn>
std::vector<Cycle> run_units(const SearchConfig& cfg,
                             std::span<const int> units, UnitFn unit_fn) {
  cfg.validate();
  validate_units(units, search_unit_count(cfg));
  const MoveTable table(cfg.board);

  const int workers =
      std::min<int>(cfg.worker_count, static_cast<int>(units.size()));
  std::vector<Cycle> merged;
  if (workers <= 1) {
    for (int u : units) unit_fn(table, cfg.length, u, merged);
  } else {
    std::vector<std::vector<Cycle>> locals(workers);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = next.fetch_add(1); i < units.size();
             i = next.fetch_add(1))
          unit_fn(table, cfg.length, units[i], locals[w]);
      });
    }
    for (auto& t : threads) t.join();
    std::size_t total = 0;
    for (const auto& l : locals) total += l.size();
    merged.reserve(total);
    for (auto& l : locals)
      merged.insert(merged.end(), std::make_move_iterator(l.begin()),
                    std::make_move_iterator(l.end()));
  }
  sort_unique_cycles(merged);
  return merged;
}

}  // namespace

bool is_simple_knight_path(std::span<const Cell> cells) {
  if (cells.size() < 2) return false;
  std::vector<Cell> sorted(cells.begin(), cells.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i)
    if (!is_knight_move(cells[i], cells[i + 1])) return false;
  return true;
}

bool is_closed_knight_cycle(std::span<const Cell> cells) {
  if (cells.size() < 3) return false;
  if (!is_simple_knight_path(cells)) return false;
  return is_knight_move(cells.back(), cells.front());
}

Cycle canonical_rotation(std::span<const Cell> cycle) {
  const std::size_t n = cycle.size();
  if (n < 3)
    throw std::invalid_argument("a cycle needs at least three cells");
  std::vector<Cell> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle cells must be distinct");

  const std::size_t m =
      std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
  std::vector<Cell> forward(n);
  std::vector<Cell> backward(n);
  for (std::size_t i = 0; i < n; ++i) {
    forward[i] = cycle[(m + i) % n];
    backward[i] = cycle[(m + n - i) % n];
  }
  return Cycle{std::min(forward, backward)};
}

SearchConfig SearchConfig::for_length(int length) {
  return SearchConfig{length, BoardSpec{length + 1}, 1};
}

void SearchConfig::validate() const {
  if (length < 3)
    throw std::invalid_argument("cycle length must be at least 3, got " +
                                std::to_string(length));
  if (length > kMaxCycleLength)
    throw std::invalid_argument("cycle length above " +
                                std::to_string(kMaxCycleLength) +
                                " is not supported");
  board.validate();
  if (board.size > kMaxBoardSize)
    throw std::invalid_argument("board size above " +
                                std::to_string(kMaxBoardSize) +
                                " is not supported");
  if (worker_count < 1)
    throw std::invalid_argument("worker count must be at least 1");
  if (worker_count > 256)
    throw std::invalid_argument("worker count above 256 is not supported");
}

std::vector<Path> enumerate_half_paths(Cell a, Cell b, int k,
                                       const BoardSpec& board) {
  board.validate();
  if (board.size > kMaxBoardSize)
    throw std::invalid_argument("board size above " +
                                std::to_string(kMaxBoardSize) +
                                " is not supported");
  if (!on_board(a, board) || !on_board(b, board))
    throw std::invalid_argument("half-path endpoints must lie on the board");
  if (a == b)
    throw std::invalid_argument(
        "half-path endpoints must differ: coinciding endpoints cannot join "
        "into a simple cycle");
  if (k < 1)
    throw std::invalid_argument("half-path move count must be at least 1");
  if (k > kMaxCycleLength / 2)
    throw std::invalid_argument("half-path move count above " +
                                std::to_string(kMaxCycleLength / 2) +
                                " is not supported");

  const MoveTable table(board);
  const int start = a.row * board.size + a.col;
  const int goal = b.row * board.size + b.col;

  std::vector<Path> result;
  std::array<std::uint8_t, kMaxHalfVertices> path{};
  path[0] = static_cast<std::uint8_t>(start);
  CellMask mask;
  mask.set(start);
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      if (path[k] == goal) {
        std::vector<Cell> cells(k + 1);
        for (int i = 0; i <= k; ++i) cells[i] = cell_of(path[i], board.size);
        result.push_back(Path{std::move(cells)});
      }
      return;
    }
    for (std::uint8_t next : table.moves[path[depth]]) {
      if (mask.test(next)) continue;
      path[depth + 1] = next;
      mask.set(next);
      self(self, depth + 1);
      mask.clear(next);
    }
  };
  dfs(dfs, 0);
  // Depth-first traversal in ascending neighbour order is already
  // lexicographic on vertex sequences.
  return result;
}

std::optional<Cycle> join_paths(const Path& p1, const Path& p2) {
  if (p1.cells.size() != p2.cells.size())
    throw std::invalid_argument("paths must have the same move count");
  if (p1.cells.size() < 3)
    throw std::invalid_argument(
        "paths of fewer than two moves cannot form a cycle");
  if (p1.cells.front() != p2.cells.front() ||
      p1.cells.back() != p2.cells.back())
    throw std::invalid_argument("paths must share both endpoints");
  if (!is_simple_knight_path(p1.cells) || !is_simple_knight_path(p2.cells))
    throw std::invalid_argument("inputs must be simple knight paths");

  // Simplicity already keeps interiors away from the shared endpoints, so
  // only interior-versus-interior overlap remains to check.
  std::vector<Cell> interior1(p1.cells.begin() + 1, p1.cells.end() - 1);
  std::sort(interior1.begin(), interior1.end());
  for (std::size_t i = 1; i + 1 < p2.cells.size(); ++i)
    if (std::binary_search(interior1.begin(), interior1.end(), p2.cells[i]))
      return std::nullopt;

  std::vector<Cell> vertices(p1.cells);
  for (std::size_t i = p2.cells.size() - 2; i >= 1; --i)
    vertices.push_back(p2.cells[i]);
  return Cycle{std::move(vertices)};
}

std::vector<Cycle> enumerate_cycles_mitm(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<int> units(search_unit_count(cfg));
  std::iota(units.begin(), units.end(), 0);
  return run_mitm_units(cfg, units);
}

std::vector<Cycle> enumerate_cycles_dfs(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<int> units(search_unit_count(cfg));
  std::iota(units.begin(), units.end(), 0);
  return run_dfs_units(cfg, units);
}

int search_unit_count(const SearchConfig& cfg) {
  return cfg.board.size * cfg.board.size;
}

std::vector<Cycle> run_mitm_units(const SearchConfig& cfg,
                                  std::span<const int> units) {
  // Knight moves flip the cell colour, so closed walks have even length.
  if (cfg.length % 2 != 0) {
    cfg.validate();
    return {};
  }
  return run_units(cfg, units, mitm_unit);
}

std::vector<Cycle> run_dfs_units(const SearchConfig& cfg,
                                 std::span<const int> units) {
  return run_units(cfg, units, dfs_unit);
}

void sort_unique_cycles(std::vector<Cycle>& cycles) {
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
}

}  // namespace knightpaths
