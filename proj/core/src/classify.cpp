#include "knightpaths/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace knightpaths {

namespace {

std::vector<Cell> shift_to_origin(std::vector<Cell> cells) {
  int min_row = cells.front().row;
  int min_col = cells.front().col;
  for (const Cell& c : cells) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  for (Cell& c : cells) {
    c.row -= min_row;
    c.col -= min_col;
  }
  return cells;
}

// Distinct normalized images of a cell set under the eight transforms.
std::vector<Combination> distinct_set_images(const Combination& normalized) {
  const Frame frame = frame_of(normalized);
  std::vector<Combination> images;
  images.reserve(8);
  for (const Transform& t : all_transforms())
    images.push_back(
        normalize_translation(apply_transform(t, normalized, frame)));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

// Distinct normalized canonical-rotation images of a cycle's vertex sequence.
std::vector<CycleKey> distinct_cycle_images(const CycleKey& normalized_cycle) {
  const Frame frame = frame_of(Combination(normalized_cycle));
  std::vector<CycleKey> images;
  images.reserve(8);
  for (const Transform& t : all_transforms()) {
    std::vector<Cell> mapped;
    mapped.reserve(normalized_cycle.size());
    for (const Cell& c : normalized_cycle)
      mapped.push_back(transform_cell(t, c, frame));
    images.push_back(canonical_rotation(shift_to_origin(std::move(mapped))).cells);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

long placement_count(const Frame& frame, const BoardSpec& board) {
  if (frame.width > board.size || frame.height > board.size) return 0;
  return static_cast<long>(board.size - frame.width + 1) *
         (board.size - frame.height + 1);
}

EquivalenceClass make_class(CanonicalKey key, CycleKey cycle_form,
                            const BoardSpec& board) {
  EquivalenceClass cls;
  cls.frame = frame_bucket(key);

  const std::vector<Combination> set_images = distinct_set_images(key);
  Combination representative;
  bool have_representative = false;
  for (const Combination& image : set_images) {
    const Frame f = frame_of(image);
    if (f.width > board.size || f.height > board.size) continue;
    if (!have_representative || image < representative) {
      representative = image;
      have_representative = true;
    }
  }
  if (!have_representative)
    throw std::invalid_argument("class does not fit the reference board");
  cls.representative = std::move(representative);

  if (cycle_form.empty()) {
    for (const Combination& image : set_images)
      cls.member_count_on_board += placement_count(frame_of(image), board);
  } else {
    for (const CycleKey& image : distinct_cycle_images(cycle_form))
      cls.member_count_on_board +=
          placement_count(frame_of(Combination(image)), board);
  }

  cls.key = std::move(key);
  cls.cycle_form = std::move(cycle_form);
  return cls;
}

void sort_unique(std::vector<Combination>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique(std::vector<CycleKey>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

CanonicalKey canonical_form(const Combination& cells) {
  if (cells.empty())
    throw std::invalid_argument("canonical form of an empty set");
  const Combination base = normalize_translation(cells);
  const Frame frame = frame_of(base);
  CanonicalKey best;
  bool first = true;
  for (const Transform& t : all_transforms()) {
    Combination image = normalize_translation(apply_transform(t, base, frame));
    if (first || image < best) {
      best = std::move(image);
      first = false;
    }
  }
  return best;
}

CycleKey cycle_key(const Cycle& cycle) {
  return canonical_rotation(cycle.cells).cells;
}

CycleKey canonical_cycle_form(const Cycle& cycle) {
  if (cycle.cells.size() < 3)
    throw std::invalid_argument("a cycle needs at least three cells");
  const CycleKey normalized =
      canonical_rotation(shift_to_origin(cycle.cells)).cells;
  const std::vector<CycleKey> images = distinct_cycle_images(normalized);
  return images.front();
}

Frame frame_bucket(const Combination& normalized_cells) {
  Frame f = frame_of(normalized_cells);
  if (f.width < f.height) std::swap(f.width, f.height);
  return f;
}

std::vector<EquivalenceClass> classify(std::span<const Cycle> cycles,
                                       const BoardSpec& board,
                                       const ClassifyOptions& options) {
  board.validate();
  for (const Cycle& c : cycles) {
    if (!is_closed_knight_cycle(c.cells))
      throw std::invalid_argument("classify: input is not a closed knight cycle");
    for (const Cell& cell : c.cells)
      if (!on_board(cell, board))
        throw std::invalid_argument("classify: cycle does not fit the board");
  }

  std::vector<EquivalenceClass> classes;

  if (options.mode == CountingMode::combination) {
    std::vector<Combination> combos;
    combos.reserve(cycles.size());
    for (const Cycle& c : cycles) combos.emplace_back(c.cells);
    sort_unique(combos);

    std::vector<CanonicalKey> keys;
    if (options.use_frame_buckets) {
      std::map<Frame, std::vector<const Combination*>> buckets;
      for (const Combination& combo : combos)
        buckets[frame_bucket(normalize_translation(combo))].push_back(&combo);
      for (const auto& [frame, members] : buckets)
        for (const Combination* combo : members)
          keys.push_back(canonical_form(*combo));
    } else {
      for (const Combination& combo : combos)
        keys.push_back(canonical_form(combo));
    }
    sort_unique(keys);

    classes.reserve(keys.size());
    for (CanonicalKey& key : keys)
      classes.push_back(make_class(std::move(key), {}, board));
  } else {
    std::vector<CycleKey> placed;
    placed.reserve(cycles.size());
    for (const Cycle& c : cycles) placed.push_back(cycle_key(c));
    sort_unique(placed);

    std::vector<CycleKey> forms;
    if (options.use_frame_buckets) {
      std::map<Frame, std::vector<const CycleKey*>> buckets;
      for (const CycleKey& key : placed)
        buckets[frame_bucket(normalize_translation(key))].push_back(&key);
      for (const auto& [frame, members] : buckets)
        for (const CycleKey* key : members)
          forms.push_back(canonical_cycle_form(Cycle{*key}));
    } else {
      for (const CycleKey& key : placed)
        forms.push_back(canonical_cycle_form(Cycle{key}));
    }
    sort_unique(forms);

    classes.reserve(forms.size());
    for (CycleKey& form : forms) {
      CanonicalKey key = canonical_form(Combination(form));
      classes.push_back(make_class(std::move(key), std::move(form), board));
    }
  }

  std::sort(classes.begin(), classes.end(),
            [](const EquivalenceClass& a, const EquivalenceClass& b) {
              if (a.representative != b.representative)
                return a.representative < b.representative;
              return a.cycle_form < b.cycle_form;
            });
  return classes;
}

CombinationCheck check_combination(std::span<const int> numbers) {
  if (numbers.size() != 6)
    throw std::invalid_argument("expected 6 lotto numbers, got " +
                                std::to_string(numbers.size()));
  const Combination cells = from_lotto(numbers);
  const std::vector<Cell>& cs = cells.cells();

  // Fix the first cell and halve by direction: 5!/2 = 60 cyclic orders.
  std::array<int, 5> order = {1, 2, 3, 4, 5};
  bool found = false;
  do {
    if (order.front() > order.back()) continue;
    bool ok = is_knight_move(cs[0], cs[order[0]]) &&
              is_knight_move(cs[order[4]], cs[0]);
    for (int i = 0; ok && i < 4; ++i)
      ok = is_knight_move(cs[order[i]], cs[order[i + 1]]);
    if (ok) {
      found = true;
      break;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  if (!found) return CombinationCheck{};

  const CanonicalKey key = canonical_form(cells);
  const auto& catalog = length6_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (catalog[i].key == key)
      return CombinationCheck{true, static_cast<int>(i) + 1, catalog[i]};
  }
  throw std::logic_error(
      "traversable combination missing from the length-6 catalog");
}

const std::vector<EquivalenceClass>& length6_catalog() {
  static const std::vector<EquivalenceClass> catalog = [] {
    const SearchConfig cfg = SearchConfig::for_length(6);
    return classify(enumerate_cycles_mitm(cfg), cfg.board, {});
  }();
  return catalog;
}

}  // namespace knightpaths
