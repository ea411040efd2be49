#include "knightpaths/harness.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "knightpaths/render.hpp"

namespace knightpaths {

namespace {

using Clock = std::chrono::steady_clock;

std::string matched_mode_for(int n, long combination_count, long cycle_count) {
  const std::optional<long> expected = reference_class_count(n);
  if (!expected) return "n/a";
  const bool comb = combination_count == *expected;
  const bool cyc = cycle_count == *expected;
  if (comb && cyc) return "both";
  if (comb) return "combination";
  if (cyc) return "cycle";
  return "none";
}

ReproductionReport build_report(int n, const SearchConfig& cfg,
                                const std::vector<Cycle>& mitm,
                                const std::vector<Cycle>& dfs,
                                Clock::time_point start) {
  ReproductionReport report;
  report.n = n;
  report.board_size = cfg.board.size;
  report.worker_count = cfg.worker_count;
  report.raw_cycle_count = static_cast<long>(mitm.size());
  report.oracle_agreement = (mitm == dfs);
  report.combination_class_count = static_cast<long>(
      classify(mitm, cfg.board, {CountingMode::combination}).size());
  report.cycle_class_count = static_cast<long>(
      classify(mitm, cfg.board, {CountingMode::cycle}).size());
  report.matched_mode = matched_mode_for(n, report.combination_class_count,
                                         report.cycle_class_count);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      Clock::now() - start);
  return report;
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("checkpoint: bad " + what + " '" + text + "'");
  return value;
}

std::string expect_field(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("checkpoint: missing field '" + key + "'");
  const std::string prefix = key + ": ";
  if (line.rfind(prefix, 0) != 0)
    throw std::invalid_argument("checkpoint: expected field '" + key +
                                "', got '" + line + "'");
  return line.substr(prefix.size());
}

void write_cycles(std::ostream& out, const std::vector<Cycle>& cycles) {
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
      if (i) out << ' ';
      out << c.cells[i].row << ',' << c.cells[i].col;
    }
    out << '\n';
  }
}

std::vector<Cycle> read_cycles(std::istream& in, long count) {
  std::vector<Cycle> cycles;
  cycles.reserve(count);
  std::string line;
  for (long i = 0; i < count; ++i) {
    if (!std::getline(in, line))
      throw std::invalid_argument("checkpoint: truncated cycle list");
    std::vector<Cell> cells;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      const std::size_t comma = token.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("checkpoint: bad cycle cell '" + token +
                                    "'");
      cells.push_back(Cell{parse_int(token.substr(0, comma), "row"),
                           parse_int(token.substr(comma + 1), "column")});
    }
    if (cells.empty())
      throw std::invalid_argument("checkpoint: empty cycle line");
    cycles.push_back(Cycle{std::move(cells)});
  }
  return cycles;
}

// Work shared by the two phases of extend_sequence: runs the pending units
// in worker-sized slices, stopping at the deadline.
struct PhaseResult {
  bool finished = false;
  std::vector<int> completed;
  std::vector<Cycle> collected;
};

template <typename Runner>
PhaseResult run_phase(const SearchConfig& cfg, std::vector<int> completed,
                      std::vector<Cycle> collected, Clock::time_point deadline,
                      Runner runner) {
  const int total = search_unit_count(cfg);
  std::vector<bool> done(total, false);
  for (int u : completed) {
    if (u < 0 || u >= total)
      throw std::invalid_argument("checkpoint: unit out of range");
    done[u] = true;
  }

  std::vector<int> pending;
  for (int u = 0; u < total; ++u)
    if (!done[u]) pending.push_back(u);

  const std::size_t slice = std::max(1, cfg.worker_count);
  std::size_t next = 0;
  while (next < pending.size()) {
    if (Clock::now() >= deadline) {
      std::sort(completed.begin(), completed.end());
      sort_unique_cycles(collected);
      return PhaseResult{false, std::move(completed), std::move(collected)};
    }
    const std::size_t count = std::min(slice, pending.size() - next);
    const std::span<const int> units(pending.data() + next, count);
    std::vector<Cycle> found = runner(cfg, units);
    collected.insert(collected.end(), std::make_move_iterator(found.begin()),
                     std::make_move_iterator(found.end()));
    completed.insert(completed.end(), units.begin(), units.end());
    next += count;
  }
  std::sort(completed.begin(), completed.end());
  sort_unique_cycles(collected);
  return PhaseResult{true, std::move(completed), std::move(collected)};
}

}  // namespace

std::optional<long> reference_class_count(int length) {
  switch (length) {
    case 4:
      return 3;
    case 6:
      return 25;
    case 8:
      return 478;
    default:
      return std::nullopt;
  }
}

ReproductionReport reproduce(int n, int worker_count) {
  SearchConfig cfg{n, BoardSpec{n + 1}, worker_count};
  cfg.validate();
  const auto start = Clock::now();
  const std::vector<Cycle> mitm = enumerate_cycles_mitm(cfg);
  const std::vector<Cycle> dfs = enumerate_cycles_dfs(cfg);
  return build_report(n, cfg, mitm, dfs, start);
}

std::string to_text(const ReproductionReport& report) {
  std::ostringstream out;
  out << "n: " << report.n << '\n'
      << "board_size: " << report.board_size << '\n'
      << "worker_count: " << report.worker_count << '\n'
      << "raw_cycle_count: " << report.raw_cycle_count << '\n'
      << "combination_class_count: " << report.combination_class_count << '\n'
      << "cycle_class_count: " << report.cycle_class_count << '\n'
      << "oracle_agreement: " << (report.oracle_agreement ? "true" : "false")
      << '\n'
      << "matched_mode: " << report.matched_mode << '\n'
      << "elapsed_ms: " << report.elapsed.count() << '\n';
  return out.str();
}

const std::array<std::array<int, 6>, 25>& reference_catalog_rows() {
  static const std::array<std::array<int, 6>, 25> rows = {{
      {1, 2, 10, 11, 15, 16},   {1, 3, 5, 10, 16, 18},
      {1, 3, 10, 12, 16, 25},   {1, 3, 10, 16, 18, 23},
      {1, 5, 10, 11, 16, 20},   {1, 5, 10, 16, 18, 31},
      {1, 5, 10, 16, 20, 25},   {1, 6, 10, 11, 16, 19},
      {1, 10, 11, 16, 19, 24},  {1, 10, 11, 16, 20, 25},
      {1, 10, 16, 19, 25, 34},  {2, 3, 8, 11, 16, 17},
      {2, 4, 15, 17, 19, 24},   {2, 10, 11, 15, 19, 24},
      {2, 10, 11, 15, 20, 25},  {2, 10, 12, 15, 17, 25},
      {2, 10, 15, 17, 19, 32},  {2, 11, 15, 17, 26, 30},
      {2, 11, 15, 20, 24, 33},  {2, 11, 15, 20, 25, 30},
      {2, 11, 15, 24, 26, 39},  {2, 11, 15, 26, 30, 39},
      {2, 15, 17, 22, 24, 37},  {2, 15, 17, 24, 26, 39},
      {2, 15, 17, 30, 32, 45},
  }};
  return rows;
}

CatalogCheck verify_catalog_rows(std::span<const std::array<int, 6>> rows) {
  CatalogCheck check;
  std::vector<std::string> problems;
  const std::vector<EquivalenceClass>& catalog = length6_catalog();

  std::vector<CanonicalKey> row_keys;
  row_keys.reserve(rows.size());
  std::vector<bool> row_ok(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      const CombinationCheck result = check_combination(rows[i]);
      if (!result.traversable) {
        problems.push_back("row " + std::to_string(i + 1) +
                           " is not traversable");
        continue;
      }
      row_keys.push_back(result.cls->key);
      row_ok[i] = true;
    } catch (const std::invalid_argument& e) {
      problems.push_back("row " + std::to_string(i + 1) + " is malformed: " +
                         e.what());
    }
  }

  std::vector<CanonicalKey> sorted_row_keys = row_keys;
  std::sort(sorted_row_keys.begin(), sorted_row_keys.end());
  if (std::adjacent_find(sorted_row_keys.begin(), sorted_row_keys.end()) !=
      sorted_row_keys.end())
    problems.push_back("rows map to duplicate classes");

  std::vector<CanonicalKey> catalog_keys;
  catalog_keys.reserve(catalog.size());
  for (const EquivalenceClass& cls : catalog) catalog_keys.push_back(cls.key);
  std::sort(catalog_keys.begin(), catalog_keys.end());

  check.rows_matched_as_classes = static_cast<int>(std::count_if(
      row_keys.begin(), row_keys.end(), [&](const CanonicalKey& key) {
        return std::binary_search(catalog_keys.begin(), catalog_keys.end(),
                                  key);
      }));
  if (sorted_row_keys != catalog_keys)
    problems.push_back("row classes do not cover the catalog exactly (" +
                       std::to_string(check.rows_matched_as_classes) + "/" +
                       std::to_string(catalog.size()) + " matched)");

  check.bijection_ok = problems.empty();

  check.exact_representative_match = rows.size() == catalog.size();
  for (std::size_t i = 0;
       check.exact_representative_match && i < rows.size(); ++i) {
    const std::vector<int> lotto = row_ok[i]
                                       ? to_lotto(catalog[i].representative)
                                       : std::vector<int>{};
    check.exact_representative_match =
        row_ok[i] && std::equal(lotto.begin(), lotto.end(), rows[i].begin(),
                                rows[i].end());
  }

  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (i) check.failure_detail += "; ";
    check.failure_detail += problems[i];
  }
  return check;
}

CatalogCheck verify_reference_catalog() {
  return verify_catalog_rows(reference_catalog_rows());
}

std::vector<std::string> render_length4_classes() {
  const SearchConfig cfg = SearchConfig::for_length(4);
  const std::vector<EquivalenceClass> classes =
      classify(enumerate_cycles_mitm(cfg), cfg.board, {});
  std::vector<std::string> diagrams;
  diagrams.reserve(classes.size());
  for (const EquivalenceClass& cls : classes)
    diagrams.push_back(render_board(cls.representative, cfg.board));
  return diagrams;
}

std::string to_text(const SearchCheckpoint& checkpoint) {
  std::ostringstream out;
  out << "format: knightpaths-checkpoint/" << checkpoint.version << '\n'
      << "n: " << checkpoint.n << '\n'
      << "board_size: " << checkpoint.board_size << '\n'
      << "phase: " << checkpoint.phase << '\n'
      << "completed_units: " << checkpoint.completed_units.size() << '\n';
  for (std::size_t i = 0; i < checkpoint.completed_units.size(); ++i) {
    if (i) out << ' ';
    out << checkpoint.completed_units[i];
  }
  if (!checkpoint.completed_units.empty()) out << '\n';
  out << "partial_cycles: " << checkpoint.partial_cycles.size() << '\n';
  write_cycles(out, checkpoint.partial_cycles);
  out << "mitm_cycles: " << checkpoint.mitm_cycles.size() << '\n';
  write_cycles(out, checkpoint.mitm_cycles);
  return out.str();
}

SearchCheckpoint checkpoint_from_text(const std::string& text) {
  std::istringstream in(text);
  SearchCheckpoint cp;

  const std::string format = expect_field(in, "format");
  const std::string expected_prefix = "knightpaths-checkpoint/";
  if (format.rfind(expected_prefix, 0) != 0)
    throw std::invalid_argument("checkpoint: unknown format '" + format + "'");
  cp.version = parse_int(format.substr(expected_prefix.size()), "version");
  if (cp.version != 1)
    throw std::invalid_argument("checkpoint: unsupported version " +
                                std::to_string(cp.version));

  cp.n = parse_int(expect_field(in, "n"), "n");
  cp.board_size = parse_int(expect_field(in, "board_size"), "board size");
  cp.phase = expect_field(in, "phase");
  if (cp.phase != "mitm" && cp.phase != "dfs")
    throw std::invalid_argument("checkpoint: unknown phase '" + cp.phase +
                                "'");

  const long unit_count =
      parse_int(expect_field(in, "completed_units"), "unit count");
  if (unit_count > 0) {
    std::string line;
    if (!std::getline(in, line))
      throw std::invalid_argument("checkpoint: missing unit list");
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token)
      cp.completed_units.push_back(parse_int(token, "unit"));
    if (static_cast<long>(cp.completed_units.size()) != unit_count)
      throw std::invalid_argument("checkpoint: unit list length mismatch");
  }

  cp.partial_cycles = read_cycles(
      in, parse_int(expect_field(in, "partial_cycles"), "cycle count"));
  cp.mitm_cycles = read_cycles(
      in, parse_int(expect_field(in, "mitm_cycles"), "cycle count"));
  return cp;
}

ExtendOutcome extend_sequence(int n, std::chrono::milliseconds budget,
                              int worker_count,
                              const SearchCheckpoint* resume) {
  if (n % 2 != 0)
    throw std::invalid_argument(
        "extension runs need an even length (odd lengths have no cycles)");
  if (n < 10)
    throw std::invalid_argument("extension runs start at length 10; use "
                                "reproduce() for shorter lengths");
  SearchConfig cfg{n, BoardSpec{n + 1}, worker_count};
  cfg.validate();
  if (resume) {
    if (resume->version != 1 || resume->n != n ||
        resume->board_size != cfg.board.size)
      throw std::invalid_argument(
          "checkpoint does not match the requested run");
  }

  const auto start = Clock::now();
  const auto deadline = start + budget;

  std::vector<Cycle> mitm;
  std::vector<int> dfs_completed;
  std::vector<Cycle> dfs_collected;

  if (resume && resume->phase == "dfs") {
    mitm = resume->mitm_cycles;
    sort_unique_cycles(mitm);
    dfs_completed = resume->completed_units;
    dfs_collected = resume->partial_cycles;
  } else {
    PhaseResult phase = run_phase(
        cfg, resume ? resume->completed_units : std::vector<int>{},
        resume ? resume->partial_cycles : std::vector<Cycle>{}, deadline,
        run_mitm_units);
    if (!phase.finished) {
      SearchCheckpoint cp;
      cp.n = n;
      cp.board_size = cfg.board.size;
      cp.phase = "mitm";
      cp.completed_units = std::move(phase.completed);
      cp.partial_cycles = std::move(phase.collected);
      return ExtendOutcome{std::nullopt, std::move(cp)};
    }
    mitm = std::move(phase.collected);
  }

  PhaseResult phase =
      run_phase(cfg, std::move(dfs_completed), std::move(dfs_collected),
                deadline, run_dfs_units);
  if (!phase.finished) {
    SearchCheckpoint cp;
    cp.n = n;
    cp.board_size = cfg.board.size;
    cp.phase = "dfs";
    cp.completed_units = std::move(phase.completed);
    cp.partial_cycles = std::move(phase.collected);
    cp.mitm_cycles = std::move(mitm);
    return ExtendOutcome{std::nullopt, std::move(cp)};
  }

  return ExtendOutcome{build_report(n, cfg, mitm, phase.collected, start),
                       std::nullopt};
}

}  // namespace knightpaths
