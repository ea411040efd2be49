#include "commands.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "knightpaths/harness.hpp"
#include "knightpaths/render.hpp"

namespace knightpaths::cli {

namespace {

CountingMode parse_mode(const std::string& name) {
  if (name == "combination") return CountingMode::combination;
  if (name == "cycle") return CountingMode::cycle;
  throw std::invalid_argument("unknown counting mode '" + name +
                              "' (expected combination or cycle)");
}

std::vector<int> parse_number_list(const std::string& text) {
  std::vector<int> numbers;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("invalid number '" + token + "'");
    numbers.push_back(value);
  }
  if (numbers.size() != 6)
    throw std::invalid_argument("expected 6 numbers, got " +
                                std::to_string(numbers.size()));
  return numbers;
}

}  // namespace

int run_enumerate(const EnumerateOptions& options, std::ostream& out,
                  std::ostream& err) {
  try {
    SearchConfig cfg;
    cfg.length = options.length;
    cfg.board =
        BoardSpec{options.board_size > 0 ? options.board_size
                                         : options.length + 1};
    cfg.worker_count = options.workers;
    cfg.validate();

    ClassifyOptions classify_options;
    classify_options.mode = parse_mode(options.mode);
    const OutputFormat format =
        options.format.empty()
            ? (cfg.board.size <= kLottoGridSize ? OutputFormat::lotto
                                                : OutputFormat::cells)
            : parse_output_format(options.format);

    const std::vector<Cycle> cycles = enumerate_cycles_mitm(cfg);
    if (options.verify) {
      const std::vector<Cycle> cross_check = enumerate_cycles_dfs(cfg);
      if (cross_check != cycles) {
        err << "error: the enumerators disagree (" << cycles.size() << " vs "
            << cross_check.size() << " cycles)\n";
        return kExitVerifyFailure;
      }
    }
    const std::vector<EquivalenceClass> classes =
        classify(cycles, cfg.board, classify_options);
    out << render_catalog(classes, format, cfg.board);
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_check(const CheckOptions& options, std::ostream& out,
              std::ostream& err) {
  try {
    const std::vector<int> numbers = parse_number_list(options.numbers);
    const CombinationCheck result = check_combination(numbers);
    out << "traversable: " << (result.traversable ? "yes" : "no") << '\n';
    if (!result.traversable) return kExitNotTraversable;
    out << "class: " << result.class_id << '\n';
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  (void)err;
  bool all_ok = true;

  for (int n : {4, 6, 8}) {
    const ReproductionReport report = reproduce(n, options.workers);
    if (options.print_reports) out << to_text(report) << '\n';
    const long expected = *reference_class_count(n);
    const bool count_ok = n == 8
                              ? report.matched_mode != "none"
                              : report.combination_class_count == expected;
    const bool ok = count_ok && report.oracle_agreement;
    all_ok = all_ok && ok;
    out << (ok ? "PASS" : "FAIL") << " reproduce(" << n << "): "
        << report.combination_class_count << " combination / "
        << report.cycle_class_count << " cycle classes, expected " << expected
        << " (mode: " << report.matched_mode << "), enumerators "
        << (report.oracle_agreement ? "agree" : "DISAGREE") << '\n';
  }

  const CatalogCheck catalog = verify_reference_catalog();
  all_ok = all_ok && catalog.bijection_ok;
  out << (catalog.bijection_ok ? "PASS" : "FAIL")
      << " catalog6: " << catalog.rows_matched_as_classes
      << "/25 rows matched, bijection "
      << (catalog.bijection_ok ? "ok" : "broken");
  if (!catalog.failure_detail.empty()) out << " (" << catalog.failure_detail
                                           << ")";
  out << ", representatives "
      << (catalog.exact_representative_match ? "verbatim" : "differ") << '\n';

  return all_ok ? kExitOk : kExitVerifyFailure;
}

int run_render(std::ostream& out, std::ostream& err) {
  (void)err;
  const std::vector<std::string> diagrams = render_length4_classes();
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    if (i) out << '\n';
    out << diagrams[i];
  }
  return kExitOk;
}

int run_extend(const ExtendOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    SearchCheckpoint checkpoint;
    bool have_checkpoint = false;
    if (!options.checkpoint_file.empty() &&
        std::filesystem::exists(options.checkpoint_file)) {
      std::ifstream in(options.checkpoint_file);
      std::ostringstream text;
      text << in.rdbuf();
      checkpoint = checkpoint_from_text(text.str());
      have_checkpoint = true;
      out << "resuming from checkpoint (" << checkpoint.completed_units.size()
          << " units done, phase " << checkpoint.phase << ")\n";
    }

    const ExtendOutcome outcome = extend_sequence(
        options.length, std::chrono::milliseconds(options.budget_ms),
        options.workers, have_checkpoint ? &checkpoint : nullptr);

    if (outcome.report) {
      out << to_text(*outcome.report);
      return kExitOk;
    }
    const SearchCheckpoint& cp = *outcome.checkpoint;
    out << "timeout: " << cp.completed_units.size() << " units done in phase "
        << cp.phase << '\n';
    if (!options.checkpoint_file.empty()) {
      std::ofstream file(options.checkpoint_file);
      file << to_text(cp);
      out << "checkpoint written to " << options.checkpoint_file << '\n';
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace knightpaths::cli
