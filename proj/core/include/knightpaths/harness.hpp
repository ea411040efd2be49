#pragma once

#include <array>
#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knightpaths/classify.hpp"

namespace knightpaths {

/// Known class counts this tool reproduces: 3 for length 4, 25 for length 6,
/// 478 for length 8. Empty for other lengths.
std::optional<long> reference_class_count(int length);

struct ReproductionReport {
  int n = 0;
  int board_size = 0;
  int worker_count = 1;
  long raw_cycle_count = 0;
  long combination_class_count = 0;
  long cycle_class_count = 0;
  bool oracle_agreement = false;
  /// Which counting mode hits the reference count: "combination", "cycle",
  /// "both", "none", or "n/a" when no reference count exists.
  std::string matched_mode;
  std::chrono::milliseconds elapsed{0};
};

/// Runs both enumerators on the (n+1)-board, classifies in both modes and
/// fills every report field. A false oracle_agreement marks the run failed.
ReproductionReport reproduce(int n, int worker_count = 1);

/// Line-oriented "key: value" record of the report.
std::string to_text(const ReproductionReport& report);

/// The embedded 25-row reference catalog of length-6 classes, one lotto
/// combination per class, in its published row order. Read-only fixture.
const std::array<std::array<int, 6>, 25>& reference_catalog_rows();

struct CatalogCheck {
  int rows_matched_as_classes = 0;
  /// True when every row is traversable and the row keys are pairwise
  /// distinct and exactly the catalog's key set.
  bool bijection_ok = false;
  /// True when the computed representatives reproduce the rows verbatim,
  /// in order. Informational; the bijection is the hard gate.
  bool exact_representative_match = false;
  /// Names the failing rows; empty when the bijection holds.
  std::string failure_detail;
};

/// Checks arbitrary rows against the length-6 catalog.
CatalogCheck verify_catalog_rows(std::span<const std::array<int, 6>> rows);

/// Checks the embedded reference rows.
CatalogCheck verify_reference_catalog();

/// ASCII diagrams of the three length-4 class representatives on the
/// 5x5 board.
std::vector<std::string> render_length4_classes();

/// Resumable progress of a budgeted run. Units follow search_unit_count;
/// `mitm_cycles` holds the finished first phase once `phase` is "dfs".
struct SearchCheckpoint {
  int version = 1;
  int n = 0;
  int board_size = 0;
  std::string phase;  // "mitm" or "dfs"
  std::vector<int> completed_units;
  std::vector<Cycle> partial_cycles;
  std::vector<Cycle> mitm_cycles;
};

std::string to_text(const SearchCheckpoint& checkpoint);
SearchCheckpoint checkpoint_from_text(const std::string& text);

struct ExtendOutcome {
  std::optional<ReproductionReport> report;
  std::optional<SearchCheckpoint> checkpoint;

  bool timed_out() const { return checkpoint.has_value(); }
};

/// Budgeted reproduction run for even n >= 10, where no reference count
/// exists and agreement between the two enumerators is the only check.
/// Returns a checkpoint instead of a report when the budget runs out;
/// pass the checkpoint back via `resume` to continue. Throws for n < 10
/// (use reproduce) and odd n.
ExtendOutcome extend_sequence(int n, std::chrono::milliseconds budget,
                              int worker_count = 1,
                              const SearchCheckpoint* resume = nullptr);

}  // namespace knightpaths
