#pragma once

#include <iosfwd>
#include <string>

namespace knightpaths::cli {

// Script-friendly exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailure = 2;
inline constexpr int kExitNotTraversable = 3;

struct EnumerateOptions {
  int length = 0;
  int board_size = 0;  // 0: use length + 1
  std::string mode = "combination";
  std::string format;  // empty: lotto when the board fits the 7x7 grid, else cells
  int workers = 1;
  bool verify = false;  // cross-check the enumerators, exit 2 on disagreement
};
int run_enumerate(const EnumerateOptions& options, std::ostream& out,
                  std::ostream& err);

struct CheckOptions {
  std::string numbers;  // comma-separated list of six lotto numbers
};
int run_check(const CheckOptions& options, std::ostream& out,
              std::ostream& err);

struct VerifyOptions {
  bool print_reports = false;
  int workers = 1;
};
int run_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

int run_render(std::ostream& out, std::ostream& err);

struct ExtendOptions {
  int length = 10;
  long budget_ms = 300000;
  int workers = 1;
  std::string checkpoint_file;  // resumed from and rewritten on timeout
};
int run_extend(const ExtendOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace knightpaths::cli
