#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace knightpaths::cli;

  CLI::App app{
      "Enumerates and classifies closed knight paths of length n on an "
      "(n+1)x(n+1) board, up to translation and the symmetries of the square."};
  app.require_subcommand(1);

  EnumerateOptions enumerate_options;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Print the class catalog for a length");
  enumerate->add_option("--length", enumerate_options.length, "Cycle length")
      ->required();
  enumerate->add_option("--board-size", enumerate_options.board_size,
                        "Board side (default: length + 1)");
  enumerate->add_option("--mode", enumerate_options.mode,
                        "Counting mode: combination or cycle")
      ->capture_default_str();
  enumerate->add_option("--format", enumerate_options.format,
                        "Output format: lotto, cells or ascii (default: lotto "
                        "when the board fits the 7x7 grid, else cells)");
  enumerate->add_option("--workers", enumerate_options.workers,
                        "Worker threads")
      ->capture_default_str();
  enumerate->add_flag("--verify", enumerate_options.verify,
                      "Cross-check both enumerators; exit 2 on disagreement");

  CheckOptions check_options;
  CLI::App* check = app.add_subcommand(
      "check", "Test whether six lotto numbers admit a closed knight path");
  check
      ->add_option("--numbers", check_options.numbers,
                   "Comma-separated list, e.g. 1,2,10,11,15,16")
      ->required();

  VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand(
      "verify", "Re-derive the reference counts and the 25-row catalog");
  verify->add_flag("--report", verify_options.print_reports,
                   "Print the full reproduction reports");
  verify->add_option("--workers", verify_options.workers, "Worker threads")
      ->capture_default_str();

  CLI::App* render = app.add_subcommand(
      "render", "Draw the three length-4 class diagrams");

  ExtendOptions extend_options;
  CLI::App* extend = app.add_subcommand(
      "extend", "Count classes for even lengths >= 10 (no reference value; "
                "the two enumerators check each other)");
  extend->add_option("--length", extend_options.length, "Cycle length")
      ->capture_default_str();
  extend->add_option("--budget-ms", extend_options.budget_ms,
                     "Wall-clock budget in milliseconds")
      ->capture_default_str();
  extend->add_option("--workers", extend_options.workers, "Worker threads")
      ->capture_default_str();
  extend->add_option("--checkpoint", extend_options.checkpoint_file,
                     "Checkpoint file: resumed from when present, rewritten "
                     "on timeout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed())
      return run_enumerate(enumerate_options, std::cout, std::cerr);
    if (check->parsed()) return run_check(check_options, std::cout, std::cerr);
    if (verify->parsed())
      return run_verify(verify_options, std::cout, std::cerr);
    if (render->parsed()) return run_render(std::cout, std::cerr);
    if (extend->parsed())
      return run_extend(extend_options, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
