#pragma once

#include <span>
#include <string>

#include "knightpaths/classify.hpp"

namespace knightpaths {

enum class OutputFormat { lotto, cells, ascii };

/// Parses "lotto", "cells" or "ascii"; throws on anything else.
OutputFormat parse_output_format(const std::string& name);

/// Board diagram: '#' on the cells of the set, '.' elsewhere, one board row
/// per line, each line newline-terminated.
std::string render_board(const Combination& cells, const BoardSpec& board);

/// Catalog text: a "classes: <count>" summary, then one line per class
/// ("<id>: <numbers>" for lotto, "<id>: (r,c) ..." for cells) or one board
/// diagram per class with blank lines between diagrams for ascii. Lotto
/// requires every representative to fit the 7x7 grid; throws otherwise.
std::string render_catalog(std::span<const EquivalenceClass> classes,
                           OutputFormat format, const BoardSpec& board);

}  // namespace knightpaths
