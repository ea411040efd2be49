#include "knightpaths/render.hpp"

#include <stdexcept>
#include <string>

namespace knightpaths {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "lotto") return OutputFormat::lotto;
  if (name == "cells") return OutputFormat::cells;
  if (name == "ascii") return OutputFormat::ascii;
  throw std::invalid_argument("unknown output format '" + name +
                              "' (expected lotto, cells or ascii)");
}

std::string render_board(const Combination& cells, const BoardSpec& board) {
  board.validate();
  std::vector<std::string> grid(board.size, std::string(board.size, '.'));
  for (const Cell& c : cells) {
    if (!on_board(c, board))
      throw std::invalid_argument("cell set does not fit the board");
    grid[c.row][c.col] = '#';
  }
  std::string out;
  out.reserve((board.size + 1) * board.size);
  for (const std::string& row : grid) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_catalog(std::span<const EquivalenceClass> classes,
                           OutputFormat format, const BoardSpec& board) {
  std::string out = "classes: " + std::to_string(classes.size()) + "\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const EquivalenceClass& cls = classes[i];
    switch (format) {
      case OutputFormat::lotto: {
        for (const Cell& c : cls.representative)
          if (c.row >= kLottoGridSize || c.col >= kLottoGridSize)
            throw std::invalid_argument(
                "class " + std::to_string(i + 1) +
                " does not fit the 7x7 lotto grid; use the cells format");
        out += std::to_string(i + 1) + ":";
        for (int n : to_lotto(cls.representative))
          out += " " + std::to_string(n);
        out += '\n';
        break;
      }
      case OutputFormat::cells: {
        out += std::to_string(i + 1) + ":";
        for (const Cell& c : cls.representative)
          out += " (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                 ")";
        out += '\n';
        break;
      }
      case OutputFormat::ascii: {
        if (i > 0) out += '\n';
        out += render_board(cls.representative, board);
        break;
      }
    }
  }
  return out;
}

}  // namespace knightpaths
