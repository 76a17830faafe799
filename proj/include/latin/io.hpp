#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "latin/square.hpp"
#include "latin/verify.hpp"

namespace latin::io {

// Text formats (UTF-8, LF line endings, tokens separated by single spaces on
// output; any run of spaces or tabs is accepted on input).
//
//   grid:    "latin <n>" or "partial <n>", then n rows of n tokens. A token
//            is a decimal symbol in [0, n), or "." for an empty cell
//            (partial only).
//   mols:    "mols <n> <count>", then count grids of n rows each, separated
//            by exactly one blank line.
//   witness: "witness <n> <host order>", then lines "rows ...", "cols ...",
//            "symbols ..." with n values each.
//
// Symbols are plain decimals; composite symbols of order n*n squares are
// flattened as block * n + offset.

using Grid = std::variant<LatinSquare, PartialLatinSquare>;

/// Parses a grid file. A "latin" file is checked for shape and range only;
/// Latin-ness is left to the verifier. Errors carry line and column.
Grid parse_grid(std::string_view text);
/// Accepts "latin" or "partial" files and returns the partial view.
PartialLatinSquare parse_partial(std::string_view text);
/// Requires a "latin" file.
LatinSquare parse_latin(std::string_view text);

std::string emit_grid(const LatinSquare& square);
std::string emit_grid(const PartialLatinSquare& square);

/// Parses a mols file. Grids are checked for shape and range; the set is
/// returned uncertified.
MolsSet parse_mols(std::string_view text);
std::string emit_mols(const MolsSet& set);

EmbeddingWitness parse_witness(std::string_view text);
std::string emit_witness(const EmbeddingWitness& witness);

struct ReportExtras {
  /// Named witness validations, listed after the pairs.
  std::vector<std::pair<std::string, bool>> witnesses;
  /// Adds a "time_ms" line. Off by default so reports are byte-stable.
  bool timings = false;
};

/// Line-oriented report: one line per square, one per pair (lexicographic),
/// then witnesses, optional timing, and "certified yes|no".
std::string emit_report(const CertificationReport& report, const ReportExtras& extras = {});

/// Human-readable description of all formats.
std::string formats_help();

/// Whole-file helpers. Throw latin::Error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace latin::io
