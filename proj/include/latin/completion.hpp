#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latin/square.hpp"

namespace latin {

/// k x t array whose rows are permutations of [0, t) and whose columns have
/// no repeated symbol. Row-major.
struct LatinRectangle {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Symbol> cells;

  Symbol operator()(std::size_t r, std::size_t c) const noexcept { return cells[r * cols + c]; }
};

/// First two stages of evans_complete: the n x n corner filled greedily with
/// the smallest admissible symbol of [0, t), then extended to an n x t Latin
/// rectangle by an edge colouring of the rows-versus-missing-symbols graph.
/// Throws PreconditionError if t < 2n.
LatinRectangle evans_rectangle(const PartialLatinSquare& p, std::size_t t);

/// Latin square of order t >= 2n whose top-left n x n corner contains p
/// (identity witness). Deterministic.
LatinSquare evans_complete(const PartialLatinSquare& p, std::size_t t);

/// True iff every filled diagonal cell (i,i) holds i and, for empty (i,i),
/// symbol i occurs neither in row i nor in column i.
bool is_idempotent_compatible(const PartialLatinSquare& p) noexcept;

struct IdempotentOptions {
  /// Randomised restarts after the first deterministic attempt. Each attempt
  /// is seeded by its index, so results are reproducible.
  std::size_t max_attempts = 200;
};

/// Idempotent Latin square of order t >= 2n + 1 containing p in its corner
/// (identity witness). The diagonal is fixed first; the remaining rows come
/// from edge colourings whose colour classes are matched to columns and rows
/// so that no diagonal cell is contradicted, with Kempe-chain repair and
/// seeded restarts when a colouring does not fit.
///
/// Throws PreconditionError for t < 2n + 1 or an incompatible p, and
/// InvariantViolation if every attempt fails.
LatinSquare idempotent_complete(const PartialLatinSquare& p, std::size_t t, IdempotentOptions options = {});

}  // namespace latin
