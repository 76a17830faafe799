#pragma once

// Test-only generators. They build squares by direct search and never go
// through the library's construction code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "latin/square.hpp"

namespace latin::testing {

using Rng = std::mt19937_64;

inline std::vector<std::uint32_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

namespace detail {

// Extends `cells` by row `r` chosen column by column with random symbol
// order, backtracking within the row.
inline bool fill_row(std::vector<Symbol>& cells, std::size_t n, std::size_t r, std::size_t c,
                     std::vector<std::vector<std::uint8_t>>& col_used, std::vector<std::uint8_t>& row_used, Rng& rng) {
  if (c == n) return true;
  auto order = random_permutation(n, rng);
  for (auto s : order) {
    if (row_used[s] || col_used[c][s]) continue;
    row_used[s] = col_used[c][s] = 1;
    cells[r * n + c] = s;
    if (fill_row(cells, n, r, c + 1, col_used, row_used, rng)) return true;
    row_used[s] = col_used[c][s] = 0;
  }
  return false;
}

}  // namespace detail

/// Random Latin square: rows drawn one at a time by randomised backtracking
/// (any Latin rectangle extends, so each row search succeeds), then a random
/// isotopy on top.
inline LatinSquare random_latin_square(std::size_t n, Rng& rng) {
  std::vector<Symbol> cells(n * n);
  std::vector<std::vector<std::uint8_t>> col_used(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::uint8_t> row_used(n, 0);
    if (!detail::fill_row(cells, n, r, 0, col_used, row_used, rng)) throw std::logic_error("row extension failed");
  }
  const auto rp = random_permutation(n, rng), cp = random_permutation(n, rng), sp = random_permutation(n, rng);
  std::vector<Symbol> out(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out[rp[r] * n + cp[c]] = sp[cells[r * n + c]];
  }
  return LatinSquare(n, std::move(out));
}

/// Random partial Latin square: visits cells in random order and fills each
/// with probability `density` using a random admissible symbol. Not
/// necessarily completable within order n.
inline PartialLatinSquare random_partial(std::size_t n, double density, Rng& rng) {
  std::vector<Symbol> cells(n * n, PartialLatinSquare::kEmpty);
  std::vector<std::uint8_t> in_row(n * n, 0), in_col(n * n, 0);
  std::bernoulli_distribution fill(density);
  for (auto cell : random_permutation(n * n, rng)) {
    if (!fill(rng)) continue;
    const std::size_t r = cell / n, c = cell % n;
    for (auto s : random_permutation(n, rng)) {
      if (in_row[r * n + s] || in_col[c * n + s]) continue;
      cells[cell] = s;
      in_row[r * n + s] = in_col[c * n + s] = 1;
      break;
    }
  }
  return PartialLatinSquare(n, std::move(cells));
}

/// Random partial square with every filled diagonal cell (i,i) = i and, for
/// empty (i,i), no i elsewhere in row or column i.
inline PartialLatinSquare random_idempotent_partial(std::size_t n, double density, Rng& rng) {
  std::vector<Symbol> cells(n * n, PartialLatinSquare::kEmpty);
  std::vector<std::uint8_t> in_row(n * n, 0), in_col(n * n, 0);
  std::bernoulli_distribution fill(density);
  // Reserve symbol i in row i and column i for the diagonal.
  for (std::size_t i = 0; i < n; ++i) {
    in_row[i * n + i] = in_col[i * n + i] = 1;
    if (fill(rng)) cells[i * n + i] = static_cast<Symbol>(i);
  }
  for (auto cell : random_permutation(n * n, rng)) {
    const std::size_t r = cell / n, c = cell % n;
    if (r == c || !fill(rng)) continue;
    for (auto s : random_permutation(n, rng)) {
      if (in_row[r * n + s] || in_col[c * n + s]) continue;
      cells[cell] = s;
      in_row[r * n + s] = in_col[c * n + s] = 1;
      break;
    }
  }
  return PartialLatinSquare(n, std::move(cells));
}

/// Order-n Latin square with (i,i) = i, found by backtracking over cells.
inline std::optional<LatinSquare> search_idempotent(std::size_t n) {
  std::vector<Symbol> cells(n * n, 0);
  std::vector<std::uint8_t> in_row(n * n, 0), in_col(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    cells[i * n + i] = static_cast<Symbol>(i);
    in_row[i * n + i] = in_col[i * n + i] = 1;
  }
  auto rec = [&](auto&& self, std::size_t cell) -> bool {
    if (cell == n * n) return true;
    const std::size_t r = cell / n, c = cell % n;
    if (r == c) return self(self, cell + 1);
    for (Symbol s = 0; s < n; ++s) {
      if (in_row[r * n + s] || in_col[c * n + s]) continue;
      in_row[r * n + s] = in_col[c * n + s] = 1;
      cells[cell] = s;
      if (self(self, cell + 1)) return true;
      in_row[r * n + s] = in_col[c * n + s] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return LatinSquare(n, std::move(cells));
}

/// Brute-force orthogonality: compares every pair of cells.
inline bool brute_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n * n; ++i) {
    for (std::size_t j = i + 1; j < n * n; ++j) {
      if (a.cells()[i] == a.cells()[j] && b.cells()[i] == b.cells()[j]) return false;
    }
  }
  return true;
}

/// Brute-force Latin check: every row and column holds every symbol.
inline bool brute_latin(const LatinSquare& a) {
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (Symbol s = 0; s < n; ++s) {
      bool in_row = false, in_col = false;
      for (std::size_t j = 0; j < n; ++j) {
        in_row |= a(i, j) == s;
        in_col |= a(j, i) == s;
      }
      if (!in_row || !in_col) return false;
    }
  }
  return true;
}

/// The order-4 pair of orthogonal partial squares used as a running example.
inline PartialLatinSquare example_left() {
  constexpr Symbol e = PartialLatinSquare::kEmpty;
  return PartialLatinSquare(4, {0, 1, 2, e,  //
                                2, 0, 1, 3,  //
                                3, e, 0, e,  //
                                e, 2, e, 1});
}

inline PartialLatinSquare example_right() {
  constexpr Symbol e = PartialLatinSquare::kEmpty;
  return PartialLatinSquare(4, {0, 2, 1, e,  //
                                3, 1, 0, 2,  //
                                1, e, 2, e,  //
                                e, 0, e, 3});
}

}  // namespace latin::testing
