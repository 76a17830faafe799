#pragma once

// Direct evaluations of the square-order constructions, one cell at a time
// from the defining formulas. Used to cross-check the library cell for cell.

#include <cstdint>
#include <vector>

#include "latin/square.hpp"

namespace latin::testing {

// Squares as plain nested vectors so the oracle shares no code path with
// the library beyond reading input cells.
using Table = std::vector<std::vector<std::uint32_t>>;

inline Table table(const LatinSquare& s) {
  Table t(s.order(), std::vector<std::uint32_t>(s.order()));
  for (std::size_t r = 0; r < s.order(); ++r) {
    for (std::size_t c = 0; c < s.order(); ++c) t[r][c] = s(r, c);
  }
  return t;
}

inline LatinSquare from_table(const Table& t) {
  std::vector<Symbol> cells;
  for (const auto& row : t) cells.insert(cells.end(), row.begin(), row.end());
  return LatinSquare(t.size(), cells);
}

/// Host, then one mate per square of f.
inline std::vector<LatinSquare> naive_square_embed(const LatinSquare& l_sq, const std::vector<LatinSquare>& f_sq) {
  const auto l = table(l_sq);
  std::vector<Table> f;
  for (const auto& s : f_sq) f.push_back(table(s));
  const std::size_t n = l.size();
  std::vector<Table> out(f.size() + 1, Table(n * n, std::vector<std::uint32_t>(n * n)));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t c = 0; c < n; ++c) {
          const std::size_t row = p * n + r, col = q * n + c;
          out[0][row][col] = f[0][p][q] * n + l[f[0][p][r]][c];
          for (std::size_t k = 0; k < f.size(); ++k) {
            out[k + 1][row][col] = f[k][f[0][p][r]][q] * n + f[k][f[0][p][q]][c];
          }
        }
  std::vector<LatinSquare> result;
  for (const auto& t : out) result.push_back(from_table(t));
  return result;
}

/// b1, b2, then x_i for each i. `perm` empty means the identity.
inline std::vector<LatinSquare> naive_pair_embed(const LatinSquare& a1_sq, const LatinSquare& a2_sq,
                                                 const LatinSquare& d1_sq, const LatinSquare& d2_sq,
                                                 const std::vector<LatinSquare>& c_sq,
                                                 const std::vector<std::uint32_t>& perm) {
  const auto a1 = table(a1_sq), a2 = table(a2_sq), d1 = table(d1_sq), d2 = table(d2_sq);
  std::vector<Table> c;
  for (const auto& s : c_sq) c.push_back(table(s));
  const std::size_t n = a1.size(), t = c.size();
  std::vector<Table> out(t + 2, Table(n * n, std::vector<std::uint32_t>(n * n)));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t col = 0; col < n; ++col) {
          const std::size_t R = p * n + r, C = q * n + col;
          out[0][R][C] = a1[p][q] * n + d1[r][col];
          out[1][R][C] = a2[p][q] * n + d2[r][col];
          for (std::size_t i = 0; i < t; ++i) {
            const std::size_t fi = perm.empty() ? i : perm[i];
            out[i + 2][R][C] = c[i][p][d1[r][col]] * n + c[fi][q][d2[r][col]];
          }
        }
  std::vector<LatinSquare> result;
  for (const auto& tb : out) result.push_back(from_table(tb));
  return result;
}

}  // namespace latin::testing
