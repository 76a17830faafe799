#include "latin/transform.hpp"

#include "latin/error.hpp"

namespace latin {

LatinSquare direct_product(const LatinSquare& a, const LatinSquare& b) {
  const std::size_t m = a.order();
  const std::size_t n = b.order();
  const std::size_t mn = m * n;
  std::vector<Symbol> cells(mn * mn);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t r = 0; r < n; ++r) {
      Symbol* out = cells.data() + (p * n + r) * mn;
      for (std::size_t q = 0; q < m; ++q) {
        const Symbol hi = a(p, q) * static_cast<Symbol>(n);
        for (std::size_t c = 0; c < n; ++c) out[q * n + c] = hi + b(r, c);
      }
    }
  }
  return LatinSquare(mn, std::move(cells));
}

LatinSquare permute_rows(const LatinSquare& square, std::span<const std::uint32_t> perm) {
  const std::size_t n = square.order();
  if (perm.size() != n || !is_permutation(perm)) throw PreconditionError("row map is not a permutation of [0, n)");
  std::vector<Symbol> cells;
  cells.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = square.row(perm[i]);
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return LatinSquare(n, std::move(cells));
}

LatinSquare rename_symbols(const LatinSquare& square, std::span<const std::uint32_t> perm) {
  const std::size_t n = square.order();
  if (perm.size() != n || !is_permutation(perm)) throw PreconditionError("symbol map is not a permutation of [0, n)");
  std::vector<Symbol> cells(square.cells().begin(), square.cells().end());
  for (auto& s : cells) s = perm[s];
  return LatinSquare(n, std::move(cells));
}

}  // namespace latin
