#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace latin {

/// Symbols, rows and columns of an order-n square are the integers 0..n-1.
using Symbol = std::uint32_t;

/// A (row, col, symbol) entry of a square.
struct Triple {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  Symbol symbol = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// A pair (block, offset) with both parts in [0, n). Composite rows, columns
/// and symbols of squares of order n*n all flatten as block * n + offset.
struct CompositeIndex {
  std::uint32_t block = 0;
  std::uint32_t offset = 0;

  constexpr std::uint32_t flatten(std::uint32_t n) const noexcept { return block * n + offset; }

  static constexpr CompositeIndex split(std::uint32_t flat, std::uint32_t n) noexcept {
    return {flat / n, flat % n};
  }

  friend auto operator<=>(const CompositeIndex&, const CompositeIndex&) = default;
};

/// Fully filled n x n grid over [0, n), stored row-major.
///
/// Construction checks shape and symbol range only. Whether the rows and
/// columns are permutations is decided by is_latin(); every construction in
/// this library runs it before handing a square out, and the verifier needs
/// to be able to hold deliberately corrupted grids.
class LatinSquare {
 public:
  LatinSquare() = default;
  LatinSquare(std::size_t order, std::vector<Symbol> cells);

  static LatinSquare from_rows(const std::vector<std::vector<Symbol>>& rows);

  std::size_t order() const noexcept { return order_; }

  Symbol operator()(std::size_t row, std::size_t col) const noexcept { return cells_[row * order_ + col]; }
  Symbol at(std::size_t row, std::size_t col) const;

  std::span<const Symbol> row(std::size_t r) const noexcept {
    return std::span<const Symbol>(cells_).subspan(r * order_, order_);
  }
  std::span<const Symbol> cells() const noexcept { return cells_; }

  /// Copy with one cell overwritten (still range-checked).
  LatinSquare with_cell(std::size_t row, std::size_t col, Symbol s) const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Symbol> cells_;
};

/// Order-n array in which some cells hold a symbol; no symbol repeats in a
/// row or a column. Violations are rejected at construction.
class PartialLatinSquare {
 public:
  static constexpr Symbol kEmpty = std::numeric_limits<Symbol>::max();

  PartialLatinSquare() = default;
  explicit PartialLatinSquare(std::size_t order);
  /// `cells` is row-major with kEmpty for empty cells.
  PartialLatinSquare(std::size_t order, std::vector<Symbol> cells);

  static PartialLatinSquare from_triples(std::size_t order, std::span<const Triple> triples);
  static PartialLatinSquare from_square(const LatinSquare& square);

  std::size_t order() const noexcept { return order_; }
  std::size_t volume() const noexcept { return volume_; }

  std::optional<Symbol> at(std::size_t row, std::size_t col) const;
  bool filled(std::size_t row, std::size_t col) const noexcept { return cells_[row * order_ + col] != kEmpty; }
  std::span<const Symbol> cells() const noexcept { return cells_; }

  /// Filled cells in row-major order.
  std::vector<Triple> triples() const;

  /// The square itself when every cell is filled and it is Latin.
  std::optional<LatinSquare> as_latin() const;

  friend bool operator==(const PartialLatinSquare&, const PartialLatinSquare&) = default;

 private:
  std::size_t order_ = 0;
  std::size_t volume_ = 0;
  std::vector<Symbol> cells_;
};

/// Ordered list of same-order squares claimed to be pairwise orthogonal.
/// The certified flag is only ever raised by certify().
class MolsSet {
 public:
  MolsSet() = default;
  explicit MolsSet(std::vector<LatinSquare> squares);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return squares_.size(); }
  bool empty() const noexcept { return squares_.empty(); }
  bool certified() const noexcept { return certified_; }

  const LatinSquare& operator[](std::size_t i) const noexcept { return squares_[i]; }
  const std::vector<LatinSquare>& squares() const noexcept { return squares_; }

  auto begin() const noexcept { return squares_.begin(); }
  auto end() const noexcept { return squares_.end(); }

  /// Equality of contents; the certification flag is not compared.
  friend bool operator==(const MolsSet& a, const MolsSet& b) { return a.squares_ == b.squares_; }

 private:
  friend MolsSet certify(MolsSet set);

  std::size_t order_ = 0;
  std::vector<LatinSquare> squares_;
  bool certified_ = false;
};

/// Cells of a host square claimed to form a transversal.
struct Transversal {
  std::vector<Triple> cells;
};

/// Injections carrying rows, columns and symbols of an order-n source into an
/// order-host_order square.
struct EmbeddingWitness {
  std::size_t host_order = 0;
  std::vector<std::uint32_t> rows;
  std::vector<std::uint32_t> cols;
  std::vector<std::uint32_t> symbols;

  static EmbeddingWitness identity(std::size_t source_order, std::size_t host_order);

  friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

/// Checks that `perm` is a permutation of [0, perm.size()).
bool is_permutation(std::span<const std::uint32_t> perm) noexcept;

}  // namespace latin
