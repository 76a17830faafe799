#include "latin/square.hpp"

#include <numeric>
#include <string>

#include "latin/error.hpp"

namespace latin {

LatinSquare::LatinSquare(std::size_t order, std::vector<Symbol> cells) : order_(order), cells_(std::move(cells)) {
  if (order_ == 0) throw MalformedGrid("square order must be at least 1");
  if (cells_.size() != order_ * order_) {
    throw MalformedGrid("expected " + std::to_string(order_ * order_) + " cells, got " +
                        std::to_string(cells_.size()));
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] >= order_) {
      throw MalformedGrid("symbol " + std::to_string(cells_[i]) + " at (" + std::to_string(i / order_) + "," +
                          std::to_string(i % order_) + ") is outside [0," + std::to_string(order_) + ")");
    }
  }
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<Symbol>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Symbol> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw MalformedGrid("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                          " entries, expected " + std::to_string(n));
    }
    cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  }
  return LatinSquare(n, std::move(cells));
}

Symbol LatinSquare::at(std::size_t row, std::size_t col) const {
  if (row >= order_ || col >= order_) throw PreconditionError("cell index outside the square");
  return (*this)(row, col);
}

LatinSquare LatinSquare::with_cell(std::size_t row, std::size_t col, Symbol s) const {
  if (row >= order_ || col >= order_) throw PreconditionError("cell index outside the square");
  if (s >= order_) throw MalformedGrid("symbol outside [0, order)");
  LatinSquare out = *this;
  out.cells_[row * order_ + col] = s;
  return out;
}

PartialLatinSquare::PartialLatinSquare(std::size_t order)
    : PartialLatinSquare(order, std::vector<Symbol>(order * order, kEmpty)) {}

PartialLatinSquare::PartialLatinSquare(std::size_t order, std::vector<Symbol> cells)
    : order_(order), cells_(std::move(cells)) {
  if (order_ == 0) throw MalformedGrid("square order must be at least 1");
  if (cells_.size() != order_ * order_) throw MalformedGrid("cell count does not match order");

  std::vector<std::uint8_t> in_row(order_ * order_, 0);
  std::vector<std::uint8_t> in_col(order_ * order_, 0);
  for (std::size_t r = 0; r < order_; ++r) {
    for (std::size_t c = 0; c < order_; ++c) {
      const Symbol s = cells_[r * order_ + c];
      if (s == kEmpty) continue;
      const auto where = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
      if (s >= order_) throw MalformedGrid("symbol " + std::to_string(s) + " at " + where + " out of range");
      if (in_row[r * order_ + s]++) throw MalformedGrid("symbol " + std::to_string(s) + " repeats in row at " + where);
      if (in_col[c * order_ + s]++) {
        throw MalformedGrid("symbol " + std::to_string(s) + " repeats in column at " + where);
      }
      ++volume_;
    }
  }
}

PartialLatinSquare PartialLatinSquare::from_triples(std::size_t order, std::span<const Triple> triples) {
  std::vector<Symbol> cells(order * order, kEmpty);
  for (const Triple& t : triples) {
    if (t.row >= order || t.col >= order) throw MalformedGrid("triple outside the square");
    Symbol& slot = cells[t.row * order + t.col];
    if (slot != kEmpty && slot != t.symbol) throw MalformedGrid("two symbols in one cell");
    slot = t.symbol;
  }
  return PartialLatinSquare(order, std::move(cells));
}

PartialLatinSquare PartialLatinSquare::from_square(const LatinSquare& square) {
  return PartialLatinSquare(square.order(), std::vector<Symbol>(square.cells().begin(), square.cells().end()));
}

std::optional<Symbol> PartialLatinSquare::at(std::size_t row, std::size_t col) const {
  if (row >= order_ || col >= order_) throw PreconditionError("cell index outside the square");
  const Symbol s = cells_[row * order_ + col];
  if (s == kEmpty) return std::nullopt;
  return s;
}

std::vector<Triple> PartialLatinSquare::triples() const {
  std::vector<Triple> out;
  out.reserve(volume_);
  for (std::size_t r = 0; r < order_; ++r) {
    for (std::size_t c = 0; c < order_; ++c) {
      const Symbol s = cells_[r * order_ + c];
      if (s != kEmpty) out.push_back({static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), s});
    }
  }
  return out;
}

std::optional<LatinSquare> PartialLatinSquare::as_latin() const {
  // Full volume with the row/column checks done at construction is Latin.
  if (volume_ != order_ * order_) return std::nullopt;
  return LatinSquare(order_, cells_);
}

MolsSet::MolsSet(std::vector<LatinSquare> squares) : squares_(std::move(squares)) {
  if (squares_.empty()) return;
  order_ = squares_.front().order();
  for (const auto& sq : squares_) {
    if (sq.order() != order_) throw PreconditionError("all squares of a MOLS set must have the same order");
  }
}

EmbeddingWitness EmbeddingWitness::identity(std::size_t source_order, std::size_t host_order) {
  EmbeddingWitness w;
  w.host_order = host_order;
  w.rows.resize(source_order);
  std::iota(w.rows.begin(), w.rows.end(), 0u);
  w.cols = w.rows;
  w.symbols = w.rows;
  return w;
}

bool is_permutation(std::span<const std::uint32_t> perm) noexcept {
  std::vector<bool> seen(perm.size(), false);
  for (auto v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace latin
