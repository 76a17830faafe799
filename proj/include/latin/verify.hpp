#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latin/square.hpp"

namespace latin {

enum class LatinStatus {
  ok,
  malformed,      // wrong dimensions or symbol out of range
  row_repeat,     // symbol seen earlier in the same row
  column_repeat,  // symbol seen earlier in the same column
};

/// Outcome of is_latin. For repeats, (row, col) is the first offending cell in
/// row-major order and `symbol` its content.
struct LatinReport {
  LatinStatus status = LatinStatus::ok;
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t symbol = 0;
  std::string detail;

  bool ok() const noexcept { return status == LatinStatus::ok; }
  std::string describe() const;
};

/// Unvalidated input grid, as it might arrive from a caller.
using RawGrid = std::vector<std::vector<std::int64_t>>;

LatinReport is_latin(const LatinSquare& square);
LatinReport is_latin(const RawGrid& grid);

enum class OrthogonalityStatus {
  ok,
  first_not_latin,
  second_not_latin,
  repeated_pair,
  different_cells,  // partial squares whose filled cells differ
};

/// Outcome of are_orthogonal. For a repeated pair, `earlier` and `later` are
/// the two cells (row-major first repetition) superimposing to (a_symbol, b_symbol).
struct OrthogonalityReport {
  OrthogonalityStatus status = OrthogonalityStatus::ok;
  LatinReport latin;
  std::pair<std::size_t, std::size_t> earlier{};
  std::pair<std::size_t, std::size_t> later{};
  Symbol a_symbol = 0;
  Symbol b_symbol = 0;

  bool ok() const noexcept { return status == OrthogonalityStatus::ok; }
  std::string describe() const;
};

/// Orthogonality of two same-order squares in one pass over a dense table of
/// n*n flags. Throws PreconditionError on order mismatch.
OrthogonalityReport are_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// Orthogonality of partial squares: identical filled cells and no ordered
/// symbol pair repeated among them.
OrthogonalityReport are_orthogonal(const PartialLatinSquare& a, const PartialLatinSquare& b);

struct PairCheck {
  std::size_t first = 0;
  std::size_t second = 0;
  OrthogonalityReport report;
};

struct CertificationReport {
  std::size_t order = 0;
  std::vector<LatinReport> squares;
  /// All pairs i < j in lexicographic order.
  std::vector<PairCheck> pairs;
  bool certified = false;
  std::chrono::nanoseconds elapsed{0};

  std::vector<std::pair<std::size_t, std::size_t>> failing_pairs() const;
};

struct VerifyOptions {
  /// Worker threads for the pair checks; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Runs is_latin on every square and the orthogonality check on every pair.
/// The report does not depend on the thread count.
CertificationReport verify_mols(const MolsSet& set, VerifyOptions options = {});

/// Verifies and returns the set with its certified flag raised. Throws
/// CertificationError naming the first failing square or pair.
MolsSet certify(MolsSet set);

/// True iff the cells are `order` many with distinct rows, columns and
/// symbols. Throws WitnessMismatch if a cell disagrees with the host.
bool is_transversal(const LatinSquare& host, const Transversal& t);

struct DecompositionOptions {
  std::size_t max_order = 9;
};

/// Exact search for a partition of the host into `order` disjoint
/// transversals. nullopt means none exists. Throws PreconditionError above
/// the order cap or for a non-Latin host.
std::optional<std::vector<Transversal>> find_transversal_decomposition(const LatinSquare& host,
                                                                       DecompositionOptions options = {});

bool is_idempotent(const LatinSquare& square) noexcept;

/// True iff all three maps are injective and every filled cell of `source`
/// lands on an equal host triple. Throws PreconditionError if the maps have
/// the wrong length or point outside the host.
bool check_embedding(const PartialLatinSquare& source, const LatinSquare& host, const EmbeddingWitness& witness);

}  // namespace latin
