#include "latin/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "latin/error.hpp"

namespace latin {

namespace {

std::string cell_str(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

LatinReport malformed(std::string detail) {
  LatinReport rep;
  rep.status = LatinStatus::malformed;
  rep.detail = std::move(detail);
  return rep;
}

// Row-major scan; row duplicates are checked before column duplicates at
// each cell so the first reported violation is deterministic.
template <class Get>
LatinReport scan_latin(std::size_t n, Get get) {
  std::vector<std::uint32_t> row_stamp(n, 0);
  std::vector<std::uint8_t> col_seen(n * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto s = static_cast<std::size_t>(get(r, c));
      LatinReport rep;
      rep.row = r;
      rep.col = c;
      rep.symbol = static_cast<std::int64_t>(s);
      if (row_stamp[s] == r + 1) {
        rep.status = LatinStatus::row_repeat;
        return rep;
      }
      row_stamp[s] = static_cast<std::uint32_t>(r + 1);
      if (col_seen[c * n + s]) {
        rep.status = LatinStatus::column_repeat;
        return rep;
      }
      col_seen[c * n + s] = 1;
    }
  }
  return {};
}

// Orthogonality of two squares already known to be Latin.
OrthogonalityReport scan_pairs(const LatinSquare& a, const LatinSquare& b) {
  const std::size_t n = a.order();
  const auto ac = a.cells();
  const auto bc = b.cells();
  std::vector<std::uint8_t> seen(n * n, 0);
  for (std::size_t i = 0; i < n * n; ++i) {
    const std::size_t key = static_cast<std::size_t>(ac[i]) * n + bc[i];
    if (!seen[key]) {
      seen[key] = 1;
      continue;
    }
    OrthogonalityReport rep;
    rep.status = OrthogonalityStatus::repeated_pair;
    rep.a_symbol = ac[i];
    rep.b_symbol = bc[i];
    rep.later = {i / n, i % n};
    for (std::size_t j = 0; j < i; ++j) {
      if (ac[j] == ac[i] && bc[j] == bc[i]) {
        rep.earlier = {j / n, j % n};
        break;
      }
    }
    return rep;
  }
  return {};
}

}  // namespace

std::string LatinReport::describe() const {
  switch (status) {
    case LatinStatus::ok:
      return "ok";
    case LatinStatus::malformed:
      return "malformed: " + detail;
    case LatinStatus::row_repeat:
      return "row " + std::to_string(row) + " repeats symbol " + std::to_string(symbol) + " at " + cell_str(row, col);
    case LatinStatus::column_repeat:
      return "column " + std::to_string(col) + " repeats symbol " + std::to_string(symbol) + " at " +
             cell_str(row, col);
  }
  return "unknown";
}

std::string OrthogonalityReport::describe() const {
  switch (status) {
    case OrthogonalityStatus::ok:
      return "ok";
    case OrthogonalityStatus::first_not_latin:
      return "first square not latin: " + latin.describe();
    case OrthogonalityStatus::second_not_latin:
      return "second square not latin: " + latin.describe();
    case OrthogonalityStatus::repeated_pair:
      return "pair (" + std::to_string(a_symbol) + "," + std::to_string(b_symbol) + ") at " +
             cell_str(earlier.first, earlier.second) + " and " + cell_str(later.first, later.second);
    case OrthogonalityStatus::different_cells:
      return "filled cells differ at " + cell_str(later.first, later.second);
  }
  return "unknown";
}

LatinReport is_latin(const LatinSquare& square) {
  if (square.order() == 0) return malformed("empty grid");
  return scan_latin(square.order(), [&](std::size_t r, std::size_t c) { return square(r, c); });
}

LatinReport is_latin(const RawGrid& grid) {
  const std::size_t n = grid.size();
  if (n == 0) return malformed("empty grid");
  for (std::size_t r = 0; r < n; ++r) {
    if (grid[r].size() != n) {
      return malformed("row " + std::to_string(r) + " has " + std::to_string(grid[r].size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = grid[r][c];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        auto rep = malformed("symbol " + std::to_string(v) + " at " + cell_str(r, c) + " outside [0," +
                             std::to_string(n) + ")");
        rep.row = r;
        rep.col = c;
        rep.symbol = v;
        return rep;
      }
    }
  }
  return scan_latin(n, [&](std::size_t r, std::size_t c) { return grid[r][c]; });
}

OrthogonalityReport are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order()) throw PreconditionError("orthogonality needs squares of equal order");
  OrthogonalityReport rep;
  if (auto la = is_latin(a); !la.ok()) {
    rep.status = OrthogonalityStatus::first_not_latin;
    rep.latin = la;
    return rep;
  }
  if (auto lb = is_latin(b); !lb.ok()) {
    rep.status = OrthogonalityStatus::second_not_latin;
    rep.latin = lb;
    return rep;
  }
  return scan_pairs(a, b);
}

OrthogonalityReport are_orthogonal(const PartialLatinSquare& a, const PartialLatinSquare& b) {
  if (a.order() != b.order()) throw PreconditionError("orthogonality needs squares of equal order");
  const std::size_t n = a.order();
  const auto ac = a.cells();
  const auto bc = b.cells();
  std::vector<std::uint8_t> seen(n * n, 0);
  for (std::size_t i = 0; i < n * n; ++i) {
    const bool fa = ac[i] != PartialLatinSquare::kEmpty;
    const bool fb = bc[i] != PartialLatinSquare::kEmpty;
    if (fa != fb) {
      OrthogonalityReport rep;
      rep.status = OrthogonalityStatus::different_cells;
      rep.later = {i / n, i % n};
      return rep;
    }
    if (!fa) continue;
    const std::size_t key = static_cast<std::size_t>(ac[i]) * n + bc[i];
    if (seen[key]) {
      OrthogonalityReport rep;
      rep.status = OrthogonalityStatus::repeated_pair;
      rep.a_symbol = ac[i];
      rep.b_symbol = bc[i];
      rep.later = {i / n, i % n};
      for (std::size_t j = 0; j < i; ++j) {
        if (ac[j] == ac[i] && bc[j] == bc[i]) {
          rep.earlier = {j / n, j % n};
          break;
        }
      }
      return rep;
    }
    seen[key] = 1;
  }
  return {};
}

std::vector<std::pair<std::size_t, std::size_t>> CertificationReport::failing_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& p : pairs) {
    if (!p.report.ok()) out.emplace_back(p.first, p.second);
  }
  return out;
}

CertificationReport verify_mols(const MolsSet& set, VerifyOptions options) {
  if (set.empty()) throw PreconditionError("cannot verify an empty MOLS set");
  const auto start = std::chrono::steady_clock::now();

  CertificationReport report;
  report.order = set.order();
  const std::size_t t = set.size();
  report.squares.reserve(t);
  for (const auto& sq : set) report.squares.push_back(is_latin(sq));

  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) report.pairs.push_back({i, j, {}});
  }

  auto check = [&](PairCheck& pc) {
    if (!report.squares[pc.first].ok()) {
      pc.report.status = OrthogonalityStatus::first_not_latin;
      pc.report.latin = report.squares[pc.first];
    } else if (!report.squares[pc.second].ok()) {
      pc.report.status = OrthogonalityStatus::second_not_latin;
      pc.report.latin = report.squares[pc.second];
    } else {
      pc.report = scan_pairs(set[pc.first], set[pc.second]);
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, report.pairs.size()));
  if (threads <= 1) {
    for (auto& pc : report.pairs) check(pc);
  } else {
    // Each worker writes only its own slots, so the merged report is the
    // same as a sequential run.
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t k = next++; k < report.pairs.size(); k = next++) check(report.pairs[k]);
      });
    }
  }

  report.certified = std::all_of(report.squares.begin(), report.squares.end(), [](auto& s) { return s.ok(); }) &&
                     std::all_of(report.pairs.begin(), report.pairs.end(), [](auto& p) { return p.report.ok(); });
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

MolsSet certify(MolsSet set) {
  const auto report = verify_mols(set);
  if (!report.certified) {
    std::ostringstream msg;
    msg << "MOLS set of order " << set.order() << " failed certification";
    for (std::size_t i = 0; i < report.squares.size(); ++i) {
      if (!report.squares[i].ok()) {
        msg << ": square " << i << " is not latin (" << report.squares[i].describe() << ")";
        throw CertificationError(msg.str());
      }
    }
    const auto& bad = *std::find_if(report.pairs.begin(), report.pairs.end(), [](auto& p) { return !p.report.ok(); });
    msg << ": pair (" << bad.first << "," << bad.second << ") not orthogonal, " << bad.report.describe();
    throw CertificationError(msg.str());
  }
  set.certified_ = true;
  return set;
}

bool is_transversal(const LatinSquare& host, const Transversal& t) {
  const std::size_t n = host.order();
  for (const auto& cell : t.cells) {
    if (cell.row >= n || cell.col >= n) throw WitnessMismatch("transversal cell " + cell_str(cell.row, cell.col) +
                                                              " lies outside the host");
    if (host(cell.row, cell.col) != cell.symbol) {
      throw WitnessMismatch("transversal cell " + cell_str(cell.row, cell.col) + " claims symbol " +
                            std::to_string(cell.symbol) + " but host holds " +
                            std::to_string(host(cell.row, cell.col)));
    }
  }
  if (t.cells.size() != n) return false;
  std::vector<bool> rows(n, false), cols(n, false), syms(n, false);
  for (const auto& cell : t.cells) {
    if (rows[cell.row] || cols[cell.col] || syms[cell.symbol]) return false;
    rows[cell.row] = cols[cell.col] = syms[cell.symbol] = true;
  }
  return true;
}

namespace {

// A transversal stored as the column used in each row.
using ColumnChoice = std::vector<std::uint32_t>;

void enumerate_transversals(const LatinSquare& host, std::size_t row, ColumnChoice& current,
                            std::vector<bool>& col_used, std::vector<bool>& sym_used,
                            std::vector<ColumnChoice>& out) {
  const std::size_t n = host.order();
  if (row == n) {
    out.push_back(current);
    return;
  }
  for (std::uint32_t c = 0; c < n; ++c) {
    const Symbol s = host(row, c);
    if (col_used[c] || sym_used[s]) continue;
    col_used[c] = sym_used[s] = true;
    current[row] = c;
    enumerate_transversals(host, row + 1, current, col_used, sym_used, out);
    col_used[c] = sym_used[s] = false;
  }
}

bool disjoint(const ColumnChoice& a, const ColumnChoice& b) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r] == b[r]) return false;
  }
  return true;
}

// Every decomposition has exactly one transversal through each cell of row 0.
bool pick_disjoint(const std::vector<std::vector<const ColumnChoice*>>& by_first_col, std::size_t col,
                   std::vector<const ColumnChoice*>& chosen) {
  if (col == by_first_col.size()) return true;
  for (const ColumnChoice* cand : by_first_col[col]) {
    if (!std::all_of(chosen.begin(), chosen.end(), [&](const ColumnChoice* x) { return disjoint(*x, *cand); })) {
      continue;
    }
    chosen.push_back(cand);
    if (pick_disjoint(by_first_col, col + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<Transversal>> find_transversal_decomposition(const LatinSquare& host,
                                                                       DecompositionOptions options) {
  const std::size_t n = host.order();
  if (n > options.max_order) {
    throw PreconditionError("transversal search limited to order " + std::to_string(options.max_order) +
                            ", got " + std::to_string(n));
  }
  if (auto rep = is_latin(host); !rep.ok()) throw PreconditionError("host is not latin: " + rep.describe());

  std::vector<ColumnChoice> all;
  ColumnChoice current(n);
  std::vector<bool> col_used(n, false), sym_used(n, false);
  enumerate_transversals(host, 0, current, col_used, sym_used, all);

  std::vector<std::vector<const ColumnChoice*>> by_first_col(n);
  for (const auto& t : all) by_first_col[t[0]].push_back(&t);

  std::vector<const ColumnChoice*> chosen;
  if (!pick_disjoint(by_first_col, 0, chosen)) return std::nullopt;

  std::vector<Transversal> out;
  out.reserve(n);
  for (const ColumnChoice* t : chosen) {
    Transversal tr;
    for (std::uint32_t r = 0; r < n; ++r) tr.cells.push_back({r, (*t)[r], host(r, (*t)[r])});
    out.push_back(std::move(tr));
  }
  return out;
}

bool is_idempotent(const LatinSquare& square) noexcept {
  for (std::size_t i = 0; i < square.order(); ++i) {
    if (square(i, i) != i) return false;
  }
  return true;
}

bool check_embedding(const PartialLatinSquare& source, const LatinSquare& host, const EmbeddingWitness& witness) {
  const std::size_t n = source.order();
  const std::size_t m = host.order();
  if (witness.host_order != m) throw PreconditionError("witness host order does not match the host square");
  for (const auto* map : {&witness.rows, &witness.cols, &witness.symbols}) {
    if (map->size() != n) throw PreconditionError("witness maps must be defined on [0, source order)");
    for (auto v : *map) {
      if (v >= m) throw PreconditionError("witness map value outside [0, host order)");
    }
  }
  for (const auto* map : {&witness.rows, &witness.cols, &witness.symbols}) {
    std::vector<bool> hit(m, false);
    for (auto v : *map) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  for (const Triple& t : source.triples()) {
    if (host(witness.rows[t.row], witness.cols[t.col]) != witness.symbols[t.symbol]) return false;
  }
  return true;
}

}  // namespace latin
