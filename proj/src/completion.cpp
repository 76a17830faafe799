#include "latin/completion.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "latin/bipartite.hpp"
#include "latin/error.hpp"
#include "latin/verify.hpp"

namespace latin {

namespace {

constexpr Symbol kEmpty = PartialLatinSquare::kEmpty;

// Portable seeded shuffle (std::shuffle's draws are implementation-defined).
class Shuffler {
 public:
  explicit Shuffler(std::uint64_t seed) : gen_(seed) {}

  template <class T>
  void operator()(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[gen_() % i]);
  }

 private:
  std::mt19937_64 gen_;
};

// Empty corner cells get the smallest symbol of [0, t) absent from their row
// and column, row-major. At most 2n - 2 symbols are ever excluded.
std::vector<Symbol> fill_corner(const PartialLatinSquare& p, std::size_t t) {
  const std::size_t n = p.order();
  std::vector<Symbol> corner(p.cells().begin(), p.cells().end());
  std::vector<std::uint8_t> in_row(n * t, 0), in_col(n * t, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (const Symbol s = corner[r * n + c]; s != kEmpty) in_row[r * t + s] = in_col[c * t + s] = 1;
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Symbol& slot = corner[r * n + c];
      if (slot != kEmpty) continue;
      Symbol s = 0;
      while (s < t && (in_row[r * t + s] || in_col[c * t + s])) ++s;
      if (s == t) throw InvariantViolation("corner fill ran out of symbols");
      slot = s;
      in_row[r * t + s] = in_col[c * t + s] = 1;
    }
  }
  return corner;
}

// Rows of the corner versus the symbols each row still lacks; every row has
// degree t - n and every symbol degree at most n.
BipartiteGraph missing_in_rows(const std::vector<Symbol>& corner, std::size_t n, std::size_t t,
                               Shuffler* shuffle) {
  std::vector<BipartiteGraph::Edge> edges;
  std::vector<std::uint8_t> present(t);
  for (std::uint32_t r = 0; r < n; ++r) {
    std::fill(present.begin(), present.end(), 0);
    for (std::size_t c = 0; c < n; ++c) present[corner[r * n + c]] = 1;
    for (std::uint32_t s = 0; s < t; ++s) {
      if (!present[s]) edges.push_back({r, s});
    }
  }
  if (shuffle) (*shuffle)(edges);
  BipartiteGraph g(n, t);
  for (const auto& e : edges) g.add_edge(e.left, e.right);
  return g;
}

// Columns of a Latin rectangle versus the symbols each column lacks; regular
// of degree t - rows.
BipartiteGraph missing_in_columns(const LatinRectangle& rect, Shuffler* shuffle) {
  const std::size_t t = rect.cols;
  std::vector<BipartiteGraph::Edge> edges;
  std::vector<std::uint8_t> present(t);
  for (std::uint32_t c = 0; c < t; ++c) {
    std::fill(present.begin(), present.end(), 0);
    for (std::size_t r = 0; r < rect.rows; ++r) present[rect(r, c)] = 1;
    for (std::uint32_t s = 0; s < t; ++s) {
      if (!present[s]) edges.push_back({c, s});
    }
  }
  if (shuffle) (*shuffle)(edges);
  BipartiteGraph g(t, t);
  for (const auto& e : edges) g.add_edge(e.left, e.right);
  return g;
}

void check_rectangle(const LatinRectangle& rect) {
  const std::size_t t = rect.cols;
  std::vector<std::uint8_t> seen(t);
  for (std::size_t r = 0; r < rect.rows; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < t; ++c) {
      if (rect(r, c) >= t || seen[rect(r, c)]++) {
        throw InvariantViolation("row " + std::to_string(r) + " of the extended rectangle is not a permutation");
      }
    }
  }
  for (std::size_t c = 0; c < t; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < rect.rows; ++r) {
      if (seen[rect(r, c)]++) throw InvariantViolation("column " + std::to_string(c) + " repeats a symbol");
    }
  }
}

LatinRectangle place_corner(const std::vector<Symbol>& corner, std::size_t n, std::size_t t) {
  LatinRectangle rect{n, t, std::vector<Symbol>(n * t, kEmpty)};
  for (std::size_t r = 0; r < n; ++r) {
    std::copy_n(corner.begin() + static_cast<std::ptrdiff_t>(r * n), n,
                rect.cells.begin() + static_cast<std::ptrdiff_t>(r * t));
  }
  return rect;
}

// Colour classes of the rows-versus-symbols graph become the new columns;
// `column_of[c]` is the target column of colour c.
void place_row_colours(LatinRectangle& rect, const BipartiteGraph& g, const std::vector<std::uint32_t>& colour,
                       const std::vector<std::uint32_t>& column_of) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    rect.cells[edge.left * rect.cols + column_of[colour[e]]] = edge.right;
  }
}

LatinSquare stack(const LatinRectangle& top, const std::vector<Symbol>& bottom, std::size_t t) {
  std::vector<Symbol> cells(top.cells);
  cells.insert(cells.end(), bottom.begin(), bottom.end());
  if (cells.size() != t * t) throw InvariantViolation("completed square has the wrong size");
  return LatinSquare(t, std::move(cells));
}

void check_result(const LatinSquare& out, const PartialLatinSquare& p) {
  if (auto rep = is_latin(out); !rep.ok()) throw InvariantViolation("completion is not latin: " + rep.describe());
  if (!check_embedding(p, out, EmbeddingWitness::identity(p.order(), out.order()))) {
    throw InvariantViolation("completion does not contain the partial square");
  }
}

}  // namespace

LatinRectangle evans_rectangle(const PartialLatinSquare& p, std::size_t t) {
  const std::size_t n = p.order();
  if (t < 2 * n) {
    throw PreconditionError("embedding order " + std::to_string(t) + " is below 2n = " + std::to_string(2 * n));
  }
  const auto corner = fill_corner(p, t);
  LatinRectangle rect = place_corner(corner, n, t);
  const std::size_t k = t - n;
  const BipartiteGraph g = missing_in_rows(corner, n, t, nullptr);
  const auto colour = bipartite_edge_coloring(g, k);
  std::vector<std::uint32_t> column_of(k);
  std::iota(column_of.begin(), column_of.end(), static_cast<std::uint32_t>(n));
  place_row_colours(rect, g, colour, column_of);
  check_rectangle(rect);
  return rect;
}

LatinSquare evans_complete(const PartialLatinSquare& p, std::size_t t) {
  const LatinRectangle top = evans_rectangle(p, t);
  const std::size_t k = t - p.order();
  const BipartiteGraph g = missing_in_columns(top, nullptr);
  const auto colour = bipartite_edge_coloring(g, k);
  std::vector<Symbol> bottom(k * t, kEmpty);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    bottom[colour[e] * t + edge.left] = edge.right;
  }
  LatinSquare out = stack(top, bottom, t);
  check_result(out, p);
  return out;
}

bool is_idempotent_compatible(const PartialLatinSquare& p) noexcept {
  const std::size_t n = p.order();
  const auto cells = p.cells();
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol d = cells[i * n + i];
    if (d != kEmpty) {
      if (d != i) return false;
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (cells[i * n + j] == i || cells[j * n + i] == i) return false;
    }
  }
  return true;
}

namespace {

// One perfect matching per colour of the columns-versus-symbols graph,
// stored both ways round.
struct Factorization {
  std::size_t t = 0;
  std::vector<std::vector<std::uint32_t>> sym_of_col;  // [factor][column]
  std::vector<std::vector<std::uint32_t>> col_of_sym;  // [factor][symbol]

  bool holds_diagonal(std::size_t f, std::uint32_t col) const { return sym_of_col[f][col] == col; }

  // Columns of the cycle through `start` alternating between factors a and b.
  std::vector<std::uint32_t> cycle(std::size_t a, std::size_t b, std::uint32_t start) const {
    std::vector<std::uint32_t> cols;
    std::uint32_t c = start;
    do {
      cols.push_back(c);
      c = col_of_sym[b][sym_of_col[a][c]];
    } while (c != start);
    return cols;
  }

  void swap_cycle(std::size_t a, std::size_t b, const std::vector<std::uint32_t>& cols) {
    for (auto c : cols) std::swap(sym_of_col[a][c], sym_of_col[b][c]);
    for (auto c : cols) {
      col_of_sym[a][sym_of_col[a][c]] = c;
      col_of_sym[b][sym_of_col[b][c]] = c;
    }
  }
};

// Rearranges the factors by Kempe swaps until every diagonal edge (j, j),
// j in [n, t), sits in its own factor. Returns the factor for each such j.
std::optional<std::vector<std::size_t>> separate_diagonal(Factorization& fz, std::size_t n, std::uint64_t seed) {
  const std::size_t t = fz.t;
  const std::size_t k = t - n;
  std::mt19937_64 gen(seed);

  auto owners = [&] {
    std::vector<std::vector<std::uint32_t>> by_factor(k);
    for (std::uint32_t j = static_cast<std::uint32_t>(n); j < t; ++j) {
      for (std::size_t f = 0; f < k; ++f) {
        if (fz.holds_diagonal(f, j)) by_factor[f].push_back(j);
      }
    }
    return by_factor;
  };

  const std::size_t budget = 40 * k + 40;
  for (std::size_t step = 0; step < budget; ++step) {
    const auto by_factor = owners();
    std::vector<std::size_t> crowded, vacant;
    for (std::size_t f = 0; f < k; ++f) {
      if (by_factor[f].size() >= 2) crowded.push_back(f);
      if (by_factor[f].empty()) vacant.push_back(f);
    }
    if (crowded.empty()) {
      std::vector<std::size_t> factor_of(k);
      for (std::size_t f = 0; f < k; ++f) factor_of[by_factor[f].front() - n] = f;
      return factor_of;
    }

    // A cycle carrying some but not all of a crowded factor's diagonal
    // edges into an empty factor strictly reduces the total excess.
    bool progressed = false;
    for (auto a : crowded) {
      for (auto b : vacant) {
        for (auto j : by_factor[a]) {
          const auto cols = fz.cycle(a, b, j);
          const auto carried = std::count_if(cols.begin(), cols.end(), [&](auto c) { return fz.holds_diagonal(a, c); });
          if (static_cast<std::size_t>(carried) < by_factor[a].size()) {
            fz.swap_cycle(a, b, cols);
            progressed = true;
            break;
          }
        }
        if (progressed) break;
      }
      if (progressed) break;
    }
    if (progressed) continue;

    // Stuck: perturb with a random Kempe swap between two factors.
    if (k < 2) break;
    const std::size_t a = gen() % k;
    const std::size_t b = (a + 1 + gen() % (k - 1)) % k;
    fz.swap_cycle(a, b, fz.cycle(a, b, static_cast<std::uint32_t>(gen() % t)));
  }
  return std::nullopt;
}

std::optional<LatinSquare> idempotent_attempt(const std::vector<Symbol>& corner, std::size_t n, std::size_t t,
                                              std::size_t attempt) {
  const std::size_t k = t - n;
  std::optional<Shuffler> shuffle;
  if (attempt > 0) shuffle.emplace(0x9e3779b97f4a7c15ULL * attempt);
  Shuffler* sh = shuffle ? &*shuffle : nullptr;

  // Top n rows: colour classes go to columns [n, t) so that column j never
  // receives symbol j, which is reserved for the diagonal cell (j, j).
  LatinRectangle top = place_corner(corner, n, t);
  const BipartiteGraph rows_g = missing_in_rows(corner, n, t, sh);
  const auto colour = bipartite_edge_coloring(rows_g, k);
  std::vector<std::uint8_t> class_has(k * t, 0);
  for (std::size_t e = 0; e < rows_g.edge_count(); ++e) class_has[colour[e] * t + rows_g.edges()[e].right] = 1;

  BipartiteGraph assign(k, k);
  std::vector<std::uint32_t> order(k);
  std::iota(order.begin(), order.end(), 0u);
  if (sh) (*sh)(order);
  for (auto c : order) {
    for (std::uint32_t j = 0; j < k; ++j) {
      if (!class_has[c * t + n + j]) assign.add_edge(c, j);
    }
  }
  const Matching m = bipartite_max_matching(assign);
  if (m.size() != k) return std::nullopt;
  std::vector<std::uint32_t> column_of(k);
  for (auto e : m.edges) column_of[assign.edges()[e].left] = static_cast<std::uint32_t>(n + assign.edges()[e].right);
  place_row_colours(top, rows_g, colour, column_of);
  check_rectangle(top);

  // Bottom rows: a 1-factorisation of the regular columns-versus-symbols
  // graph with factor j holding the edge (column j, symbol j).
  const BipartiteGraph cols_g = missing_in_columns(top, sh);
  const auto factor = bipartite_edge_coloring(cols_g, k);
  Factorization fz{t, std::vector<std::vector<std::uint32_t>>(k, std::vector<std::uint32_t>(t)),
                   std::vector<std::vector<std::uint32_t>>(k, std::vector<std::uint32_t>(t))};
  for (std::size_t e = 0; e < cols_g.edge_count(); ++e) {
    const auto& edge = cols_g.edges()[e];
    fz.sym_of_col[factor[e]][edge.left] = edge.right;
    fz.col_of_sym[factor[e]][edge.right] = edge.left;
  }
  const auto factor_of = separate_diagonal(fz, n, attempt + 1);
  if (!factor_of) return std::nullopt;

  std::vector<Symbol> bottom(k * t);
  for (std::size_t i = 0; i < k; ++i) {
    std::copy(fz.sym_of_col[(*factor_of)[i]].begin(), fz.sym_of_col[(*factor_of)[i]].end(),
              bottom.begin() + static_cast<std::ptrdiff_t>(i * t));
  }
  return stack(top, bottom, t);
}

}  // namespace

LatinSquare idempotent_complete(const PartialLatinSquare& p, std::size_t t, IdempotentOptions options) {
  const std::size_t n = p.order();
  if (t < 2 * n + 1) {
    throw PreconditionError("idempotent embedding order " + std::to_string(t) + " is below 2n + 1 = " +
                            std::to_string(2 * n + 1));
  }
  if (!is_idempotent_compatible(p)) {
    throw PreconditionError("partial square is not idempotent-compatible (diagonal cell (i,i) must be i or free)");
  }

  std::vector<Symbol> with_diag(p.cells().begin(), p.cells().end());
  for (std::size_t i = 0; i < n; ++i) with_diag[i * n + i] = static_cast<Symbol>(i);
  const auto corner = fill_corner(PartialLatinSquare(n, std::move(with_diag)), t);

  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(1, options.max_attempts); ++attempt) {
    auto out = idempotent_attempt(corner, n, t, attempt);
    if (!out) continue;
    check_result(*out, p);
    if (!is_idempotent(*out)) throw InvariantViolation("idempotent completion has a wrong diagonal entry");
    return *std::move(out);
  }
  throw InvariantViolation("idempotent completion failed after " + std::to_string(options.max_attempts) +
                           " attempts for order " + std::to_string(n) + " into " + std::to_string(t));
}

}  // namespace latin
