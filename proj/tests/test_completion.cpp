#include <doctest.h>

#include <set>

#include "latin/bipartite.hpp"
#include "latin/completion.hpp"
#include "latin/error.hpp"
#include "latin/verify.hpp"
#include "support/generators.hpp"

using namespace latin;
using latin::testing::Rng;

namespace {

bool agrees(const PartialLatinSquare& p, const LatinSquare& l) {
  for (const auto& t : p.triples()) {
    if (l(t.row, t.col) != t.symbol) return false;
  }
  return true;
}

void check_proper(const BipartiteGraph& g, const std::vector<std::uint32_t>& colour, std::size_t colours) {
  REQUIRE(colour.size() == g.edge_count());
  std::set<std::pair<std::uint32_t, std::uint32_t>> left, right;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    REQUIRE(colour[e] < colours);
    CHECK(left.insert({g.edges()[e].left, colour[e]}).second);
    CHECK(right.insert({g.edges()[e].right, colour[e]}).second);
  }
}

}  // namespace

TEST_CASE("matching on small graphs") {
  BipartiteGraph empty(3, 3);
  CHECK(bipartite_max_matching(empty).size() == 0);
  CHECK(bipartite_edge_coloring(empty, 0).empty());

  BipartiteGraph k22(2, 2);
  for (std::uint32_t a = 0; a < 2; ++a) {
    for (std::uint32_t b = 0; b < 2; ++b) k22.add_edge(a, b);
  }
  CHECK(bipartite_max_matching(k22).size() == 2);
  const auto col = bipartite_edge_coloring(k22, 2);
  check_proper(k22, col, 2);
  CHECK_THROWS_AS(bipartite_edge_coloring(k22, 1), PreconditionError);

  // A path a0-b0-a1-b1 where greedy on a0 first would block a1.
  BipartiteGraph path(2, 2);
  path.add_edge(0, 0);
  path.add_edge(0, 1);
  path.add_edge(1, 0);
  CHECK(bipartite_max_matching(path).size() == 2);
}

TEST_CASE("3-regular bipartite graph on 4 + 4 vertices splits into 3 perfect matchings") {
  // Left i joins right i, i + 1, i + 2 (mod 4).
  BipartiteGraph g(4, 4);
  for (std::uint32_t i = 0; i < 4; ++i) {
    for (std::uint32_t d = 0; d < 3; ++d) g.add_edge(i, (i + d) % 4);
  }
  const auto col = bipartite_edge_coloring(g, 3);
  check_proper(g, col, 3);
  for (std::uint32_t c = 0; c < 3; ++c) {
    CHECK(std::count(col.begin(), col.end(), c) == 4);
  }
}

TEST_CASE("edge colouring of random multigraphs uses max-degree colours") {
  Rng rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t l = 1 + rng() % 8, r = 1 + rng() % 8, m = rng() % 30;
    BipartiteGraph g(l, r);
    for (std::size_t e = 0; e < m; ++e) g.add_edge(rng() % l, rng() % r);
    const auto delta = g.max_degree();
    check_proper(g, bipartite_edge_coloring(g, delta), std::max<std::size_t>(delta, 1));

    // Maximum matching: no augmenting path, checked by comparing to a
    // brute-force maximum over small graphs.
    const auto mm = bipartite_max_matching(g);
    std::size_t best = 0;
    std::vector<bool> used_r(r, false);
    auto rec = [&](auto&& self, std::size_t u, std::size_t size) -> void {
      best = std::max(best, size);
      if (u == l || size + (l - u) <= best) return;
      self(self, u + 1, size);
      for (auto e : g.left_edges(static_cast<std::uint32_t>(u))) {
        const auto v = g.edges()[e].right;
        if (used_r[v]) continue;
        used_r[v] = true;
        self(self, u + 1, size + 1);
        used_r[v] = false;
      }
    };
    rec(rec, 0, 0);
    CHECK(mm.size() == best);
  }
}

TEST_CASE("evans completion examples") {
  const auto one = evans_complete(PartialLatinSquare(1, {0}), 2);
  CHECK(one.order() == 2);
  CHECK(one(0, 0) == 0);
  CHECK(is_latin(one).ok());

  const auto left = testing::example_left();
  const auto eight = evans_complete(left, 8);
  CHECK(is_latin(eight).ok());
  CHECK(agrees(left, eight));

  CHECK(is_latin(evans_complete(PartialLatinSquare(3), 6)).ok());
  CHECK_THROWS_AS(evans_complete(left, 7), PreconditionError);
}

TEST_CASE("evans completion on random partial squares") {
  Rng rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng() % 8;
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto p = testing::random_partial(n, density, rng);
    for (std::size_t t : {2 * n, 2 * n + 3}) {
      const auto rect = evans_rectangle(p, t);
      REQUIRE(rect.rows == n);
      REQUIRE(rect.cols == t);
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<Symbol> row(rect.cells.begin() + r * t, rect.cells.begin() + (r + 1) * t);
        CHECK(is_permutation(row));
      }
      const auto l = evans_complete(p, t);
      CHECK(l.order() == t);
      CHECK(testing::brute_latin(l));
      CHECK(agrees(p, l));
      CHECK(evans_complete(p, t) == l);
    }
    CHECK_THROWS_AS(evans_complete(p, 2 * n - 1), PreconditionError);
  }
}

TEST_CASE("idempotent completion examples") {
  const auto three = idempotent_complete(PartialLatinSquare(1, {0}), 3);
  CHECK(is_latin(three).ok());
  CHECK(is_idempotent(three));
  // The idempotent square of order 3 is unique; the search finds it.
  const auto oracle = testing::search_idempotent(3);
  REQUIRE(oracle.has_value());
  CHECK(three == *oracle);
  CHECK(three == LatinSquare::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));

  const auto five = idempotent_complete(PartialLatinSquare(2), 5);
  CHECK(is_latin(five).ok());
  CHECK(is_idempotent(five));
  CHECK(testing::search_idempotent(5).has_value());

  CHECK_THROWS_AS(idempotent_complete(PartialLatinSquare(2), 4), PreconditionError);
  // Symbol 1 in row 1 off the diagonal blocks (1,1) = 1.
  constexpr Symbol e = PartialLatinSquare::kEmpty;
  const PartialLatinSquare clash(2, {e, e, 1, e});
  CHECK_FALSE(is_idempotent_compatible(clash));
  CHECK_THROWS_AS(idempotent_complete(clash, 5), PreconditionError);
  CHECK_FALSE(is_idempotent_compatible(PartialLatinSquare(2, {1, e, e, e})));
  CHECK(is_idempotent_compatible(PartialLatinSquare(2, {0, e, e, 1})));
}

TEST_CASE("idempotent completion on random compatible partial squares") {
  Rng rng(77);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng() % 8;
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto p = testing::random_idempotent_partial(n, density, rng);
    REQUIRE(is_idempotent_compatible(p));
    for (std::size_t t : {2 * n + 1, 2 * n + 2, 2 * n + 4}) {
      CAPTURE(n);
      CAPTURE(t);
      const auto l = idempotent_complete(p, t);
      REQUIRE(l.order() == t);
      CHECK(testing::brute_latin(l));
      for (std::size_t i = 0; i < t; ++i) CHECK(l(i, i) == i);
      CHECK(agrees(p, l));
    }
  }
}

TEST_CASE("idempotent completion is deterministic") {
  Rng rng(5);
  const auto p = testing::random_idempotent_partial(6, 0.6, rng);
  CHECK(idempotent_complete(p, 13) == idempotent_complete(p, 13));
}
