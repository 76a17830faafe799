#include "latin/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "latin/error.hpp"

namespace latin {

BipartiteGraph::BipartiteGraph(std::size_t left_count, std::size_t right_count)
    : left_adj_(left_count), right_deg_(right_count, 0) {}

std::size_t BipartiteGraph::add_edge(std::uint32_t left, std::uint32_t right) {
  if (left >= left_adj_.size() || right >= right_deg_.size()) throw PreconditionError("edge endpoint out of range");
  edges_.push_back({left, right});
  left_adj_[left].push_back(edges_.size() - 1);
  ++right_deg_[right];
  return edges_.size() - 1;
}

std::size_t BipartiteGraph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& adj : left_adj_) d = std::max(d, adj.size());
  for (auto r : right_deg_) d = std::max(d, r);
  return d;
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        left_edge_(g.left_count(), kUnmatched),
        right_edge_(g.right_count(), kUnmatched),
        dist_(g.left_count()),
        cursor_(g.left_count()) {}

  Matching run() {
    while (bfs()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (std::uint32_t u = 0; u < g_.left_count(); ++u) {
        if (left_edge_[u] == kUnmatched) dfs(u);
      }
    }
    Matching m;
    m.left_edge = left_edge_;
    m.right_edge = right_edge_;
    for (auto e : left_edge_) {
      if (e != kUnmatched) m.edges.push_back(e);
    }
    return m;
  }

 private:
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < g_.left_count(); ++u) {
      if (left_edge_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop();
      for (auto e : g_.left_edges(u)) {
        const auto back = right_edge_[g_.edges()[e].right];
        if (back == kUnmatched) {
          found = true;
        } else {
          const auto w = g_.edges()[back].left;
          if (dist_[w] == kInf) {
            dist_[w] = dist_[u] + 1;
            queue.push(w);
          }
        }
      }
    }
    return found;
  }

  bool dfs(std::uint32_t u) {
    const auto& adj = g_.left_edges(u);
    for (; cursor_[u] < adj.size(); ++cursor_[u]) {
      const auto e = adj[cursor_[u]];
      const auto v = g_.edges()[e].right;
      const auto back = right_edge_[v];
      if (back == kUnmatched || (dist_[g_.edges()[back].left] == dist_[u] + 1 && dfs(g_.edges()[back].left))) {
        left_edge_[u] = e;
        right_edge_[v] = e;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<std::size_t> left_edge_;
  std::vector<std::size_t> right_edge_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

Matching bipartite_max_matching(const BipartiteGraph& g) { return HopcroftKarp(g).run(); }

std::vector<std::uint32_t> bipartite_edge_coloring(const BipartiteGraph& g, std::size_t colors) {
  if (colors < g.max_degree()) {
    throw PreconditionError("edge colouring needs at least " + std::to_string(g.max_degree()) + " colours, got " +
                            std::to_string(colors));
  }
  std::vector<std::uint32_t> color(g.edge_count(), 0);
  if (g.edge_count() == 0) return color;

  // Pad both sides to the same vertex count and every degree up to
  // `colors` with dummy edges; real edges keep their ids.
  const std::size_t n = std::max(g.left_count(), g.right_count());
  std::vector<BipartiteGraph::Edge> edges = g.edges();
  std::vector<std::size_t> left_deficit(n, colors), right_deficit(n, colors);
  for (const auto& e : edges) {
    --left_deficit[e.left];
    --right_deficit[e.right];
  }
  for (std::uint32_t u = 0, v = 0; u < n; ++u) {
    while (left_deficit[u] > 0) {
      while (right_deficit[v] == 0) ++v;
      const auto take = std::min(left_deficit[u], right_deficit[v]);
      for (std::size_t i = 0; i < take; ++i) edges.push_back({u, v});
      left_deficit[u] -= take;
      right_deficit[v] -= take;
    }
  }

  std::vector<bool> alive(edges.size(), true);
  for (std::uint32_t c = 0; c < colors; ++c) {
    BipartiteGraph work(n, n);
    std::vector<std::size_t> original;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!alive[e]) continue;
      work.add_edge(edges[e].left, edges[e].right);
      original.push_back(e);
    }
    const Matching m = bipartite_max_matching(work);
    if (m.size() != n) throw InvariantViolation("regular bipartite multigraph without a perfect matching");
    for (auto id : m.edges) {
      const auto e = original[id];
      alive[e] = false;
      if (e < color.size()) color[e] = c;
    }
  }
  return color;
}

}  // namespace latin
