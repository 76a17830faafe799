#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace latin {

/// Bipartite multigraph with edges addressed by insertion index.
class BipartiteGraph {
 public:
  struct Edge {
    std::uint32_t left;
    std::uint32_t right;
  };

  BipartiteGraph(std::size_t left_count, std::size_t right_count);

  std::size_t add_edge(std::uint32_t left, std::uint32_t right);

  std::size_t left_count() const noexcept { return left_adj_.size(); }
  std::size_t right_count() const noexcept { return right_deg_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Edge ids incident to a left vertex, in insertion order.
  const std::vector<std::size_t>& left_edges(std::uint32_t left) const noexcept { return left_adj_[left]; }

  std::size_t left_degree(std::uint32_t v) const noexcept { return left_adj_[v].size(); }
  std::size_t right_degree(std::uint32_t v) const noexcept { return right_deg_[v]; }
  std::size_t max_degree() const noexcept;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> left_adj_;
  std::vector<std::size_t> right_deg_;
};

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

struct Matching {
  /// Ids of matched edges, ordered by left vertex.
  std::vector<std::size_t> edges;
  /// Matched edge id per left vertex, or kUnmatched.
  std::vector<std::size_t> left_edge;
  /// Matched edge id per right vertex, or kUnmatched.
  std::vector<std::size_t> right_edge;

  std::size_t size() const noexcept { return edges.size(); }
};

/// Maximum matching (Hopcroft-Karp). Ties are broken by edge insertion
/// order, so the result is deterministic.
Matching bipartite_max_matching(const BipartiteGraph& g);

/// Proper edge colouring with colours in [0, colors): colour per edge id.
/// The graph is padded to a colors-regular multigraph and split into
/// perfect matchings, one per colour (Koenig). Throws PreconditionError if
/// colors < max degree.
std::vector<std::uint32_t> bipartite_edge_coloring(const BipartiteGraph& g, std::size_t colors);

}  // namespace latin
