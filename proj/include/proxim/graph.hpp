#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace proxim {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph stored as compressed sparse rows.
/// Neighbour lists are sorted ascending and symmetric; there are no loops
/// and no repeated entries.
class Graph {
public:
  /// Single isolated vertex.
  Graph();

  /// Builds a graph from an unordered edge list. Duplicate pairs, in either
  /// orientation, are dropped. Throws InvalidArgument on n == 0, on an
  /// endpoint outside [0, n) or on a loop.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId u, VertexId v) const;
  bool valid(std::size_t v) const { return v < order(); }

  /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

} // namespace proxim
