#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "proxim/graph.hpp"

namespace proxim {

enum class BasicKind { path, cycle, complete, edgeless };

/// Vertices 0..n-1. Path edges (i, i+1); the cycle adds (n-1, 0).
Graph basic_generator(BasicKind kind, std::size_t n);

/// Petersen graph: outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
Graph petersen();

/// Ordered sizes of edgeless layers for a sequential sum.
class LayerPlan {
public:
  explicit LayerPlan(std::vector<std::size_t> sizes);

  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t total() const;

private:
  std::vector<std::size_t> sizes_;
};

struct LayeredGraph {
  Graph graph;
  /// Layer index of every vertex; vertices are numbered layer by layer.
  std::vector<std::size_t> layer_of;
};

/// Sequential sum of edgeless layers: consecutive layers are completely
/// joined, nothing else is adjacent.
LayeredGraph sequential_sum(const LayerPlan& plan);

/// Appends `count` twins of `w`, each adjacent to exactly N(w). New vertices
/// get ids order()..order()+count-1. Throws if w is isolated.
Graph add_twins(const Graph& g, VertexId w, std::size_t count);

struct Link {
  std::size_t part_a;
  VertexId vertex_a;
  std::size_t part_b;
  VertexId vertex_b;
};

struct LinkedUnion {
  Graph graph;
  /// offsets[i] is the id of vertex 0 of part i in the union.
  std::vector<std::size_t> offsets;
};

LinkedUnion disjoint_union_with_links(std::span<const Graph> parts, std::span<const Link> links);

bool is_connected(const Graph& g);
std::size_t min_degree(const Graph& g);

} // namespace proxim
