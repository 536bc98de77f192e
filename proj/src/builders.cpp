#include "proxim/builders.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "proxim/errors.hpp"

namespace proxim {

Graph basic_generator(BasicKind kind, std::size_t n) {
  if (n == 0) throw InvalidArgument("generator needs at least one vertex");
  std::vector<Edge> edges;
  switch (kind) {
  case BasicKind::edgeless:
    break;
  case BasicKind::cycle:
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices, got " + std::to_string(n));
    [[fallthrough]];
  case BasicKind::path:
    for (std::size_t i = 0; i + 1 < n; ++i)
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
    if (kind == BasicKind::cycle) edges.push_back({static_cast<VertexId>(n - 1), 0});
    break;
  case BasicKind::complete:
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
    break;
  }
  return Graph::from_edge_list(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph::from_edge_list(10, edges);
}

LayerPlan::LayerPlan(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidArgument("layer plan must have at least one layer");
  for (std::size_t i = 0; i < sizes_.size(); ++i)
    if (sizes_[i] == 0) throw InvalidArgument("layer " + std::to_string(i) + " is empty");
}

std::size_t LayerPlan::total() const { return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0}); }

LayeredGraph sequential_sum(const LayerPlan& plan) {
  const auto& sizes = plan.sizes();
  std::vector<std::size_t> first(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) first[i + 1] = first[i] + sizes[i];

  LayeredGraph out;
  out.layer_of.resize(first.back());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    std::fill(out.layer_of.begin() + static_cast<std::ptrdiff_t>(first[i]),
              out.layer_of.begin() + static_cast<std::ptrdiff_t>(first[i + 1]), i);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
    for (std::size_t a = first[i]; a < first[i + 1]; ++a)
      for (std::size_t b = first[i + 1]; b < first[i + 2]; ++b)
        edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  out.graph = Graph::from_edge_list(first.back(), edges);
  return out;
}

Graph add_twins(const Graph& g, VertexId w, std::size_t count) {
  if (!g.valid(w)) throw InvalidArgument("twin source " + std::to_string(w) + " out of range");
  if (g.degree(w) == 0) throw InvalidArgument("twin source " + std::to_string(w) + " is isolated");
  if (count == 0) return g;
  std::vector<Edge> edges = g.edges();
  const auto n = g.order();
  for (std::size_t t = 0; t < count; ++t)
    for (VertexId x : g.neighbors(w)) edges.push_back({static_cast<VertexId>(n + t), x});
  return Graph::from_edge_list(n + count, edges);
}

LinkedUnion disjoint_union_with_links(std::span<const Graph> parts, std::span<const Link> links) {
  if (parts.empty()) throw InvalidArgument("disjoint union needs at least one part");
  LinkedUnion out;
  out.offsets.resize(parts.size());
  std::size_t total = 0;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.offsets[i] = total;
    for (const Edge& e : parts[i].edges())
      edges.push_back({static_cast<VertexId>(e.u + total), static_cast<VertexId>(e.v + total)});
    total += parts[i].order();
  }
  for (const Link& l : links) {
    if (l.part_a >= parts.size() || l.part_b >= parts.size())
      throw InvalidArgument("link refers to part " + std::to_string(std::max(l.part_a, l.part_b)) + " of " +
                            std::to_string(parts.size()));
    if (!parts[l.part_a].valid(l.vertex_a) || !parts[l.part_b].valid(l.vertex_b))
      throw InvalidArgument("link endpoint out of range in part");
    edges.push_back({static_cast<VertexId>(out.offsets[l.part_a] + l.vertex_a),
                     static_cast<VertexId>(out.offsets[l.part_b] + l.vertex_b)});
  }
  out.graph = Graph::from_edge_list(total, edges);
  return out;
}

bool is_connected(const Graph& g) {
  const auto n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

std::size_t min_degree(const Graph& g) {
  std::size_t best = g.degree(0);
  for (VertexId v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

} // namespace proxim
