#include "proxim/graph.hpp"

#include <algorithm>
#include <string>

#include "proxim/errors.hpp"

namespace proxim {

Graph::Graph() : offsets_{0, 0} {}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw InvalidArgument("graph order must be at least 1");
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n)
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "): endpoint out of range for order " + std::to_string(n));
    if (e.u == e.v) throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + "): self-loop");
    ++degree[e.u];
    ++degree[e.v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  std::vector<VertexId> raw(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    raw[fill[e.u]++] = e.v;
    raw[fill[e.v]++] = e.u;
  }

  // Sort and deduplicate each row, then compact.
  std::vector<std::size_t> offsets(n + 1, 0);
  std::size_t out = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) raw[out++] = *it;
    offsets[v + 1] = out;
  }
  raw.resize(out);
  raw.shrink_to_fit();
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(raw);
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < order(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

} // namespace proxim
