#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "proxim/graph.hpp"
#include "proxim/rational.hpp"

namespace proxim {

/// BFS scratch space reused across sources: a flat frontier queue and an
/// epoch-stamped visited array, so no per-source allocation happens.
class BfsWorkspace {
public:
  explicit BfsWorkspace(std::size_t order);

  struct Summary {
    std::uint64_t total_distance = 0;
    std::uint32_t eccentricity = 0;
  };

  /// Distance sum and eccentricity of `source`. Throws DisconnectedGraph.
  Summary summarize(const Graph& g, VertexId source);

  /// Writes d(source, w) for every w into `out` (resized to the order).
  void distances(const Graph& g, VertexId source, std::vector<std::uint32_t>& out);

private:
  void check_reached(const Graph& g, std::size_t reached) const;

  std::vector<std::uint32_t> stamp_;
  std::vector<VertexId> queue_;
  std::uint32_t epoch_ = 0;
};

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source);

/// sigma(v): sum of distances from v to every vertex.
std::uint64_t total_distance(const Graph& g, VertexId v);

/// sigma(v|X): sum of distances from v to the members of `subset`.
std::uint64_t partial_total_distance(const Graph& g, VertexId v, std::span<const VertexId> subset);

enum class RingMode { exact, at_most, at_least };

/// N_i(v), N_{<=i}(v) or N_{>=i}(v), sorted ascending. v itself counts at distance 0.
std::vector<VertexId> neighborhood_ring(const Graph& g, VertexId v, std::uint32_t radius, RingMode mode);

struct InvariantReport {
  std::size_t order = 0;
  std::size_t edge_count = 0;
  std::size_t min_degree = 0;
  std::vector<std::uint64_t> total_distance;
  std::vector<std::uint32_t> eccentricity;
  Rational proximity;
  Rational remoteness;
  Rational average_distance;
  std::uint32_t diameter = 0;
  std::uint32_t radius = 0;
  std::vector<VertexId> median_vertices;
  std::vector<VertexId> margin_vertices;
  std::vector<VertexId> center_vertices;

  // Filled by the forbidden-subgraph module; absent until computed.
  std::optional<bool> triangle_free;
  std::optional<bool> c4_free;
  /// min over v of |N_{<=2}(v)|.
  std::optional<std::uint64_t> min_ball2;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct MetricsOptions {
  /// Worker threads for the per-source BFS fan-out; 0 picks the hardware count.
  unsigned threads = 1;
};

/// Exact distance invariants of a connected graph of order >= 2.
InvariantReport invariant_report(const Graph& g, MetricsOptions options = {});

} // namespace proxim
