#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "proxim/field.hpp"
#include "proxim/graph.hpp"
#include "proxim/metrics.hpp"

namespace proxim {

/// One claimed property of a constructed graph and what was measured.
/// Non-advisory claims that fail abort the construction.
struct ValidationNote {
  std::string claim;
  std::string expected;
  std::string measured;
  bool passed = false;
  bool advisory = false;

  friend bool operator==(const ValidationNote&, const ValidationNote&) = default;
};

// ---------------------------------------------------------------------------
// Polarity graphs over GF(q)

/// Normalised representative of a 1-dimensional subspace of GF(q)^3: the
/// first nonzero coordinate is 1.
struct ProjectivePoint {
  std::array<FieldElement, 3> coords{};

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
  std::string str() const;
};

/// x1*y1 + x2*y2 + x3*y3 over the field.
FieldElement dot(const FiniteField& f, const ProjectivePoint& a, const ProjectivePoint& b);

/// All q^2 + q + 1 points, sorted lexicographically; index = vertex id.
std::vector<ProjectivePoint> projective_points(const FiniteField& f);

struct PolarityGraph {
  Graph graph;
  std::vector<ProjectivePoint> points;
  /// Self-orthogonal points (x.x == 0); these have degree q.
  std::vector<bool> isotropic;
};

/// H_q: points adjacent when orthogonal, no loops on isotropic points.
PolarityGraph polarity_graph(const FiniteField& f);

/// H_q' = H_q - z - M together with the choices that produced it.
struct PuncturedPolarity {
  std::uint32_t q = 0;
  Graph graph;
  /// Designated low-degree endpoints, as ids in `graph`.
  VertexId u = 0;
  VertexId v = 0;
  /// Ids below refer to H_q.
  VertexId removed_vertex = 0;
  std::vector<Edge> removed_matching;
  /// H_q id of every vertex of `graph`.
  std::vector<VertexId> source_vertex;
  std::vector<ProjectivePoint> points;
  /// Absent when q = 2, where the result is disconnected.
  std::optional<InvariantReport> report;
  std::vector<ValidationNote> notes;
};

/// Removes the lexicographically first isotropic point z and the matching
/// between N(u)-z and N(v)-z, where u, v are the first non-isotropic,
/// mutually non-adjacent neighbours of z. Throws ConstructionIntegrityError
/// if any claimed property fails.
PuncturedPolarity puncture(const FiniteField& f, MetricsOptions options = {});

/// H_{q,k}: k copies of H_q' joined by the edges v_i -- u_{i+1}.
struct ChainedPolarity {
  std::uint32_t q = 0;
  std::size_t copies = 0;
  Graph graph;
  /// Vertex 0 of copy i is offsets[i].
  std::vector<std::size_t> offsets;
  VertexId copy_u = 0;
  VertexId copy_v = 0;
  InvariantReport report;
  std::vector<ValidationNote> notes;
};

ChainedPolarity chain(const FiniteField& f, std::size_t copies, MetricsOptions options = {});

// ---------------------------------------------------------------------------
// Layered triangle-free family

/// Layer sizes [1, d, d-1, 1] + [1, d-1, d-1, 1]^(k-2) + [1, d-1, d, 1].
std::vector<std::size_t> layered_plan(std::size_t delta, std::size_t blocks);

struct LayeredExtremal {
  std::size_t delta = 0;
  std::size_t blocks = 0;
  Graph graph;
  std::vector<std::size_t> layer_of;
  /// Lowest-index median vertex of the base graph G_{delta,k}.
  VertexId median = 0;
  /// Padded variant only: the twin source and how many twins were added.
  VertexId twin_source = 0;
  std::size_t twins = 0;
  InvariantReport report;
  std::vector<ValidationNote> notes;
};

/// G_{delta,k}. Requires delta >= 3 and k >= 2; odd k is built but its
/// radius claim is only advisory.
LayeredExtremal layered_extremal(std::size_t delta, std::size_t blocks, MetricsOptions options = {});

/// G^n_{delta,k}: G_{delta,k} plus n - n0 twins of the lowest neighbour of
/// its lowest-index median.
LayeredExtremal layered_extremal_padded(std::size_t delta, std::size_t blocks, std::size_t order,
                                        MetricsOptions options = {});

} // namespace proxim
