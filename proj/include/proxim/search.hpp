#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "proxim/graph.hpp"
#include "proxim/rational.hpp"

namespace proxim {

// ---------------------------------------------------------------------------
// Canonical forms

/// Upper-triangle adjacency bits in column-major pair order (0,1), (0,2),
/// (1,2), (0,3), ... packed most-significant-first, for graphs of order <= 11.
struct CanonicalForm {
  std::uint32_t order = 0;
  std::uint64_t bits = 0;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr std::size_t canonical_max_order = 11;

/// Bit string of g under its current labelling.
CanonicalForm adjacency_bits(const Graph& g);

struct CanonicalLabeling {
  CanonicalForm form;
  /// position -> original vertex.
  std::vector<VertexId> order;
};

/// Minimal bit string over all labellings that list vertices cell by cell of
/// the degree-refined partition. Cells are found by iterated colour
/// refinement; the search inside cells is pruned column by column and skips
/// interchangeable twins.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// g relabelled so that its adjacency bits equal its canonical form.
Graph canonical_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Enumeration

enum class GraphFilter { all, triangle_free, c4_free, both };

inline constexpr std::size_t enumeration_min_order = 2;
inline constexpr std::size_t enumeration_max_order = 9;

/// One canonically labelled representative per isomorphism class of
/// connected graphs of the given order passing the filter, sorted by
/// canonical form. Children are grown from connected parents by adding a
/// vertex joined to a nonempty subset; filtered-out parents are never grown.
std::vector<Graph> enumerate_connected(std::size_t order, GraphFilter filter = GraphFilter::all);

bool passes(const Graph& g, GraphFilter filter);

// ---------------------------------------------------------------------------
// Floyd-Warshall oracle

inline constexpr std::size_t oracle_max_order = 256;

/// All-pairs distances, row-major n*n. Throws InvalidArgument above the size
/// cap and DisconnectedGraph when an infinite entry survives.
std::vector<std::uint32_t> oracle_apsp(const Graph& g);

// ---------------------------------------------------------------------------
// Corpus scanning

struct BoundTally {
  std::string id;
  std::size_t applicable = 0;
  std::size_t violations = 0;
  /// graph6 strings, sorted.
  std::vector<std::string> tight_cases;
  std::vector<std::string> violation_cases;
  std::optional<Rational> min_slack;
  /// Smallest graph6 string among graphs attaining min_slack.
  std::string min_slack_witness;

  friend bool operator==(const BoundTally&, const BoundTally&) = default;
};

struct ScanSummary {
  std::string corpus;
  std::size_t scanned = 0;
  /// Disconnected or single-vertex entries.
  std::size_t skipped = 0;
  std::vector<BoundTally> bounds;

  std::size_t total_violations() const;
  const BoundTally& tally(std::string_view id) const;

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

/// Runs check_graph over every usable corpus graph (all catalog bounds when
/// `ids` is empty) and aggregates per bound.
ScanSummary scan(std::span<const Graph> corpus, std::span<const std::string> ids, std::string description);

} // namespace proxim
