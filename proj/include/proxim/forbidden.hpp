#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "proxim/graph.hpp"
#include "proxim/metrics.hpp"

namespace proxim {

enum class ForbiddenKind { triangle, c4 };

/// A cycle found in a host graph, listed in cyclic order.
struct ForbiddenWitness {
  ForbiddenKind kind;
  std::vector<VertexId> vertices;

  /// Distinct vertices, consecutive (cyclically) pairs adjacent in `host`.
  bool validates(const Graph& host) const;
  std::string str() const;
};

/// Smallest triangle (a < b < c) in lexicographic order, if any.
std::optional<ForbiddenWitness> find_triangle(const Graph& g);

/// First 4-cycle (a, x, b, y) found scanning a ascending: {a, b} is the first
/// pair with b > a that has two common neighbours x and y.
std::optional<ForbiddenWitness> find_c4(const Graph& g);

/// |N_{<=2}(v)|, counting v itself.
std::size_t ball2_size(const Graph& g, VertexId v);

/// delta^2 - 2*floor(delta/2) + 1: lower bound on |N_{<=2}(v)| in a C4-free
/// graph of minimum degree delta.
std::uint64_t epp_ball_bound(std::uint64_t delta);

class ContainsC4 : public std::runtime_error {
public:
  explicit ContainsC4(ForbiddenWitness witness);
  const ForbiddenWitness& witness() const { return witness_; }

private:
  ForbiddenWitness witness_;
};

struct EppLemmaReport {
  std::size_t min_degree = 0;
  std::uint64_t bound = 0;
  std::vector<std::size_t> ball_sizes;
  std::size_t min_ball = 0;
  VertexId min_ball_vertex = 0;
  /// min_ball - bound; negative means the lemma fails somewhere.
  std::int64_t slack = 0;
  bool holds = false;
};

/// Checks the second-neighbourhood lemma on every vertex. Throws ContainsC4
/// when the precondition fails.
EppLemmaReport check_epp_lemma(const Graph& g);

/// Fills triangle_free, c4_free and min_ball2 on a report of `g`.
void annotate_classes(const Graph& g, InvariantReport& report);

} // namespace proxim
