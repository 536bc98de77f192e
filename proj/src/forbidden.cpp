#include "proxim/forbidden.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "proxim/builders.hpp"

namespace proxim {

bool ForbiddenWitness::validates(const Graph& host) const {
  const std::size_t len = kind == ForbiddenKind::triangle ? 3 : 4;
  if (vertices.size() != len) return false;
  for (VertexId v : vertices)
    if (!host.valid(v)) return false;
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < len; ++i)
    if (!host.adjacent(vertices[i], vertices[(i + 1) % len])) return false;
  return true;
}

std::string ForbiddenWitness::str() const {
  std::string s = kind == ForbiddenKind::triangle ? "triangle(" : "C4(";
  for (std::size_t i = 0; i < vertices.size(); ++i) s += (i ? "," : "") + std::to_string(vertices[i]);
  return s + ")";
}

std::optional<ForbiddenWitness> find_triangle(const Graph& g) {
  for (VertexId a = 0; a < g.order(); ++a) {
    const auto na = g.neighbors(a);
    for (VertexId b : na) {
      if (b <= a) continue;
      // Merge-intersect N(a) and N(b) for the smallest common neighbour above b.
      const auto nb = g.neighbors(b);
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib)
          ++ia;
        else if (*ib < *ia)
          ++ib;
        else
          return ForbiddenWitness{ForbiddenKind::triangle, {a, b, *ia}};
      }
    }
  }
  return std::nullopt;
}

std::optional<ForbiddenWitness> find_c4(const Graph& g) {
  const auto n = g.order();
  constexpr VertexId none = std::numeric_limits<VertexId>::max();
  // via[b] = first common neighbour of (a, b) seen for the current a.
  std::vector<VertexId> via(n, none);
  std::vector<VertexId> touched;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId x : g.neighbors(a)) {
      for (VertexId b : g.neighbors(x)) {
        if (b <= a) continue;
        if (via[b] != none) return ForbiddenWitness{ForbiddenKind::c4, {a, via[b], b, x}};
        via[b] = x;
        touched.push_back(b);
      }
    }
    for (VertexId b : touched) via[b] = none;
    touched.clear();
  }
  return std::nullopt;
}

std::size_t ball2_size(const Graph& g, VertexId v) {
  std::vector<char> seen(g.order(), 0);
  seen[v] = 1;
  std::size_t count = 1;
  for (VertexId x : g.neighbors(v)) {
    if (!seen[x]) {
      seen[x] = 1;
      ++count;
    }
  }
  for (VertexId x : g.neighbors(v))
    for (VertexId y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
      }
  return count;
}

std::uint64_t epp_ball_bound(std::uint64_t delta) { return delta * delta - 2 * (delta / 2) + 1; }

ContainsC4::ContainsC4(ForbiddenWitness witness)
    : std::runtime_error("graph contains a 4-cycle: " + witness.str()), witness_(std::move(witness)) {}

namespace {

std::vector<std::size_t> all_ball2_sizes(const Graph& g) {
  const auto n = g.order();
  std::vector<std::size_t> sizes(n);
  std::vector<VertexId> stamp(n, std::numeric_limits<VertexId>::max());
  for (VertexId v = 0; v < n; ++v) {
    std::size_t count = 1;
    stamp[v] = v;
    for (VertexId x : g.neighbors(v))
      if (stamp[x] != v) {
        stamp[x] = v;
        ++count;
      }
    for (VertexId x : g.neighbors(v))
      for (VertexId y : g.neighbors(x))
        if (stamp[y] != v) {
          stamp[y] = v;
          ++count;
        }
    sizes[v] = count;
  }
  return sizes;
}

} // namespace

EppLemmaReport check_epp_lemma(const Graph& g) {
  if (auto w = find_c4(g)) throw ContainsC4(std::move(*w));
  EppLemmaReport r;
  r.min_degree = min_degree(g);
  r.bound = epp_ball_bound(r.min_degree);
  r.ball_sizes = all_ball2_sizes(g);
  const auto it = std::min_element(r.ball_sizes.begin(), r.ball_sizes.end());
  r.min_ball = *it;
  r.min_ball_vertex = static_cast<VertexId>(it - r.ball_sizes.begin());
  r.slack = static_cast<std::int64_t>(r.min_ball) - static_cast<std::int64_t>(r.bound);
  r.holds = r.slack >= 0;
  return r;
}

void annotate_classes(const Graph& g, InvariantReport& report) {
  report.triangle_free = !find_triangle(g).has_value();
  report.c4_free = !find_c4(g).has_value();
  const auto sizes = all_ball2_sizes(g);
  report.min_ball2 = *std::min_element(sizes.begin(), sizes.end());
}

} // namespace proxim
