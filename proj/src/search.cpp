#include "proxim/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>
#include <unordered_set>

#include "proxim/bounds.hpp"
#include "proxim/builders.hpp"
#include "proxim/errors.hpp"
#include "proxim/graph6.hpp"

namespace proxim {

namespace {

using Mask = std::uint16_t;

/// Small graph as one neighbour bitmask per vertex.
struct MaskGraph {
  std::uint32_t n = 0;
  std::array<Mask, canonical_max_order> adj{};
};

MaskGraph to_masks(const Graph& g) {
  if (g.order() > canonical_max_order)
    throw InvalidArgument("canonical forms support order <= " + std::to_string(canonical_max_order));
  MaskGraph m;
  m.n = static_cast<std::uint32_t>(g.order());
  for (VertexId v = 0; v < g.order(); ++v)
    for (VertexId w : g.neighbors(v)) m.adj[v] |= static_cast<Mask>(1u << w);
  return m;
}

Graph to_graph(const MaskGraph& m) {
  std::vector<Edge> edges;
  for (VertexId j = 1; j < m.n; ++j)
    for (VertexId i = 0; i < j; ++i)
      if (m.adj[j] >> i & 1) edges.push_back({i, j});
  return Graph::from_edge_list(m.n, edges);
}

/// Iterated colour refinement starting from degrees. Colour ids are ranks of
/// sorted signatures, so the ordered partition is isomorphism invariant.
std::vector<std::uint32_t> refined_colours(const MaskGraph& g) {
  const auto n = g.n;
  std::vector<std::uint32_t> colour(n);
  for (std::uint32_t v = 0; v < n; ++v) colour[v] = static_cast<std::uint32_t>(std::popcount(g.adj[v]));
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<std::uint32_t>> signature(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      auto& s = signature[v];
      s.push_back(colour[v]);
      std::vector<std::uint32_t> around;
      for (std::uint32_t w = 0; w < n; ++w)
        if (g.adj[v] >> w & 1) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> rank;
    for (const auto& s : signature) rank.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (std::uint32_t v = 0; v < n; ++v) colour[v] = rank[signature[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colour;
}

struct Partial {
  std::array<std::uint8_t, canonical_max_order> perm{};
  Mask used = 0;
};

CanonicalLabeling canonical_from_masks(const MaskGraph& g) {
  const auto n = g.n;
  CanonicalLabeling out;
  out.form.order = n;
  if (n <= 1) {
    out.order.assign(n, 0);
    return out;
  }

  const auto colour = refined_colours(g);
  // Position j may only hold a vertex whose colour is cell_colour[j].
  std::vector<std::uint32_t> cell_colour(colour);
  std::sort(cell_colour.begin(), cell_colour.end());
  std::array<Mask, canonical_max_order> twins_below{};
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t w = 0; w < v; ++w) {
      const Mask bv = static_cast<Mask>(1u << v);
      const Mask bw = static_cast<Mask>(1u << w);
      if ((g.adj[v] & ~bw) == (g.adj[w] & ~bv)) twins_below[v] |= bw;
    }

  std::vector<Partial> frontier{Partial{}};
  std::vector<Partial> next;
  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    next.clear();
    for (const Partial& p : frontier) {
      for (std::uint32_t c = 0; c < n; ++c) {
        if (colour[c] != cell_colour[j] || (p.used >> c & 1)) continue;
        // A lower unused twin gives the same completions.
        if (twins_below[c] & ~p.used) continue;
        std::uint32_t col = 0;
        for (std::uint32_t i = 0; i < j; ++i) col = (col << 1) | (g.adj[c] >> p.perm[i] & 1);
        if (col > best) continue;
        if (col < best) {
          best = col;
          next.clear();
        }
        Partial q = p;
        q.perm[j] = static_cast<std::uint8_t>(c);
        q.used = static_cast<Mask>(q.used | (1u << c));
        next.push_back(q);
      }
    }
    out.form.bits = (out.form.bits << j) | best;
    std::swap(frontier, next);
  }
  out.order.assign(frontier.front().perm.begin(), frontier.front().perm.begin() + n);
  return out;
}

MaskGraph relabel(const MaskGraph& g, const std::vector<VertexId>& order) {
  MaskGraph r;
  r.n = g.n;
  for (std::uint32_t a = 0; a < g.n; ++a)
    for (std::uint32_t b = 0; b < g.n; ++b)
      if (g.adj[order[a]] >> order[b] & 1) r.adj[a] |= static_cast<Mask>(1u << b);
  return r;
}

} // namespace

CanonicalForm adjacency_bits(const Graph& g) {
  const MaskGraph m = to_masks(g);
  CanonicalForm f;
  f.order = m.n;
  for (std::uint32_t j = 1; j < m.n; ++j)
    for (std::uint32_t i = 0; i < j; ++i) f.bits = (f.bits << 1) | (m.adj[j] >> i & 1);
  return f;
}

CanonicalLabeling canonical_labeling(const Graph& g) { return canonical_from_masks(to_masks(g)); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) {
  const MaskGraph m = to_masks(g);
  return to_graph(relabel(m, canonical_from_masks(m).order));
}

bool passes(const Graph& g, GraphFilter filter) {
  const bool need_tf = filter == GraphFilter::triangle_free || filter == GraphFilter::both;
  const bool need_c4 = filter == GraphFilter::c4_free || filter == GraphFilter::both;
  if (need_tf) {
    for (VertexId a = 0; a < g.order(); ++a)
      for (VertexId b : g.neighbors(a))
        for (VertexId c : g.neighbors(b))
          if (c != a && g.adjacent(a, c)) return false;
  }
  if (need_c4) {
    for (VertexId a = 0; a < g.order(); ++a)
      for (VertexId b = a + 1; b < g.order(); ++b) {
        std::size_t common = 0;
        for (VertexId x : g.neighbors(a))
          if (g.adjacent(x, b)) ++common;
        if (common >= 2) return false;
      }
  }
  return true;
}

std::vector<Graph> enumerate_connected(std::size_t order, GraphFilter filter) {
  if (order < enumeration_min_order || order > enumeration_max_order)
    throw InvalidArgument("built-in enumeration supports orders " + std::to_string(enumeration_min_order) + ".." +
                          std::to_string(enumeration_max_order) + ", got " + std::to_string(order));
  const bool need_tf = filter == GraphFilter::triangle_free || filter == GraphFilter::both;
  const bool need_c4 = filter == GraphFilter::c4_free || filter == GraphFilter::both;

  std::vector<MaskGraph> level{MaskGraph{.n = 1, .adj = {}}};
  for (std::uint32_t m = 2; m <= order; ++m) {
    const std::uint32_t parent_n = m - 1;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, MaskGraph>> children;
    for (const MaskGraph& parent : level) {
      for (Mask subset = 1; subset < (1u << parent_n); ++subset) {
        // Parent is in the class already; only cycles through the new vertex
        // can appear.
        if (need_tf) {
          bool ok = true;
          for (std::uint32_t s = 0; s < parent_n && ok; ++s)
            if ((subset >> s & 1) && (parent.adj[s] & subset)) ok = false;
          if (!ok) continue;
        }
        if (need_c4) {
          bool ok = true;
          for (std::uint32_t a = 0; a < parent_n && ok; ++a) {
            if (!(subset >> a & 1)) continue;
            for (std::uint32_t b = a + 1; b < parent_n && ok; ++b)
              if ((subset >> b & 1) && (parent.adj[a] & parent.adj[b])) ok = false;
          }
          if (!ok) continue;
        }
        MaskGraph child = parent;
        child.n = m;
        child.adj[parent_n] = subset;
        for (std::uint32_t s = 0; s < parent_n; ++s)
          if (subset >> s & 1) child.adj[s] |= static_cast<Mask>(1u << parent_n);
        const CanonicalLabeling lab = canonical_from_masks(child);
        if (seen.insert(lab.form.bits).second) children.emplace_back(lab.form.bits, relabel(child, lab.order));
      }
    }
    std::sort(children.begin(), children.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [bits, g] : children) level.push_back(g);
  }

  std::vector<Graph> out;
  out.reserve(level.size());
  for (const MaskGraph& g : level) out.push_back(to_graph(g));
  return out;
}

std::vector<std::uint32_t> oracle_apsp(const Graph& g) {
  const std::size_t n = g.order();
  if (n > oracle_max_order)
    throw InvalidArgument("Floyd-Warshall oracle is capped at order " + std::to_string(oracle_max_order));
  constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 2;
  std::vector<std::uint32_t> d(n * n, inf);
  for (std::size_t v = 0; v < n; ++v) {
    d[v * n + v] = 0;
    for (VertexId w : g.neighbors(static_cast<VertexId>(v))) d[v * n + w] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t dik = d[i * n + k];
      if (dik == inf) continue;
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], dik + d[k * n + j]);
    }
  for (std::size_t i = 0; i < n * n; ++i)
    if (d[i] == inf) throw DisconnectedGraph(i % n);
  return d;
}

std::size_t ScanSummary::total_violations() const {
  std::size_t total = 0;
  for (const auto& b : bounds) total += b.violations;
  return total;
}

const BoundTally& ScanSummary::tally(std::string_view id) const {
  for (const auto& b : bounds)
    if (b.id == id) return b;
  throw InvalidArgument("scan summary has no bound '" + std::string(id) + "'");
}

ScanSummary scan(std::span<const Graph> corpus, std::span<const std::string> ids, std::string description) {
  const auto selected = bounds::select_bounds(ids);
  std::vector<std::string> resolved;
  for (const auto* b : selected) resolved.push_back(b->id);

  ScanSummary summary;
  summary.corpus = std::move(description);
  for (const auto& id : resolved) {
    BoundTally t;
    t.id = id;
    summary.bounds.push_back(std::move(t));
  }

  for (const Graph& g : corpus) {
    if (g.order() < 2 || !is_connected(g)) {
      ++summary.skipped;
      continue;
    }
    ++summary.scanned;
    const auto check = bounds::check_graph(g, resolved);
    std::string code;
    for (std::size_t i = 0; i < check.results.size(); ++i) {
      const auto& r = check.results[i];
      if (!r.applicable) continue;
      auto& t = summary.bounds[i];
      if (code.empty()) code = emit_graph6(g);
      ++t.applicable;
      if (r.tight) t.tight_cases.push_back(code);
      if (r.violated()) {
        ++t.violations;
        t.violation_cases.push_back(code);
      }
      if (!t.min_slack || *r.slack < *t.min_slack || (*r.slack == *t.min_slack && code < t.min_slack_witness)) {
        t.min_slack = *r.slack;
        t.min_slack_witness = code;
      }
    }
  }
  for (auto& t : summary.bounds) {
    std::sort(t.tight_cases.begin(), t.tight_cases.end());
    std::sort(t.violation_cases.begin(), t.violation_cases.end());
  }
  return summary;
}

} // namespace proxim
