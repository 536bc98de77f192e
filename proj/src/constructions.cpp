#include "proxim/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "proxim/builders.hpp"
#include "proxim/errors.hpp"
#include "proxim/forbidden.hpp"

namespace proxim {

namespace {

/// Collects validation notes; a failed hard claim throws immediately.
class Validator {
public:
  explicit Validator(std::string family) : family_(std::move(family)) {}

  template <typename T> void require(const std::string& claim, const T& expected, const T& measured) {
    record(claim, expected, measured, false);
  }
  template <typename T> void advise(const std::string& claim, const T& expected, const T& measured) {
    record(claim, expected, measured, true);
  }
  void require_true(const std::string& claim, bool ok, const std::string& measured = {}) {
    notes_.push_back({claim, "true", measured.empty() ? (ok ? "true" : "false") : measured, ok, false});
    if (!ok) throw ConstructionIntegrityError(family_, claim);
  }

  std::vector<ValidationNote> take() { return std::move(notes_); }

private:
  template <typename T> static std::string render(const T& value) {
    std::ostringstream os;
    os << std::boolalpha << value;
    return os.str();
  }

  template <typename T> void record(const std::string& claim, const T& expected, const T& measured, bool advisory) {
    const bool ok = expected == measured;
    notes_.push_back({claim, render(expected), render(measured), ok, advisory});
    if (!ok && !advisory)
      throw ConstructionIntegrityError(family_, claim + " (expected " + render(expected) + ", measured " +
                                                    render(measured) + ")");
  }

  std::string family_;
  std::vector<ValidationNote> notes_;
};

InvariantReport measured_report(const Graph& g, MetricsOptions options) {
  InvariantReport r = invariant_report(g, options);
  annotate_classes(g, r);
  return r;
}

} // namespace

std::string ProjectivePoint::str() const {
  return "(" + std::to_string(coords[0]) + "," + std::to_string(coords[1]) + "," + std::to_string(coords[2]) + ")";
}

FieldElement dot(const FiniteField& f, const ProjectivePoint& a, const ProjectivePoint& b) {
  FieldElement s = 0;
  for (std::size_t i = 0; i < 3; ++i) s = f.add(s, f.mul(a.coords[i], b.coords[i]));
  return s;
}

std::vector<ProjectivePoint> projective_points(const FiniteField& f) {
  const auto q = f.order();
  std::vector<ProjectivePoint> points;
  points.reserve(q * q + q + 1);
  // Enumerating (0,0,1), (0,1,*), (1,*,*) yields exactly the normal forms,
  // already in lexicographic order.
  points.push_back({{0, 0, 1}});
  for (std::uint32_t z = 0; z < q; ++z) points.push_back({{0, 1, static_cast<FieldElement>(z)}});
  for (std::uint32_t y = 0; y < q; ++y)
    for (std::uint32_t z = 0; z < q; ++z)
      points.push_back({{1, static_cast<FieldElement>(y), static_cast<FieldElement>(z)}});
  return points;
}

PolarityGraph polarity_graph(const FiniteField& f) {
  PolarityGraph out;
  out.points = projective_points(f);
  const auto n = out.points.size();
  out.isotropic.resize(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    out.isotropic[i] = dot(f, out.points[i], out.points[i]) == 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (dot(f, out.points[i], out.points[j]) == 0)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
  }
  out.graph = Graph::from_edge_list(n, edges);
  return out;
}

PuncturedPolarity puncture(const FiniteField& f, MetricsOptions options) {
  const std::uint32_t q = f.order();
  const std::string family = "H'_" + std::to_string(q);
  const PolarityGraph h = polarity_graph(f);
  const Graph& g = h.graph;
  const auto n = g.order();

  const auto z_it = std::find(h.isotropic.begin(), h.isotropic.end(), true);
  if (z_it == h.isotropic.end()) throw ConstructionIntegrityError(family, "no self-orthogonal point exists");
  const auto z = static_cast<VertexId>(z_it - h.isotropic.begin());

  std::vector<VertexId> candidates;
  for (VertexId x : g.neighbors(z))
    if (!h.isotropic[x]) candidates.push_back(x);
  bool found = false;
  VertexId u = 0;
  VertexId v = 0;
  for (std::size_t i = 0; i < candidates.size() && !found; ++i)
    for (std::size_t j = i + 1; j < candidates.size() && !found; ++j)
      if (!g.adjacent(candidates[i], candidates[j])) {
        u = candidates[i];
        v = candidates[j];
        found = true;
      }
  if (!found) throw ConstructionIntegrityError(family, "no non-adjacent non-isotropic neighbour pair of z");

  // M: edges between N(u)-z and N(v)-z; must be a perfect matching.
  std::vector<Edge> matching;
  std::set<VertexId> side_v;
  for (VertexId y : g.neighbors(v))
    if (y != z) side_v.insert(y);
  std::size_t side_u = 0;
  for (VertexId x : g.neighbors(u)) {
    if (x == z) continue;
    ++side_u;
    for (VertexId y : g.neighbors(x))
      if (side_v.count(y)) matching.push_back({std::min(x, y), std::max(x, y)});
  }
  {
    std::set<VertexId> covered;
    for (const Edge& e : matching) {
      covered.insert(e.u);
      covered.insert(e.v);
    }
    const bool perfect = side_u == side_v.size() && matching.size() == side_u && covered.size() == 2 * side_u;
    if (!perfect) throw ConstructionIntegrityError(family, "M is not a perfect matching between N(u)-z and N(v)-z");
  }

  PuncturedPolarity out;
  out.q = q;
  out.removed_vertex = z;
  out.removed_matching = matching;
  std::vector<VertexId> new_id(n);
  for (VertexId x = 0; x < n; ++x) {
    if (x == z) continue;
    new_id[x] = static_cast<VertexId>(out.source_vertex.size());
    out.source_vertex.push_back(x);
    out.points.push_back(h.points[x]);
  }
  std::set<Edge> removed(matching.begin(), matching.end());
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (e.u != z && e.v != z && !removed.count(e)) kept.push_back({new_id[e.u], new_id[e.v]});
  out.graph = Graph::from_edge_list(n - 1, kept);
  out.u = new_id[u];
  out.v = new_id[v];

  Validator check(family);
  check.require_true("u, v are not self-orthogonal", !h.isotropic[u] && !h.isotropic[v]);
  check.require_true("u, v are non-adjacent in H_q", !g.adjacent(u, v));
  check.require<std::size_t>("order q^2+q", std::size_t{q} * q + q, out.graph.order());
  if (q == 2) {
    // H_2' falls apart into a triangle and a path; record rather than reject.
    const bool connected = is_connected(out.graph);
    check.advise<bool>("connected (q = 2)", true, connected);
    check.advise<std::size_t>("minimum degree at least 2 (q = 2 gives 1)", 2, min_degree(out.graph));
    if (connected) out.report = measured_report(out.graph, options);
  } else {
    check.require_true("connected", is_connected(out.graph));
    out.report = measured_report(out.graph, options);
    check.require<std::size_t>("minimum degree q-1", q - 1, out.report->min_degree);
    const auto du = bfs_distances(out.graph, out.u);
    check.require_true("d(u,v) >= 4", du[out.v] >= 4, std::to_string(du[out.v]));
    check.require<std::uint32_t>("diameter 4", 4, out.report->diameter);
    check.require_true("C4-free", *out.report->c4_free);
  }
  out.notes = check.take();
  return out;
}

ChainedPolarity chain(const FiniteField& f, std::size_t copies, MetricsOptions options) {
  const std::uint32_t q = f.order();
  const std::string family = "H_{" + std::to_string(q) + "," + std::to_string(copies) + "}";
  if (copies < 2) throw InvalidArgument(family + ": need at least 2 copies");
  const PuncturedPolarity base = puncture(f, options);

  std::vector<Graph> parts(copies, base.graph);
  std::vector<Link> links;
  for (std::size_t i = 0; i + 1 < copies; ++i) links.push_back({i, base.v, i + 1, base.u});
  LinkedUnion joined = disjoint_union_with_links(parts, links);

  ChainedPolarity out;
  out.q = q;
  out.copies = copies;
  out.graph = std::move(joined.graph);
  out.offsets = std::move(joined.offsets);
  out.copy_u = base.u;
  out.copy_v = base.v;

  Validator check(family);
  check.require_true("connected", is_connected(out.graph));
  out.report = measured_report(out.graph, options);
  check.require<std::size_t>("order k(q^2+q)", copies * (std::size_t{q} * q + q), out.graph.order());
  check.require<std::size_t>("minimum degree q-1", q - 1, out.report.min_degree);
  check.require_true("C4-free", *out.report.c4_free);
  const auto k = static_cast<std::uint32_t>(copies);
  if (copies % 2 == 0) {
    check.require<std::uint32_t>("diameter 5k-1", 5 * k - 1, out.report.diameter);
    check.require<std::uint32_t>("radius 5k/2", 5 * k / 2, out.report.radius);
  } else {
    check.advise<std::uint32_t>("diameter 5k-1 (odd k)", 5 * k - 1, out.report.diameter);
    check.advise<std::string>("radius 5k/2 (odd k, non-integral)", std::to_string(5 * k) + "/2",
                              std::to_string(out.report.radius));
  }
  out.notes = check.take();
  return out;
}

std::vector<std::size_t> layered_plan(std::size_t delta, std::size_t blocks) {
  if (delta < 3) throw InvalidArgument("layered family needs delta >= 3, got " + std::to_string(delta));
  if (blocks < 2) throw InvalidArgument("layered family needs k >= 2, got " + std::to_string(blocks));
  std::vector<std::size_t> sizes{1, delta, delta - 1, 1};
  for (std::size_t i = 0; i + 2 < blocks; ++i) sizes.insert(sizes.end(), {1, delta - 1, delta - 1, 1});
  // The closing block is the mirror image of the opening one; otherwise the
  // last vertex only has delta-1 neighbours.
  sizes.insert(sizes.end(), {1, delta - 1, delta, 1});
  return sizes;
}

namespace {

void validate_layered(Validator& check, const LayeredExtremal& g) {
  const auto k = static_cast<std::uint32_t>(g.blocks);
  check.require<std::size_t>("minimum degree delta", g.delta, g.report.min_degree);
  check.require_true("triangle-free", *g.report.triangle_free);
  check.require<std::uint32_t>("diameter 4k-1", 4 * k - 1, g.report.diameter);
  if (g.blocks % 2 == 0)
    check.require<std::uint32_t>("radius 2k", 2 * k, g.report.radius);
  else
    check.advise<std::uint32_t>("radius 2k (odd k)", 2 * k, g.report.radius);
}

} // namespace

LayeredExtremal layered_extremal(std::size_t delta, std::size_t blocks, MetricsOptions options) {
  const std::string family = "G_{" + std::to_string(delta) + "," + std::to_string(blocks) + "}";
  LayeredGraph layered = sequential_sum(LayerPlan(layered_plan(delta, blocks)));

  LayeredExtremal out;
  out.delta = delta;
  out.blocks = blocks;
  out.graph = std::move(layered.graph);
  out.layer_of = std::move(layered.layer_of);

  Validator check(family);
  check.require_true("connected", is_connected(out.graph));
  out.report = measured_report(out.graph, options);
  out.median = out.report.median_vertices.front();
  check.require<std::size_t>("order 2k*delta+2", 2 * blocks * delta + 2, out.graph.order());
  validate_layered(check, out);

  // Closed forms for the median/margin distance are recorded, not enforced.
  const auto d = static_cast<std::int64_t>(delta);
  const auto k = static_cast<std::int64_t>(blocks);
  const Rational median_closed(2 * d * k * k + 4 * k - 3);
  const Rational margin_closed = Rational(2 * d * k + 2) * (Rational(2 * k) - Rational(1, 2));
  const auto& sigma = out.report.total_distance;
  check.advise<Rational>("median distance 2*delta*k^2+4k-3", median_closed,
                         Rational(static_cast<std::int64_t>(sigma[out.median])));
  check.advise<Rational>("margin distance (2*delta*k+2)(2k-1/2)", margin_closed,
                         Rational(static_cast<std::int64_t>(sigma[out.report.margin_vertices.front()])));
  check.advise<std::size_t>("two median vertices", 2, out.report.median_vertices.size());
  check.advise<std::size_t>("two margin vertices", 2, out.report.margin_vertices.size());
  out.notes = check.take();
  return out;
}

LayeredExtremal layered_extremal_padded(std::size_t delta, std::size_t blocks, std::size_t order,
                                        MetricsOptions options) {
  const std::string family =
      "G^" + std::to_string(order) + "_{" + std::to_string(delta) + "," + std::to_string(blocks) + "}";
  LayeredExtremal base = layered_extremal(delta, blocks, options);
  const std::size_t base_order = base.graph.order();
  if (order < base_order)
    throw InvalidArgument(family + ": target order below n0 = " + std::to_string(base_order));

  LayeredExtremal out;
  out.delta = delta;
  out.blocks = blocks;
  out.median = base.median;
  out.twin_source = base.graph.neighbors(base.median).front();
  out.twins = order - base_order;
  out.graph = add_twins(base.graph, out.twin_source, out.twins);
  out.layer_of = base.layer_of;
  out.layer_of.resize(order, base.layer_of[out.twin_source]);

  Validator check(family);
  check.require_true("connected", is_connected(out.graph));
  out.report = measured_report(out.graph, options);
  check.require<std::size_t>("order n", order, out.graph.order());
  validate_layered(check, out);
  const auto& medians = out.report.median_vertices;
  check.require_true("u is still a median vertex", std::binary_search(medians.begin(), medians.end(), out.median));
  check.require<std::uint64_t>("sigma(u) grows by n-n0", base.report.total_distance[out.median] + out.twins,
                               out.report.total_distance[out.median]);
  out.notes = base.notes;
  for (auto& note : out.notes) note.claim = "base: " + note.claim;
  for (auto& note : check.take()) out.notes.push_back(std::move(note));
  return out;
}

} // namespace proxim
