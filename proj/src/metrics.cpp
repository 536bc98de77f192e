#include "proxim/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "proxim/builders.hpp"
#include "proxim/errors.hpp"

namespace proxim {

BfsWorkspace::BfsWorkspace(std::size_t order) : stamp_(order, 0), queue_(order) {}

void BfsWorkspace::check_reached(const Graph& g, std::size_t reached) const {
  if (reached == g.order()) return;
  for (std::size_t w = 0; w < g.order(); ++w)
    if (stamp_[w] != epoch_) throw DisconnectedGraph(w);
}

BfsWorkspace::Summary BfsWorkspace::summarize(const Graph& g, VertexId source) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  Summary s;
  std::size_t head = 0;
  std::size_t tail = 0;
  queue_[tail++] = source;
  stamp_[source] = epoch_;
  std::uint32_t level = 0;
  // Level-synchronous sweep: [head, level_end) is the current frontier.
  while (head < tail) {
    const std::size_t level_end = tail;
    s.total_distance += static_cast<std::uint64_t>(level) * (level_end - head);
    for (; head < level_end; ++head)
      for (VertexId w : g.neighbors(queue_[head]))
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          queue_[tail++] = w;
        }
    if (tail > level_end) ++level;
  }
  s.eccentricity = level;
  check_reached(g, tail);
  return s;
}

void BfsWorkspace::distances(const Graph& g, VertexId source, std::vector<std::uint32_t>& out) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  out.assign(g.order(), std::numeric_limits<std::uint32_t>::max());
  std::size_t head = 0;
  std::size_t tail = 0;
  queue_[tail++] = source;
  stamp_[source] = epoch_;
  out[source] = 0;
  while (head < tail) {
    const VertexId v = queue_[head++];
    for (VertexId w : g.neighbors(v))
      if (stamp_[w] != epoch_) {
        stamp_[w] = epoch_;
        out[w] = out[v] + 1;
        queue_[tail++] = w;
      }
  }
  check_reached(g, tail);
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, VertexId source) {
  if (!g.valid(source)) throw InvalidArgument("source vertex out of range");
  BfsWorkspace ws(g.order());
  std::vector<std::uint32_t> out;
  ws.distances(g, source, out);
  return out;
}

std::uint64_t total_distance(const Graph& g, VertexId v) {
  if (!g.valid(v)) throw InvalidArgument("vertex out of range");
  BfsWorkspace ws(g.order());
  return ws.summarize(g, v).total_distance;
}

std::uint64_t partial_total_distance(const Graph& g, VertexId v, std::span<const VertexId> subset) {
  for (VertexId x : subset)
    if (!g.valid(x)) throw InvalidArgument("subset member " + std::to_string(x) + " out of range");
  if (subset.empty()) return 0;
  const auto dist = bfs_distances(g, v);
  std::uint64_t sum = 0;
  for (VertexId x : subset) sum += dist[x];
  return sum;
}

std::vector<VertexId> neighborhood_ring(const Graph& g, VertexId v, std::uint32_t radius, RingMode mode) {
  const auto dist = bfs_distances(g, v);
  std::vector<VertexId> out;
  for (VertexId w = 0; w < g.order(); ++w) {
    const bool keep = mode == RingMode::exact     ? dist[w] == radius
                      : mode == RingMode::at_most ? dist[w] <= radius
                                                  : dist[w] >= radius;
    if (keep) out.push_back(w);
  }
  return out;
}

namespace {

void fan_out(const Graph& g, unsigned threads, std::vector<std::uint64_t>& totals, std::vector<std::uint32_t>& eccs) {
  const std::size_t n = g.order();
  if (threads <= 1 || n < 256) {
    BfsWorkspace ws(n);
    for (VertexId v = 0; v < n; ++v) {
      const auto s = ws.summarize(g, v);
      totals[v] = s.total_distance;
      eccs[v] = s.eccentricity;
    }
    return;
  }

  constexpr std::size_t chunk = 64;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    BfsWorkspace ws(n);
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(chunk);
        if (begin >= n) return;
        const std::size_t end = std::min(n, begin + chunk);
        for (std::size_t v = begin; v < end; ++v) {
          const auto s = ws.summarize(g, static_cast<VertexId>(v));
          totals[v] = s.total_distance;
          eccs[v] = s.eccentricity;
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(n);
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

} // namespace

InvariantReport invariant_report(const Graph& g, MetricsOptions options) {
  const std::size_t n = g.order();
  if (n < 2) throw InvalidArgument("invariant report needs order >= 2");
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;

  InvariantReport r;
  r.order = n;
  r.edge_count = g.edge_count();
  r.min_degree = min_degree(g);
  r.total_distance.resize(n);
  r.eccentricity.resize(n);
  fan_out(g, threads, r.total_distance, r.eccentricity);

  const auto [min_sigma, max_sigma] = std::minmax_element(r.total_distance.begin(), r.total_distance.end());
  const auto [min_ecc, max_ecc] = std::minmax_element(r.eccentricity.begin(), r.eccentricity.end());
  const auto denom = static_cast<std::int64_t>(n - 1);
  r.proximity = Rational(static_cast<std::int64_t>(*min_sigma), denom);
  r.remoteness = Rational(static_cast<std::int64_t>(*max_sigma), denom);
  r.radius = *min_ecc;
  r.diameter = *max_ecc;

  std::uint64_t grand_total = 0;
  for (VertexId v = 0; v < n; ++v) {
    grand_total += r.total_distance[v];
    if (r.total_distance[v] == *min_sigma) r.median_vertices.push_back(v);
    if (r.total_distance[v] == *max_sigma) r.margin_vertices.push_back(v);
    if (r.eccentricity[v] == r.radius) r.center_vertices.push_back(v);
  }
  r.average_distance = Rational(static_cast<std::int64_t>(grand_total), static_cast<std::int64_t>(n) * denom);
  return r;
}

} // namespace proxim
