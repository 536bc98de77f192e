// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every tolerance used below is pinned in this file.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "proxim/bounds.hpp"
#include "proxim/builders.hpp"
#include "proxim/cli.hpp"
#include "proxim/constructions.hpp"
#include "proxim/forbidden.hpp"
#include "proxim/graph6.hpp"
#include "proxim/metrics.hpp"
#include "proxim/search.hpp"

using namespace proxim;

namespace {

// Pinned tolerances.
constexpr std::int64_t closed_form_tolerance = 1;          // criterion 6, in distance units
const Rational sharpness_gap_limit(31, 6);                  // criterion 5
constexpr double pi_ratio_lo = 1.0, pi_ratio_hi = 1.5;      // criterion 9
constexpr double rho_ratio_lo = 2.2, rho_ratio_hi = 2.8;    // criterion 9
constexpr double single_thread_limit_s = 60.0;              // criterion 11
constexpr double eight_thread_limit_s = 15.0;               // criterion 11
constexpr std::uint32_t oracle_seed = 0x5eed;               // criterion 10

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failure reasons; the first few are kept for the summary line.
class Tracker {
public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass_ = false;
    if (failures_++ < 4) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome done() const {
    if (pass_) return {true, notes_};
    return {false, detail_ + (failures_ > 4 ? " (+" + std::to_string(failures_ - 4) + " more)" : "")};
  }

private:
  bool pass_ = true;
  int failures_ = 0;
  std::string detail_;
  std::string notes_;
};

std::string str(const Rational& r) { return r.str(); }

Graph remove_vertex(const Graph& g, VertexId x) {
  std::vector<Edge> e;
  for (const Edge& ed : g.edges())
    if (ed.u != x && ed.v != x) e.push_back({ed.u > x ? ed.u - 1 : ed.u, ed.v > x ? ed.v - 1 : ed.v});
  return Graph::from_edge_list(g.order() - 1, e);
}

// A pendant path p1..pm: p1 a leaf, p2..p_{m-1} of degree 2, consecutive
// vertices adjacent (so the path is induced), and pm a cut vertex.
bool has_pendant_path(const Graph& g, std::size_t m) {
  for (VertexId leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    VertexId prev = leaf, cur = g.neighbors(leaf)[0];
    bool ok = true;
    for (std::size_t len = 2; len < m && ok; ++len) {
      if (g.degree(cur) != 2) {
        ok = false;
        break;
      }
      const auto nb = g.neighbors(cur);
      const VertexId next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (ok && g.degree(cur) >= 2 && !is_connected(remove_vertex(g, cur))) return true;
  }
  return false;
}

const std::vector<std::pair<std::size_t, std::size_t>>& layered_grid() {
  static const std::vector<std::pair<std::size_t, std::size_t>> grid{{3, 2}, {3, 4}, {4, 2}, {4, 4}, {5, 2}, {5, 4}};
  return grid;
}

Graph random_connected(std::mt19937& rng, std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({static_cast<VertexId>(rng() % v), v});
  std::uniform_real_distribution<double> density(0.0, 0.25);
  std::bernoulli_distribution coin(density(rng));
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (coin(rng)) edges.push_back({a, b});
  return Graph::from_edge_list(n, edges);
}

// ---------------------------------------------------------------------------

Outcome soundness_sweep() {
  Tracker t;
  std::size_t graphs = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto corpus = enumerate_connected(n);
    const auto s = scan(corpus, {}, "n=" + std::to_string(n));
    graphs += s.scanned;
    t.require(s.bounds.size() == bounds::catalog().size(), "catalog incomplete");
    t.require(s.total_violations() == 0, "n=" + std::to_string(n) + ": " + std::to_string(s.total_violations()) +
                                             " violations");
  }
  t.require(graphs == 1 + 2 + 6 + 21 + 112 + 853 + 11117, "unexpected corpus size " + std::to_string(graphs));
  t.note(std::to_string(graphs) + " graphs x " + std::to_string(bounds::catalog().size()) + " bounds, 0 violations");
  return t.done();
}

Outcome path_equality() {
  Tracker t;
  const std::vector<std::string> ids{"AH-diam-pi"};
  for (std::size_t n : {5, 6, 7}) {
    const auto s = scan(enumerate_connected(n), ids, "");
    const std::string path = emit_graph6(canonical_graph(basic_generator(BasicKind::path, n)));
    t.require(s.tally("AH-diam-pi").tight_cases == std::vector<std::string>{path},
              "n=" + std::to_string(n) + ": tight set is not exactly {P_n}");
  }
  t.note("tight set = {P_n} for n = 5, 6, 7");
  return t.done();
}

Outcome remoteness_equality_structure() {
  Tracker t;
  const std::vector<std::string> ids{"AH-rho-pi"};
  std::string counts;
  for (std::size_t n : {5, 7}) {
    const auto s = scan(enumerate_connected(n), ids, "");
    const auto& tight = s.tally("AH-rho-pi").tight_cases;
    t.require(!tight.empty(), "n=" + std::to_string(n) + ": no tight cases");
    for (const auto& code : tight)
      t.require(has_pendant_path(parse_graph6(code), (n + 1) / 2), "n=" + std::to_string(n) + ": " + code +
                                                                        " lacks a pendant path");
    counts += (counts.empty() ? "" : ", ") + std::to_string(tight.size()) + " at n=" + std::to_string(n);
  }
  t.note("every tight case has a pendant P_ceil(n/2) at a cut vertex (" + counts + ")");
  return t.done();
}

Outcome layered_invariants() {
  Tracker t;
  for (auto [delta, k] : layered_grid()) {
    const auto g = layered_extremal(delta, k);
    const auto& r = g.report;
    const std::string tag = "(" + std::to_string(delta) + "," + std::to_string(k) + ")";
    t.require(r.order == 2 * k * delta + 2, tag + " order");
    t.require(r.min_degree == delta, tag + " min degree");
    t.require(r.triangle_free == true, tag + " triangle-free");
    t.require(r.diameter == 4 * k - 1, tag + " diameter");
    t.require(r.radius == 2 * k, tag + " radius");
  }
  t.note("order 2k*delta+2, min degree delta, triangle-free, diam 4k-1, rad 2k on all 6 pairs");
  return t.done();
}

Outcome sharpness_gap() {
  Tracker t;
  Rational worst = 0;
  for (auto [delta, k] : layered_grid()) {
    const auto g = layered_extremal(delta, k);
    const auto r = bounds::evaluate(bounds::find_bound("TF-rho-pi"), g.report);
    const std::string tag = "(" + std::to_string(delta) + "," + std::to_string(k) + ")";
    t.require(r.applicable, tag + " not applicable");
    if (!r.applicable) continue;
    t.require(*r.slack > Rational(0), tag + " gap " + str(*r.slack) + " not positive");
    t.require(*r.slack < sharpness_gap_limit, tag + " gap " + str(*r.slack) + " >= 31/6");
    worst = std::max(worst, *r.slack);
  }
  t.note("largest gap " + worst.str() + " (" + worst.decimal() + ") < 31/6");
  return t.done();
}

Outcome closed_forms() {
  Tracker t;
  std::int64_t worst = 0;
  for (auto [delta, k] : layered_grid()) {
    const auto g = layered_extremal(delta, k);
    const auto d = static_cast<std::int64_t>(delta), kk = static_cast<std::int64_t>(k);
    const auto& s = g.report.total_distance;
    const Rational median = static_cast<std::int64_t>(s[g.report.median_vertices.front()]);
    const Rational margin = static_cast<std::int64_t>(s[g.report.margin_vertices.front()]);
    const Rational median_closed = 2 * d * kk * kk + 4 * kk - 3;
    const Rational margin_closed = Rational(2 * d * kk + 2) * Rational(4 * kk - 1, 2);
    const Rational dm = abs(median - median_closed), dr = abs(margin - margin_closed);
    const std::string tag = "(" + std::to_string(delta) + "," + std::to_string(k) + ")";
    t.require(dm <= Rational(closed_form_tolerance), tag + " median off by " + dm.str());
    t.require(dr <= Rational(closed_form_tolerance), tag + " margin off by " + dr.str());
    worst = std::max({worst, dm.ceil(), dr.ceil()});
  }
  t.note("max |measured - closed form| = " + std::to_string(worst) + " (tolerance " +
         std::to_string(closed_form_tolerance) + ")");
  return t.done();
}

Outcome polarity_invariants() {
  Tracker t;
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
    const std::string tag = "q=" + std::to_string(q);
    const FiniteField f = make_field(q);
    const auto h = polarity_graph(f);
    t.require(h.graph.order() == q * q + q + 1, tag + " H_q order");
    for (VertexId v = 0; v < h.graph.order(); ++v)
      t.require(h.graph.degree(v) == (h.isotropic[v] ? q : q + 1), tag + " H_q degree split");
    t.require(!find_c4(h.graph), tag + " H_q has a 4-cycle");
    const auto p = puncture(f);
    t.require(p.report.has_value(), tag + " H_q' report missing");
    if (!p.report) continue;
    t.require(p.report->order == q * q + q, tag + " H_q' order");
    t.require(p.report->min_degree == q - 1, tag + " H_q' min degree");
    t.require(p.report->diameter == 4, tag + " H_q' diameter");
  }
  for (std::uint32_t q : {4u, 5u})
    for (std::size_t k : {2u, 4u}) {
      const std::string tag = "H_{" + std::to_string(q) + "," + std::to_string(k) + "}";
      const auto c = chain(make_field(q), k);
      t.require(c.report.order == k * (q * q + q), tag + " order");
      t.require(c.report.diameter == 5 * k - 1, tag + " diameter");
      t.require(Rational(c.report.radius) == Rational(static_cast<std::int64_t>(5 * k), 2), tag + " radius");
      t.require(c.report.c4_free == true, tag + " not C4-free");
    }
  t.note("H_q, H_q' for q in {3,4,5,7,8,9}; H_{q,k} for q in {4,5}, k in {2,4}");
  return t.done();
}

Outcome epp_lemma() {
  Tracker t;
  auto check = [&](const Graph& g, const std::string& tag) {
    const auto r = check_epp_lemma(g);
    t.require(r.holds, tag + ": min ball " + std::to_string(r.min_ball) + " < " + std::to_string(r.bound));
  };
  std::size_t count = 0;
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
    const FiniteField f = make_field(q);
    check(polarity_graph(f).graph, "H_" + std::to_string(q));
    check(puncture(f).graph, "H'_" + std::to_string(q));
    count += 2;
  }
  for (std::uint32_t q : {4u, 5u})
    for (std::size_t k : {2u, 4u}) {
      check(chain(make_field(q), k).graph, "H_{" + std::to_string(q) + "," + std::to_string(k) + "}");
      ++count;
    }
  const auto pet = check_epp_lemma(petersen());
  t.require(pet.min_ball == 10 && pet.bound == 8 && pet.holds, "Petersen: expected min ball 10 vs bound 8");
  t.note(std::to_string(count + 1) + " graphs; Petersen min ball " + std::to_string(pet.min_ball) + " vs bound " +
         std::to_string(pet.bound));
  return t.done();
}

Outcome asymptotic_ratios() {
  Tracker t;
  constexpr std::size_t k = 8;
  const auto c = chain(make_field(4), k);
  const double pi_k = c.report.proximity.to_double() / k;
  const double rho_k = c.report.remoteness.to_double() / k;
  t.require(pi_k >= pi_ratio_lo && pi_k <= pi_ratio_hi, "pi/k = " + std::to_string(pi_k));
  t.require(rho_k >= rho_ratio_lo && rho_k <= rho_ratio_hi, "rho/k = " + std::to_string(rho_k));
  char buf[96];
  std::snprintf(buf, sizeof buf, "H_{4,8}: pi/k = %.4f in [%.1f, %.1f], rho/k = %.4f in [%.1f, %.1f]", pi_k, pi_ratio_lo,
                pi_ratio_hi, rho_k, rho_ratio_lo, rho_ratio_hi);
  t.note(buf);
  return t.done();
}

Outcome oracle_equivalence() {
  Tracker t;
  std::vector<std::pair<std::string, Graph>> graphs;
  std::mt19937 rng(oracle_seed);
  for (int i = 0; i < 100; ++i) graphs.emplace_back("random#" + std::to_string(i), random_connected(rng, 2 + rng() % 63));
  graphs.emplace_back("petersen", petersen());
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) graphs.emplace_back("H_q", polarity_graph(make_field(q)).graph);
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) graphs.emplace_back("H_q'", puncture(make_field(q)).graph);
  for (std::uint32_t q : {3u, 4u, 5u}) graphs.emplace_back("H_{q,2}", chain(make_field(q), 2).graph);
  graphs.emplace_back("H_{3,3}", chain(make_field(3), 3).graph);
  for (auto [delta, k] : layered_grid())
    if (2 * k * delta + 2 <= 64) graphs.emplace_back("G_{d,k}", layered_extremal(delta, k).graph);
  graphs.emplace_back("G^30_{3,2}", layered_extremal_padded(3, 2, 30).graph);
  graphs.emplace_back("G^64_{5,2}", layered_extremal_padded(5, 2, 64).graph);

  std::size_t entries = 0;
  for (const auto& [name, g] : graphs) {
    t.require(g.order() <= 64, name + " exceeds order 64");
    const auto apsp = oracle_apsp(g);
    const std::size_t n = g.order();
    for (VertexId v = 0; v < n; ++v) {
      const auto row = bfs_distances(g, v);
      t.require(std::equal(row.begin(), row.end(), apsp.begin() + v * n), name + " row " + std::to_string(v));
      entries += n;
    }
  }
  t.note(std::to_string(graphs.size()) + " graphs, " + std::to_string(entries) + " entries equal");
  return t.done();
}

Outcome performance() {
  Tracker t;
  auto timed = [](const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    const auto start = std::chrono::steady_clock::now();
    code = cli::run(args, out, err);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  int code1 = -1, code8 = -1;
  const double one = timed({"proxim", "measure", "--family", "layered", "--delta", "5", "--k", "2000"}, code1);
  const double eight =
      timed({"proxim", "--threads", "8", "measure", "--family", "layered", "--delta", "5", "--k", "2000"}, code8);
  t.require(code1 == 0 && code8 == 0, "measure failed");
  t.require(one < single_thread_limit_s, "1 thread took " + std::to_string(one) + " s");
  t.require(eight < eight_thread_limit_s, "8 threads took " + std::to_string(eight) + " s");
  char buf[128];
  std::snprintf(buf, sizeof buf, "n=20002: %.2f s on 1 thread (< %.0f), %.2f s on 8 threads (< %.0f), %u hw threads",
                one, single_thread_limit_s, eight, eight_thread_limit_s, std::thread::hardware_concurrency());
  t.note(buf);
  return t.done();
}

Outcome graph6_fidelity() {
  Tracker t;
  t.require(parse_graph6("A_") == basic_generator(BasicKind::complete, 2), "A_ != K2");
  t.require(parse_graph6("Bw") == basic_generator(BasicKind::complete, 3), "Bw != K3");
  t.require(parse_graph6("Bg") == basic_generator(BasicKind::path, 3), "Bg != P3");
  t.require(emit_graph6(basic_generator(BasicKind::complete, 2)) == "A_", "K2 != A_");
  t.require(emit_graph6(basic_generator(BasicKind::complete, 3)) == "Bw", "K3 != Bw");
  t.require(emit_graph6(basic_generator(BasicKind::path, 3)) == "Bg", "P3 != Bg");
  std::size_t count = 0;
  for (std::size_t n = 2; n <= 7; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      const std::string s = emit_graph6(g);
      t.require(parse_graph6(s) == g, "parse(emit(g)) != g for " + s);
      t.require(emit_graph6(parse_graph6(s)) == s, "emit(parse(s)) != s for " + s);
      ++count;
    }
  t.note("A_, Bw, Bg; " + std::to_string(count) + " graphs round-trip both ways");
  return t.done();
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"soundness sweep n=2..8", soundness_sweep},
      {"diameter-proximity equality only on paths", path_equality},
      {"remoteness-proximity equality structure", remoteness_equality_structure},
      {"layered family invariants", layered_invariants},
      {"triangle-free remoteness sharpness gap", sharpness_gap},
      {"median/margin closed forms", closed_forms},
      {"polarity family invariants", polarity_invariants},
      {"second neighbourhood lemma", epp_lemma},
      {"H_{4,k} asymptotic ratios", asymptotic_ratios},
      {"BFS vs Floyd-Warshall oracle", oracle_equivalence},
      {"performance on n=20002", performance},
      {"graph6 fidelity", graph6_fidelity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu  %-44s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
