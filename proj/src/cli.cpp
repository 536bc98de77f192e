#include "proxim/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "proxim/bounds.hpp"
#include "proxim/builders.hpp"
#include "proxim/constructions.hpp"
#include "proxim/errors.hpp"
#include "proxim/forbidden.hpp"
#include "proxim/graph6.hpp"
#include "proxim/report.hpp"
#include "proxim/search.hpp"

namespace proxim::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct FamilyParams {
  std::optional<std::size_t> delta;
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::optional<std::uint32_t> q;

  template <typename T> static T need(const std::optional<T>& v, const std::string& family, const char* flag) {
    if (!v) throw UsageError("family '" + family + "' requires " + flag);
    return *v;
  }
};

struct Built {
  Graph graph;
  GraphDescriptor descriptor;
  std::vector<ValidationNote> notes;
  std::optional<InvariantReport> report;
};

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"layered", "layered-padded", "polarity", "puncture",
                                              "chain",   "path",           "cycle",    "complete"};
  return names;
}

Built build_family(const std::string& family, const FamilyParams& p, MetricsOptions metrics) {
  using P = FamilyParams;
  Built b;
  b.descriptor.family = family;
  auto param = [&](const char* key, auto value) {
    b.descriptor.params[key] = static_cast<std::int64_t>(value);
    return value;
  };
  if (family == "layered" || family == "layered-padded") {
    const auto delta = param("delta", P::need(p.delta, family, "--delta"));
    const auto k = param("k", P::need(p.k, family, "--k"));
    LayeredExtremal g = family == "layered"
                            ? layered_extremal(delta, k, metrics)
                            : layered_extremal_padded(delta, k, param("n", P::need(p.n, family, "--n")), metrics);
    b.graph = std::move(g.graph);
    b.notes = std::move(g.notes);
    b.report = std::move(g.report);
  } else if (family == "polarity") {
    const auto q = param("q", P::need(p.q, family, "--q"));
    b.graph = polarity_graph(make_field(q)).graph;
  } else if (family == "puncture") {
    const auto q = param("q", P::need(p.q, family, "--q"));
    PuncturedPolarity g = puncture(make_field(q), metrics);
    b.graph = std::move(g.graph);
    b.notes = std::move(g.notes);
    b.report = std::move(g.report);
  } else if (family == "chain") {
    const auto q = param("q", P::need(p.q, family, "--q"));
    const auto k = param("k", P::need(p.k, family, "--k"));
    ChainedPolarity g = chain(make_field(q), k, metrics);
    b.graph = std::move(g.graph);
    b.notes = std::move(g.notes);
    b.report = std::move(g.report);
  } else if (family == "path" || family == "cycle" || family == "complete") {
    const auto n = param("n", P::need(p.n, family, "--n"));
    const BasicKind kind = family == "path" ? BasicKind::path : family == "cycle" ? BasicKind::cycle : BasicKind::complete;
    b.graph = basic_generator(kind, n);
  } else {
    std::string known;
    for (const auto& name : family_names()) known += (known.empty() ? "" : ", ") + name;
    throw UsageError("unknown family '" + family + "' (known: " + known + ")");
  }
  return b;
}

Built load_input(const std::string& path, const std::string& format, std::size_t index) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  Built b;
  b.descriptor.input = path;
  b.descriptor.index = index;
  if (format == "edgelist") {
    if (index != 0) throw UsageError("edge-list files hold a single graph; --index must be 0");
    b.graph = parse_edge_list(in);
    return b;
  }
  auto graphs = read_graph6_stream(in);
  if (index >= graphs.size())
    throw UsageError("'" + path + "' holds " + std::to_string(graphs.size()) + " graphs; index " +
                     std::to_string(index) + " is out of range");
  b.graph = std::move(graphs[index]);
  return b;
}

InvariantReport measure(const Built& b, MetricsOptions metrics) {
  if (b.report) return *b.report;
  InvariantReport r = invariant_report(b.graph, metrics);
  annotate_classes(b.graph, r);
  return r;
}

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> ids;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) ids.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) ids.push_back(cur);
  return ids;
}

GraphFilter parse_filter(const std::string& s) {
  if (s.empty() || s == "all") return GraphFilter::all;
  if (s == "tf") return GraphFilter::triangle_free;
  if (s == "c4") return GraphFilter::c4_free;
  if (s == "both") return GraphFilter::both;
  throw UsageError("unknown filter '" + s + "' (expected tf, c4 or both)");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

struct GraphSource {
  std::string family;
  std::string input;
  std::string format = "graph6";
  std::size_t index = 0;
  FamilyParams params;

  void attach(CLI::App* cmd, bool positional_family) {
    if (positional_family)
      cmd->add_option("family", family, "Family name")->required();
    else
      cmd->add_option("--family", family, "Constructed family");
    if (!positional_family) {
      cmd->add_option("--in", input, "Input file (graph6 lines or edge list)");
      cmd->add_option("--format", format, "Input format: graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));
      cmd->add_option("--index", index, "Graph index inside a graph6 file");
    }
    cmd->add_option("--delta", params.delta, "Minimum degree parameter");
    cmd->add_option("--k", params.k, "Block / copy count");
    cmd->add_option("--n", params.n, "Order");
    cmd->add_option("--q", params.q, "Field order");
  }

  Built resolve(MetricsOptions metrics) const {
    if (!family.empty() && !input.empty()) throw UsageError("--family and --in are mutually exclusive");
    if (family.empty() && input.empty()) throw UsageError("one of --family or --in is required");
    if (!family.empty()) return build_family(family, params, metrics);
    return load_input(input, format, index);
  }
};

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact proximity, remoteness and distance-bound verification for graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version);

  unsigned threads = 1;
  app.add_option("--threads", threads, "BFS worker threads (0 = hardware concurrency)");

  // gen
  GraphSource gen_src;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Build a graph family and print it as graph6 with validation notes");
  gen_src.attach(gen, true);
  gen->add_option("--out", gen_out, "Write the graph6 line to FILE");

  // measure
  GraphSource measure_src;
  bool measure_json = false;
  auto* measure_cmd = app.add_subcommand("measure", "Compute the exact invariant report");
  measure_src.attach(measure_cmd, false);
  measure_cmd->add_flag("--json", measure_json, "Emit JSON");

  // check
  GraphSource check_src;
  std::string check_bounds;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand("check", "Evaluate catalog bounds on one graph");
  check_src.attach(check_cmd, false);
  check_cmd->add_option("--bounds", check_bounds, "Comma-separated bound ids (default: all)");
  check_cmd->add_flag("--json", check_json, "Emit JSON");

  // scan
  std::optional<std::size_t> scan_n;
  std::string scan_filter;
  std::string scan_bounds;
  std::string scan_in;
  bool scan_json = false;
  auto* scan_cmd = app.add_subcommand("scan", "Check bounds over an enumerated or supplied corpus");
  scan_cmd->add_option("--n", scan_n, "Enumerate connected graphs of this order");
  scan_cmd->add_option("--filter", scan_filter, "tf, c4 or both");
  scan_cmd->add_option("--bounds", scan_bounds, "Comma-separated bound ids (default: all)");
  scan_cmd->add_option("--in", scan_in, "graph6 corpus file");
  scan_cmd->add_flag("--json", scan_json, "Emit JSON");

  // enum
  std::size_t enum_n = 0;
  std::string enum_filter;
  std::string enum_out;
  auto* enum_cmd = app.add_subcommand("enum", "Write all connected graphs of an order as graph6");
  enum_cmd->add_option("--n", enum_n, "Order")->required();
  enum_cmd->add_option("--filter", enum_filter, "tf, c4 or both");
  enum_cmd->add_option("--out", enum_out, "Output file")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Print the bound catalog");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  const MetricsOptions metrics{threads};
  try {
    if (gen->parsed()) {
      const Built b = build_family(gen_src.family, gen_src.params, metrics);
      const std::string line = emit_graph6(b.graph);
      if (!gen_out.empty()) {
        write_file(gen_out, line + "\n");
      } else {
        out << line << "\n";
      }
      out << "# " << b.descriptor.str() << ": order " << b.graph.order() << ", " << b.graph.edge_count()
          << " edges\n";
      out << render_notes(b.notes, "# ");
      return ok;
    }

    if (measure_cmd->parsed()) {
      const Built b = measure_src.resolve(metrics);
      ReportDocument doc;
      doc.descriptor = b.descriptor;
      doc.invariants = measure(b, metrics);
      doc.notes = b.notes;
      if (measure_json)
        out << nlohmann::json(doc).dump(2) << "\n";
      else
        out << render_table(doc);
      return ok;
    }

    if (check_cmd->parsed()) {
      const auto ids = split_ids(check_bounds);
      const auto selected = bounds::select_bounds(ids);
      const Built b = check_src.resolve(metrics);
      ReportDocument doc;
      doc.descriptor = b.descriptor;
      doc.invariants = measure(b, metrics);
      doc.notes = b.notes;
      bool violated = false;
      for (const auto* bound : selected) {
        doc.checks.push_back(bounds::evaluate(*bound, doc.invariants));
        violated = violated || doc.checks.back().violated();
      }
      if (check_json)
        out << nlohmann::json(doc).dump(2) << "\n";
      else
        out << render_table(doc);
      return violated ? bound_violation : ok;
    }

    if (scan_cmd->parsed()) {
      const auto ids = split_ids(scan_bounds);
      bounds::select_bounds(ids); // reject unknown ids before any work
      std::vector<Graph> corpus;
      std::string description;
      if (scan_n && !scan_in.empty()) throw UsageError("scan: --n and --in are mutually exclusive");
      if (!scan_in.empty()) {
        if (!scan_filter.empty()) throw UsageError("scan: --filter applies to enumeration only");
        std::ifstream in(scan_in);
        if (!in) throw IoError("cannot open '" + scan_in + "'");
        corpus = read_graph6_stream(in);
        description = scan_in;
      } else if (scan_n) {
        const GraphFilter filter = parse_filter(scan_filter);
        corpus = enumerate_connected(*scan_n, filter);
        description = "connected graphs of order " + std::to_string(*scan_n) +
                      (scan_filter.empty() ? std::string() : ", filter " + scan_filter);
      } else {
        throw UsageError("scan: one of --n or --in is required");
      }
      const ScanSummary summary = scan(corpus, ids, description);
      if (scan_json)
        out << nlohmann::json(summary).dump(2) << "\n";
      else
        out << render_scan(summary);
      return summary.total_violations() == 0 ? ok : bound_violation;
    }

    if (enum_cmd->parsed()) {
      const auto graphs = enumerate_connected(enum_n, parse_filter(enum_filter));
      std::string text;
      for (const Graph& g : graphs) text += emit_graph6(g) + "\n";
      write_file(enum_out, text);
      out << graphs.size() << " graphs written to " << enum_out << "\n";
      return ok;
    }

    if (catalog_cmd->parsed()) {
      out << bounds::render_catalog();
      return ok;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return io_error;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return io_error;
  } catch (const ConstructionIntegrityError& e) {
    err << "error: " << e.what() << "\n";
    return validation_failure;
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << "\n";
    return validation_failure;
  }
  return usage_error;
}

} // namespace proxim::cli
