#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "proxim/builders.hpp"
#include "proxim/cli.hpp"
#include "proxim/graph6.hpp"
#include "proxim/report.hpp"

using namespace proxim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "proxim");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "proxim_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

} // namespace

TEST_CASE("cli: gen") {
  const auto r = run_cli({"gen", "layered", "--delta", "3", "--k", "2"});
  CHECK(r.code == cli::ok);
  std::istringstream lines(r.out);
  std::string first;
  std::getline(lines, first);
  CHECK(first == "Ms\\oWC@?O@_E?K?B_");
  CHECK(r.out.find("order 14") != std::string::npos);
  CHECK(r.out.find("diameter 4k-1: expected 7, measured 7") != std::string::npos);
  CHECK(r.out.find("radius 2k: expected 4, measured 4") != std::string::npos);

  const auto bad = run_cli({"gen", "octahedron"});
  CHECK(bad.code == cli::usage_error);
  CHECK(bad.err.find("layered") != std::string::npos);
  CHECK(run_cli({"gen", "layered", "--delta", "3"}).code == cli::usage_error);
  CHECK(run_cli({"gen", "layered", "--delta", "2", "--k", "2"}).code == cli::usage_error);
  CHECK(run_cli({"gen", "puncture", "--q", "6"}).code == cli::usage_error);
  CHECK(run_cli({"gen", "chain", "--q", "2", "--k", "2"}).code == cli::validation_failure);

  const fs::path out = scratch("p5.g6");
  CHECK(run_cli({"gen", "path", "--n", "5", "--out", out.string()}).code == cli::ok);
  std::ifstream in(out);
  std::string g6;
  std::getline(in, g6);
  CHECK(g6 == "DhC");
}

TEST_CASE("cli: measure") {
  const auto r = run_cli({"measure", "--family", "cycle", "--n", "5", "--json"});
  REQUIRE(r.code == cli::ok);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("tool_version") == tool_version);
  CHECK(j.at("invariants").at("diameter") == 2);
  CHECK(j.at("invariants").at("proximity").at("num") == 3);
  CHECK(j.at("invariants").at("proximity").at("den") == 2);
  CHECK(j.at("class_flags").at("triangle_free") == true);

  // Round trip through the document type.
  const ReportDocument doc = j.get<ReportDocument>();
  CHECK(nlohmann::json(doc) == j);

  const auto table = run_cli({"measure", "--family", "path", "--n", "5"});
  CHECK(table.out.find("3/2 (1.5)") != std::string::npos);

  const fs::path file = scratch("corpus.g6");
  std::ofstream(file) << "# two graphs\nBw\nDhC\n";
  const auto second = run_cli({"measure", "--in", file.string(), "--index", "1", "--json"});
  REQUIRE(second.code == cli::ok);
  CHECK(nlohmann::json::parse(second.out).at("invariants").at("order") == 5);
  CHECK(run_cli({"measure", "--in", file.string(), "--index", "5"}).code == cli::usage_error);

  const fs::path el = scratch("p4.txt");
  std::ofstream(el) << "4 3\n0 1\n1 2\n2 3\n";
  CHECK(run_cli({"measure", "--in", el.string(), "--format", "edgelist"}).code == cli::ok);

  CHECK(run_cli({"measure"}).code == cli::usage_error);
  CHECK(run_cli({"measure", "--family", "path", "--n", "3", "--in", file.string()}).code == cli::usage_error);
  CHECK(run_cli({"measure", "--in", (fs::temp_directory_path() / "no_such_file.g6").string()}).code == cli::io_error);

  const fs::path junk = scratch("junk.g6");
  std::ofstream(junk) << "A_\n!!\n";
  CHECK(run_cli({"measure", "--in", junk.string()}).code == cli::io_error);

  const fs::path split = scratch("split.g6");
  std::ofstream(split) << "C?\n"; // four isolated vertices
  CHECK(run_cli({"measure", "--in", split.string()}).code == cli::validation_failure);
}

TEST_CASE("cli: check") {
  const auto r = run_cli({"check", "--family", "chain", "--q", "4", "--k", "2", "--json"});
  REQUIRE(r.code == cli::ok);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("checks").size() == 19);
  for (const auto& c : j.at("checks")) CHECK(c.at("holds") == true);
  CHECK(j.at("validation_notes").size() > 0);

  const auto some = run_cli({"check", "--family", "path", "--n", "5", "--bounds", "AH-diam-pi,TF-rho-pi"});
  CHECK(some.code == cli::ok);
  CHECK(some.out.find("tight") != std::string::npos);
  CHECK(some.out.find("n/a") != std::string::npos);
  CHECK(run_cli({"check", "--family", "path", "--n", "5", "--bounds", "nope"}).code == cli::usage_error);
}

TEST_CASE("cli: scan, enum, catalog") {
  const auto r = run_cli({"scan", "--n", "5", "--bounds", "AH-diam-pi"});
  REQUIRE(r.code == cli::ok);
  const std::string p5 = emit_graph6(canonical_graph(basic_generator(BasicKind::path, 5)));
  CHECK(r.out.find("tight AH-diam-pi: " + p5 + "\n") != std::string::npos);
  CHECK(r.out.find("total violations: 0") != std::string::npos);

  const auto j = nlohmann::json::parse(run_cli({"scan", "--n", "6", "--filter", "tf", "--json"}).out);
  CHECK(j.at("total_violations") == 0);
  CHECK(j.get<ScanSummary>().bounds.size() == 19);

  CHECK(run_cli({"scan"}).code == cli::usage_error);
  CHECK(run_cli({"scan", "--n", "5", "--in", "x"}).code == cli::usage_error);
  CHECK(run_cli({"scan", "--n", "12"}).code == cli::usage_error);
  CHECK(run_cli({"scan", "--n", "5", "--filter", "odd"}).code == cli::usage_error);

  const fs::path out = scratch("n4.g6");
  CHECK(run_cli({"enum", "--n", "4", "--out", out.string()}).code == cli::ok);
  const auto from_file = run_cli({"scan", "--in", out.string(), "--json"});
  REQUIRE(from_file.code == cli::ok);
  CHECK(nlohmann::json::parse(from_file.out).at("scanned") == 6);

  const auto cat = run_cli({"catalog"});
  CHECK(cat.code == cli::ok);
  CHECK(cat.out.find("EPP-ball") != std::string::npos);

  CHECK(run_cli({}).code == cli::usage_error);
  CHECK(run_cli({"frobnicate"}).code == cli::usage_error);
  CHECK(run_cli({"--version"}).code == cli::ok);
}
