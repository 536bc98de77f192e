#include "proxim/report.hpp"

#include <iomanip>
#include <sstream>

namespace proxim {

using nlohmann::json;

namespace {

template <typename T> json optional_to_json(const std::optional<T>& v) { return v ? json(*v) : json(nullptr); }

template <typename T> std::optional<T> optional_from_json(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string join_ids(const std::vector<VertexId>& ids, std::size_t limit = 16) {
  std::string s;
  for (std::size_t i = 0; i < ids.size() && i < limit; ++i) s += (i ? " " : "") + std::to_string(ids[i]);
  if (ids.size() > limit) s += " ... (" + std::to_string(ids.size()) + " total)";
  return s;
}

std::string with_decimal(const Rational& r) { return r.str() + " (" + r.decimal() + ")"; }

std::string flag_text(const std::optional<bool>& f) { return f ? (*f ? "yes" : "no") : "not computed"; }

} // namespace

std::string GraphDescriptor::str() const {
  if (!family.empty()) {
    std::string s = family;
    for (const auto& [k, v] : params) s += " " + k + "=" + std::to_string(v);
    return s;
  }
  return input + (index ? "#" + std::to_string(*index) : "");
}

void to_json(json& j, const Rational& r) {
  j = json{{"num", r.numerator()}, {"den", r.denominator()}, {"decimal", r.decimal()}};
}

void from_json(const json& j, Rational& r) { r = Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>()); }

void to_json(json& j, const InvariantReport& r) {
  j = json{
      {"order", r.order},
      {"edge_count", r.edge_count},
      {"min_degree", r.min_degree},
      {"total_distance", r.total_distance},
      {"eccentricity", r.eccentricity},
      {"proximity", r.proximity},
      {"remoteness", r.remoteness},
      {"average_distance", r.average_distance},
      {"diameter", r.diameter},
      {"radius", r.radius},
      {"median_vertices", r.median_vertices},
      {"margin_vertices", r.margin_vertices},
      {"center_vertices", r.center_vertices},
      {"min_ball2", optional_to_json(r.min_ball2)},
  };
}

void from_json(const json& j, InvariantReport& r) {
  j.at("order").get_to(r.order);
  j.at("edge_count").get_to(r.edge_count);
  j.at("min_degree").get_to(r.min_degree);
  j.at("total_distance").get_to(r.total_distance);
  j.at("eccentricity").get_to(r.eccentricity);
  j.at("proximity").get_to(r.proximity);
  j.at("remoteness").get_to(r.remoteness);
  j.at("average_distance").get_to(r.average_distance);
  j.at("diameter").get_to(r.diameter);
  j.at("radius").get_to(r.radius);
  j.at("median_vertices").get_to(r.median_vertices);
  j.at("margin_vertices").get_to(r.margin_vertices);
  j.at("center_vertices").get_to(r.center_vertices);
  r.min_ball2 = optional_from_json<std::uint64_t>(j, "min_ball2");
}

void to_json(json& j, const ValidationNote& n) {
  j = json{{"claim", n.claim}, {"expected", n.expected}, {"measured", n.measured}, {"passed", n.passed},
           {"advisory", n.advisory}};
}

void from_json(const json& j, ValidationNote& n) {
  j.at("claim").get_to(n.claim);
  j.at("expected").get_to(n.expected);
  j.at("measured").get_to(n.measured);
  j.at("passed").get_to(n.passed);
  j.at("advisory").get_to(n.advisory);
}

void to_json(json& j, const GraphDescriptor& d) {
  j = json::object();
  if (!d.family.empty()) {
    j["family"] = d.family;
    j["params"] = d.params;
  } else {
    j["input"] = d.input;
    j["index"] = optional_to_json(d.index);
  }
}

void from_json(const json& j, GraphDescriptor& d) {
  d = GraphDescriptor{};
  if (j.contains("family")) {
    j.at("family").get_to(d.family);
    j.at("params").get_to(d.params);
  } else {
    j.at("input").get_to(d.input);
    d.index = optional_from_json<std::size_t>(j, "index");
  }
}

void to_json(json& j, const ReportDocument& d) {
  j = json{
      {"tool_version", d.version},
      {"graph", d.descriptor},
      {"invariants", d.invariants},
      {"class_flags",
       {{"triangle_free", optional_to_json(d.invariants.triangle_free)},
        {"c4_free", optional_to_json(d.invariants.c4_free)}}},
      {"checks", d.checks},
      {"validation_notes", d.notes},
  };
}

void from_json(const json& j, ReportDocument& d) {
  j.at("tool_version").get_to(d.version);
  j.at("graph").get_to(d.descriptor);
  j.at("invariants").get_to(d.invariants);
  const json& flags = j.at("class_flags");
  d.invariants.triangle_free = optional_from_json<bool>(flags, "triangle_free");
  d.invariants.c4_free = optional_from_json<bool>(flags, "c4_free");
  j.at("checks").get_to(d.checks);
  j.at("validation_notes").get_to(d.notes);
}

void to_json(json& j, const BoundTally& t) {
  j = json{{"id", t.id},
           {"applicable", t.applicable},
           {"violations", t.violations},
           {"tight_cases", t.tight_cases},
           {"violation_cases", t.violation_cases},
           {"min_slack", optional_to_json(t.min_slack)},
           {"min_slack_witness", t.min_slack_witness}};
}

void from_json(const json& j, BoundTally& t) {
  j.at("id").get_to(t.id);
  j.at("applicable").get_to(t.applicable);
  j.at("violations").get_to(t.violations);
  j.at("tight_cases").get_to(t.tight_cases);
  j.at("violation_cases").get_to(t.violation_cases);
  t.min_slack = optional_from_json<Rational>(j, "min_slack");
  j.at("min_slack_witness").get_to(t.min_slack_witness);
}

void to_json(json& j, const ScanSummary& s) {
  j = json{{"corpus", s.corpus}, {"scanned", s.scanned}, {"skipped", s.skipped}, {"bounds", s.bounds},
           {"total_violations", s.total_violations()}};
}

void from_json(const json& j, ScanSummary& s) {
  j.at("corpus").get_to(s.corpus);
  j.at("scanned").get_to(s.scanned);
  j.at("skipped").get_to(s.skipped);
  j.at("bounds").get_to(s.bounds);
}

std::string render_notes(const std::vector<ValidationNote>& notes, std::string_view prefix) {
  std::ostringstream os;
  for (const auto& n : notes) {
    os << prefix << (n.passed ? "ok   " : (n.advisory ? "note " : "FAIL ")) << n.claim << ": expected " << n.expected
       << ", measured " << n.measured << (n.advisory ? " [advisory]" : "") << "\n";
  }
  return os.str();
}

std::string render_checks(const std::vector<bounds::CheckResult>& checks) {
  std::ostringstream os;
  os << std::left << std::setw(13) << "bound" << std::setw(10) << "status" << std::setw(22) << "lhs" << std::setw(22)
     << "rhs"
     << "slack\n";
  for (const auto& c : checks) {
    const char* status = !c.applicable ? "n/a" : c.violated() ? "VIOLATED" : c.tight ? "tight" : "holds";
    os << std::setw(13) << c.id << std::setw(10) << status;
    if (c.applicable)
      os << std::setw(22) << c.lhs->str() << std::setw(22) << c.rhs->str() << with_decimal(*c.slack);
    os << "\n";
  }
  return os.str();
}

std::string render_table(const ReportDocument& doc) {
  const auto& r = doc.invariants;
  std::ostringstream os;
  auto row = [&](const char* key, const std::string& value) { os << std::left << std::setw(18) << key << value << "\n"; };
  row("graph", doc.descriptor.str());
  row("order", std::to_string(r.order));
  row("edges", std::to_string(r.edge_count));
  row("min degree", std::to_string(r.min_degree));
  row("proximity", with_decimal(r.proximity));
  row("remoteness", with_decimal(r.remoteness));
  row("average distance", with_decimal(r.average_distance));
  row("diameter", std::to_string(r.diameter));
  row("radius", std::to_string(r.radius));
  row("median vertices", join_ids(r.median_vertices));
  row("margin vertices", join_ids(r.margin_vertices));
  row("centre vertices", join_ids(r.center_vertices));
  row("triangle-free", flag_text(r.triangle_free));
  row("C4-free", flag_text(r.c4_free));
  if (r.min_ball2) row("min |N<=2(v)|", std::to_string(*r.min_ball2));
  if (!doc.notes.empty()) os << "\nvalidation\n" << render_notes(doc.notes, "  ");
  if (!doc.checks.empty()) os << "\n" << render_checks(doc.checks);
  return os.str();
}

std::string render_scan(const ScanSummary& s) {
  std::ostringstream os;
  os << "corpus   " << s.corpus << "\n"
     << "scanned  " << s.scanned << " (skipped " << s.skipped << ")\n\n";
  os << std::left << std::setw(13) << "bound" << std::setw(12) << "applicable" << std::setw(12) << "violations"
     << std::setw(8) << "tight" << "min slack\n";
  for (const auto& t : s.bounds) {
    os << std::setw(13) << t.id << std::setw(12) << t.applicable << std::setw(12) << t.violations << std::setw(8)
       << t.tight_cases.size();
    if (t.min_slack) os << with_decimal(*t.min_slack) << " at " << t.min_slack_witness;
    os << "\n";
  }
  for (const auto& t : s.bounds) {
    if (!t.tight_cases.empty() && t.tight_cases.size() <= 20) {
      os << "\ntight " << t.id << ":";
      for (const auto& c : t.tight_cases) os << " " << c;
    }
    for (const auto& c : t.violation_cases) os << "\nVIOLATION " << t.id << ": " << c;
  }
  os << "\n\ntotal violations: " << s.total_violations() << "\n";
  return os.str();
}

} // namespace proxim

namespace proxim::bounds {

void to_json(nlohmann::json& j, const CheckResult& r) {
  j = nlohmann::json{{"id", r.id},
                     {"applicable", r.applicable},
                     {"lhs", optional_to_json(r.lhs)},
                     {"rhs", optional_to_json(r.rhs)},
                     {"slack", optional_to_json(r.slack)},
                     {"holds", r.holds},
                     {"tight", r.tight}};
}

void from_json(const nlohmann::json& j, CheckResult& r) {
  j.at("id").get_to(r.id);
  j.at("applicable").get_to(r.applicable);
  r.lhs = optional_from_json<Rational>(j, "lhs");
  r.rhs = optional_from_json<Rational>(j, "rhs");
  r.slack = optional_from_json<Rational>(j, "slack");
  j.at("holds").get_to(r.holds);
  j.at("tight").get_to(r.tight);
}

} // namespace proxim::bounds
