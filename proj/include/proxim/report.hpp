#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "proxim/bounds.hpp"
#include "proxim/constructions.hpp"
#include "proxim/metrics.hpp"
#include "proxim/search.hpp"

namespace proxim {

inline constexpr const char* tool_version = "0.1.0";

/// Where a measured graph came from: a named family with integer
/// parameters, or an input file and the graph's index in it.
struct GraphDescriptor {
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::string input;
  std::optional<std::size_t> index;

  std::string str() const;
  friend bool operator==(const GraphDescriptor&, const GraphDescriptor&) = default;
};

struct ReportDocument {
  std::string version = tool_version;
  GraphDescriptor descriptor;
  InvariantReport invariants;
  std::vector<bounds::CheckResult> checks;
  std::vector<ValidationNote> notes;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// nlohmann/json hooks. Rationals serialise as {"num", "den", "decimal"};
// the decimal string is advisory and ignored on input.
void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);
void to_json(nlohmann::json& j, const InvariantReport& r);
void from_json(const nlohmann::json& j, InvariantReport& r);
void to_json(nlohmann::json& j, const ValidationNote& n);
void from_json(const nlohmann::json& j, ValidationNote& n);
void to_json(nlohmann::json& j, const GraphDescriptor& d);
void from_json(const nlohmann::json& j, GraphDescriptor& d);
void to_json(nlohmann::json& j, const ReportDocument& d);
void from_json(const nlohmann::json& j, ReportDocument& d);
void to_json(nlohmann::json& j, const BoundTally& t);
void from_json(const nlohmann::json& j, BoundTally& t);
void to_json(nlohmann::json& j, const ScanSummary& s);
void from_json(const nlohmann::json& j, ScanSummary& s);

/// Aligned, human-readable rendering of a report.
std::string render_table(const ReportDocument& doc);
std::string render_checks(const std::vector<bounds::CheckResult>& checks);
std::string render_scan(const ScanSummary& summary);
std::string render_notes(const std::vector<ValidationNote>& notes, std::string_view prefix = "");

} // namespace proxim

namespace proxim::bounds {
void to_json(nlohmann::json& j, const CheckResult& r);
void from_json(const nlohmann::json& j, CheckResult& r);
} // namespace proxim::bounds
