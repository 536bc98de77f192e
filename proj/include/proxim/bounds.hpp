#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proxim/expr.hpp"
#include "proxim/graph.hpp"
#include "proxim/metrics.hpp"

namespace proxim::bounds {

enum class ClassRequirement { any, triangle_free, c4_free };
enum class ParityConstraint { any, odd, even };
enum class ExtraConstraint {
  none,
  /// delta < n/4 - 1
  delta_below_quarter_n_minus_one,
};
/// at_most: lhs <= rhs; at_least: lhs >= rhs.
enum class Direction { at_most, at_least };

std::string_view to_string(ClassRequirement c);
std::string_view to_string(Direction d);

struct Hypotheses {
  std::size_t min_n = 2;
  std::size_t min_delta = 1;
  ParityConstraint parity = ParityConstraint::any;
  ExtraConstraint extra = ExtraConstraint::none;
};

/// One inequality of the catalog, stored as data.
struct BoundSpec {
  std::string id;
  std::string description;
  ClassRequirement class_requirement = ClassRequirement::any;
  Hypotheses hypotheses;
  Expr lhs = 0;
  Expr rhs = 0;
  Direction direction = Direction::at_most;

  std::string hypothesis_text() const;
  std::string inequality_text() const;
};

/// The full catalog, ids stable.
const std::vector<BoundSpec>& catalog();

/// Throws InvalidArgument on an unknown id.
const BoundSpec& find_bound(std::string_view id);

/// Resolves a list of ids (empty = whole catalog).
std::vector<const BoundSpec*> select_bounds(std::span<const std::string> ids);

struct CheckResult {
  std::string id;
  bool applicable = false;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  /// Oriented so that slack >= 0 iff the inequality holds.
  std::optional<Rational> slack;
  /// Vacuously true when not applicable.
  bool holds = true;
  bool tight = false;

  bool violated() const { return applicable && !holds; }
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Evaluates one bound against a report. Throws InvalidArgument when the
/// bound needs a class flag (or the minimum 2-ball size) the report lacks.
CheckResult evaluate(const BoundSpec& bound, const InvariantReport& report);

struct GraphCheck {
  InvariantReport report;
  std::vector<CheckResult> results;

  bool any_violation() const;
};

/// Computes the report and class flags once and evaluates the requested
/// bounds (all when `ids` is empty). Throws DisconnectedGraph.
GraphCheck check_graph(const Graph& g, std::span<const std::string> ids = {}, MetricsOptions options = {});

/// Human-readable listing of the catalog.
std::string render_catalog();

} // namespace proxim::bounds
