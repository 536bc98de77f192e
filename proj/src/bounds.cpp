#include "proxim/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "proxim/errors.hpp"
#include "proxim/forbidden.hpp"

namespace proxim::bounds {

std::string_view to_string(ClassRequirement c) {
  switch (c) {
  case ClassRequirement::any: return "any";
  case ClassRequirement::triangle_free: return "triangle-free";
  case ClassRequirement::c4_free: return "C4-free";
  }
  return "?";
}

std::string_view to_string(Direction d) { return d == Direction::at_most ? "<=" : ">="; }

std::string BoundSpec::hypothesis_text() const {
  std::string s = std::string(to_string(class_requirement));
  if (hypotheses.min_n > 2) s += ", n >= " + std::to_string(hypotheses.min_n);
  if (hypotheses.min_delta > 1) s += ", delta >= " + std::to_string(hypotheses.min_delta);
  if (hypotheses.parity == ParityConstraint::odd) s += ", n odd";
  if (hypotheses.parity == ParityConstraint::even) s += ", n even";
  if (hypotheses.extra == ExtraConstraint::delta_below_quarter_n_minus_one) s += ", delta < n/4 - 1";
  return s;
}

std::string BoundSpec::inequality_text() const {
  return lhs.str() + " " + std::string(to_string(direction)) + " " + rhs.str();
}

namespace {

using S = Symbol;

Expr ball_bound() { return Expr(S::delta) * S::delta - Expr(2) * Expr::floor_of(Expr(S::delta) / 2) + 1; }

std::vector<BoundSpec> build_catalog() {
  const Expr n = S::n;
  const Expr delta = S::delta;
  const Expr pi = S::proximity;
  const Expr rho = S::remoteness;
  const Expr diam = S::diameter;
  const Expr rad = S::radius;
  const Expr even_correction = Expr(1) / (Expr(4) * n - 4);
  const Expr ball = ball_bound();

  using C = ClassRequirement;
  using D = Direction;
  std::vector<BoundSpec> c;
  auto add = [&](std::string id, std::string description, C cls, Hypotheses h, Expr lhs, D dir, Expr rhs) {
    c.push_back(BoundSpec{std::move(id), std::move(description), cls, h, std::move(lhs), std::move(rhs), dir});
  };

  add("AH-rho-pi", "remoteness minus proximity, connected graphs", C::any, {.min_n = 3}, rho - pi, D::at_most,
      Expr::by_parity_of_n((n - 1) / 4, (n - 1) / 4 - even_correction));
  add("AH-diam-pi", "diameter minus proximity, connected graphs; equality exactly for paths", C::any, {.min_n = 3},
      diam - pi, D::at_most, Expr::by_parity_of_n((Expr(3) * n - 5) / 4, (Expr(3) * n - 5) / 4 - even_correction));
  add("AH-rad-pi", "radius minus proximity, connected graphs", C::any, {.min_n = 3}, rad - pi, D::at_most,
      Expr::by_parity_of_n((n - 1) / 4 - Expr(1) / (n - 1), (n - 1) / 4 - even_correction));
  add("D-rho-pi", "remoteness minus proximity given minimum degree", C::any, {.min_delta = 2}, rho - pi, D::at_most,
      Expr(3) * n / (Expr(4) * (delta + 1)) + 3);
  add("D-diam-pi", "diameter minus proximity given minimum degree", C::any, {.min_n = 20, .min_delta = 2},
      diam - pi, D::at_most, Expr(9) * n / (Expr(4) * (delta + 1)) + Expr(3) * delta / 4);
  add("D-rad-pi", "radius minus proximity given minimum degree", C::any,
      {.extra = ExtraConstraint::delta_below_quarter_n_minus_one}, rad - pi, D::at_most,
      Expr(3) * n / (Expr(4) * (delta + 1)) + (Expr(8) * delta + 5) / (Expr(4) * (delta + 1)));
  add("TF-rho-pi", "remoteness minus proximity, triangle-free", C::triangle_free, {.min_n = 7, .min_delta = 3},
      rho - pi, D::at_most, (n + 1) / (Expr(2) * delta) + 4);
  add("C4-rho-pi", "remoteness minus proximity, C4-free", C::c4_free, {.min_n = 6, .min_delta = 3}, rho - pi,
      D::at_most, Expr(5) * (n + 1) / (Expr(4) * ball) + Expr::fraction(101, 20));
  add("EPP-diam-TF", "diameter, triangle-free", C::triangle_free, {.min_delta = 3}, diam, D::at_most,
      Expr(4) * Expr::ceil_of((n - delta - 1) / (Expr(2) * delta)));
  add("EPP-diam-C4", "diameter, C4-free", C::c4_free, {.min_delta = 3}, diam, D::at_most,
      Expr::floor_of(Expr(5) * n / ball));
  add("TF-pi-diam", "proximity given diameter, triangle-free", C::triangle_free, {.min_n = 8, .min_delta = 3}, pi,
      D::at_least, delta * (diam - 4) * (diam - 1) / (Expr(8) * (n - 1)));
  add("TF-diam-pi", "diameter minus proximity, triangle-free", C::triangle_free, {.min_n = 8, .min_delta = 3},
      diam - pi, D::at_most, Expr(3) * (n - 1) / (Expr(2) * delta) + Expr::fraction(5, 2));
  add("C4-pi-diam", "proximity given diameter, C4-free", C::c4_free, {.min_n = 8, .min_delta = 3}, pi, D::at_least,
      ball * (diam - 4) * (diam - 3) / (Expr(20) * (n - 1)));
  add("C4-diam-pi", "diameter minus proximity, C4-free", C::c4_free, {.min_n = 6, .min_delta = 3}, diam - pi,
      D::at_most, Expr(15) * n / (Expr(4) * ball) + Expr::fraction(7, 4));
  add("TF-pi-rad", "proximity given radius, triangle-free", C::triangle_free, {.min_n = 6, .min_delta = 3}, pi,
      D::at_least, delta / (Expr(2) * (n - 1)) * (rad * rad - Expr(7) * rad + Expr::fraction(47, 8)));
  add("TF-rad-pi", "radius minus proximity, triangle-free", C::triangle_free, {.min_n = 6, .min_delta = 3},
      rad - pi, D::at_most, (n - 1) / (Expr(2) * delta) + Expr::fraction(11, 2));
  add("C4-pi-rad", "proximity given radius, C4-free", C::c4_free, {.min_n = 16, .min_delta = 3}, pi, D::at_least,
      ball / (Expr(5) * (n - 1)) * (rad * rad - Expr(8) * rad + Expr::fraction(127, 8)));
  add("C4-rad-pi", "radius minus proximity, C4-free", C::c4_free, {.min_n = 16, .min_delta = 3}, rad - pi,
      D::at_most, Expr(5) * (n - 1) / (Expr(4) * ball) + 4);
  add("EPP-ball", "second neighbourhood size, C4-free (minimum over vertices)", C::c4_free, {},
      Expr(S::min_ball2), D::at_least, ball);
  return c;
}

bool hypotheses_hold(const BoundSpec& b, const InvariantReport& r) {
  const auto& h = b.hypotheses;
  if (r.order < h.min_n || r.min_degree < h.min_delta) return false;
  if (h.parity == ParityConstraint::odd && r.order % 2 == 0) return false;
  if (h.parity == ParityConstraint::even && r.order % 2 == 1) return false;
  // delta < n/4 - 1  <=>  4*delta + 4 < n
  if (h.extra == ExtraConstraint::delta_below_quarter_n_minus_one && !(4 * r.min_degree + 4 < r.order)) return false;
  return true;
}

std::optional<bool> class_flag(const BoundSpec& b, const InvariantReport& r) {
  switch (b.class_requirement) {
  case ClassRequirement::any: return true;
  case ClassRequirement::triangle_free: return r.triangle_free;
  case ClassRequirement::c4_free: return r.c4_free;
  }
  return std::nullopt;
}

} // namespace

const std::vector<BoundSpec>& catalog() {
  static const std::vector<BoundSpec> entries = build_catalog();
  return entries;
}

const BoundSpec& find_bound(std::string_view id) {
  for (const auto& b : catalog())
    if (b.id == id) return b;
  throw InvalidArgument("unknown bound id '" + std::string(id) + "'");
}

std::vector<const BoundSpec*> select_bounds(std::span<const std::string> ids) {
  std::vector<const BoundSpec*> out;
  if (ids.empty()) {
    for (const auto& b : catalog()) out.push_back(&b);
  } else {
    for (const auto& id : ids) out.push_back(&find_bound(id));
  }
  return out;
}

CheckResult evaluate(const BoundSpec& bound, const InvariantReport& report) {
  CheckResult res;
  res.id = bound.id;
  const auto flag = class_flag(bound, report);
  if (!flag)
    throw InvalidArgument("bound " + bound.id + " needs the " + std::string(to_string(bound.class_requirement)) +
                          " flag, which the report does not carry");
  res.applicable = *flag && hypotheses_hold(bound, report);
  if (!res.applicable) return res;
  if (bound.id == "EPP-ball" && !report.min_ball2)
    throw InvalidArgument("bound EPP-ball needs the minimum second-neighbourhood size");

  const Bindings b{
      .n = Rational(static_cast<std::int64_t>(report.order)),
      .delta = Rational(static_cast<std::int64_t>(report.min_degree)),
      .proximity = report.proximity,
      .remoteness = report.remoteness,
      .diameter = Rational(report.diameter),
      .radius = Rational(report.radius),
      .min_ball2 = Rational(static_cast<std::int64_t>(report.min_ball2.value_or(0))),
  };
  res.lhs = bound.lhs.evaluate(b);
  res.rhs = bound.rhs.evaluate(b);
  res.slack = bound.direction == Direction::at_most ? *res.rhs - *res.lhs : *res.lhs - *res.rhs;
  res.holds = *res.slack >= Rational(0);
  res.tight = *res.slack == Rational(0);
  return res;
}

bool GraphCheck::any_violation() const {
  return std::any_of(results.begin(), results.end(), [](const CheckResult& r) { return r.violated(); });
}

GraphCheck check_graph(const Graph& g, std::span<const std::string> ids, MetricsOptions options) {
  const auto selected = select_bounds(ids);
  GraphCheck out;
  out.report = invariant_report(g, options);
  annotate_classes(g, out.report);
  out.results.reserve(selected.size());
  for (const BoundSpec* b : selected) out.results.push_back(evaluate(*b, out.report));
  return out;
}

std::string render_catalog() {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& b : catalog()) width = std::max(width, b.id.size());
  for (const auto& b : catalog()) {
    os << b.id << std::string(width - b.id.size() + 2, ' ') << b.description << "\n"
       << std::string(width + 2, ' ') << "if   " << b.hypothesis_text() << "\n"
       << std::string(width + 2, ' ') << "then " << b.inequality_text() << "\n";
  }
  return os.str();
}

} // namespace proxim::bounds
