#include "equiline/inequalities.hpp"

#include "equiline/errors.hpp"

namespace equiline {

namespace {

std::string compare_text(std::size_t lhs, const char* op, const Rational& rhs, const char* rhs_label) {
  return "max_collinear = " + std::to_string(lhs) + " " + op + " " + rhs_label + " = " + to_fraction_string(rhs);
}

// "at most `limit` points collinear"
std::pair<bool, std::string> at_most_collinear(const IncidenceSummary& s, const Rational& limit, const char* label) {
  const bool ok = Rational(s.max_collinear) <= limit;
  return {ok, compare_text(s.max_collinear, ok ? "<=" : ">", limit, label)};
}

Rational weighted_sum(const IncidenceSummary& s, auto&& weight) {
  Rational total = 0;
  for (const auto& [k, count] : s.t) total += weight(k) * Rational(Integer(count));
  return total;
}

}  // namespace

std::string_view name(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::melchior: return "melchior";
    case InequalityKind::langer: return "langer";
    case InequalityKind::hirzebruch_linear: return "hirzebruch_linear";
    case InequalityKind::hirzebruch_quadratic: return "hirzebruch_quadratic";
    case InequalityKind::bojanowski_pokora: return "bojanowski_pokora";
  }
  return "unknown";
}

InequalityKind parse_inequality_kind(std::string_view text) {
  for (InequalityKind kind : kAllInequalities) {
    if (name(kind) == text) return kind;
  }
  throw InputError("unknown inequality '" + std::string(text) +
                   "' (expected melchior, langer, hirzebruch_linear, hirzebruch_quadratic, bojanowski_pokora)");
}

std::int64_t IncidenceSummary::lines_through(int k) const {
  auto it = t.find(k);
  return it == t.end() ? 0 : it->second;
}

std::int64_t IncidenceSummary::total_lines() const {
  std::int64_t total = 0;
  for (const auto& entry : t) total += entry.second;
  return total;
}

IncidenceSummary summarize(const ColoredConfiguration& config, std::span<const DeterminedLine> lines) {
  IncidenceSummary s;
  s.point_count = config.size();
  s.max_collinear = max_collinear(lines);
  s.all_real = config.all_real();
  for (const auto& line : lines) ++s.t[static_cast<int>(line.points.size())];
  return s;
}

InequalityReport evaluate(InequalityKind kind, const IncidenceSummary& s) {
  if (s.point_count < 2) throw InsufficientInputError("inequalities need at least two points");
  const Rational n(s.point_count);
  InequalityReport report;
  report.kind = kind;

  switch (kind) {
    case InequalityKind::melchior: {
      report.lhs = weighted_sum(s, [](int k) -> Rational { return Rational(3 - k); });
      report.rhs = 3;
      const bool collinear_all = s.max_collinear == s.point_count;
      report.applicable = s.all_real && !collinear_all;
      report.precondition_detail = std::string(s.all_real ? "coordinates real" : "coordinates not real") + "; " +
                                   (collinear_all ? "all points collinear" : "points not all collinear");
      break;
    }
    case InequalityKind::langer: {
      report.lhs = weighted_sum(s, [](int k) -> Rational { return Rational(k); });
      report.rhs = n * (n + 3) / 3;
      std::tie(report.applicable, report.precondition_detail) = at_most_collinear(s, 2 * n / 3, "2N/3");
      break;
    }
    case InequalityKind::hirzebruch_linear: {
      report.lhs = Rational(s.lines_through(2) + s.lines_through(3));
      report.rhs = n + weighted_sum(s, [](int k) -> Rational { return Rational(k >= 5 ? k - 4 : 0); });
      std::tie(report.applicable, report.precondition_detail) = at_most_collinear(s, n - 2, "N-2");
      break;
    }
    case InequalityKind::hirzebruch_quadratic: {
      report.lhs = Rational(s.lines_through(2)) + fraction(3, 4) * Rational(s.lines_through(3));
      report.rhs = n + weighted_sum(s, [](int k) -> Rational { return Rational(k >= 5 ? 2 * k - 9 : 0); });
      std::tie(report.applicable, report.precondition_detail) = at_most_collinear(s, n - 3, "N-3");
      break;
    }
    case InequalityKind::bojanowski_pokora: {
      report.lhs = weighted_sum(s, [](int k) -> Rational { return Rational(4 * k - k * k); });
      report.rhs = 4 * n;
      std::tie(report.applicable, report.precondition_detail) = at_most_collinear(s, 2 * n / 3, "2N/3");
      break;
    }
  }
  report.slack = report.lhs - report.rhs;
  if (report.applicable) report.satisfied = sgn(report.slack) >= 0;
  return report;
}

InequalityReport evaluate(InequalityKind kind, const ColoredConfiguration& config) {
  if (config.size() < 2) throw InsufficientInputError("inequalities need at least two points");
  return evaluate(kind, summarize(config, enumerate_lines(config)));
}

Rational bojanowski_pokora_unscaled_slack(const IncidenceSummary& s) {
  const Rational lhs = Rational(s.lines_through(2)) + fraction(3, 4) * Rational(s.lines_through(3));
  const Rational tail = weighted_sum(s, [](int k) -> Rational { return k >= 5 ? fraction(k * k, 4) - k : Rational(0); });
  return lhs - Rational(s.point_count) - tail;
}

}  // namespace equiline
