#include "equiline/bounds.hpp"

#include <algorithm>
#include <cctype>

#include "equiline/errors.hpp"

namespace equiline {

namespace {

const std::array<BoundTheoremInfo, 6>& table() {
  static const std::array<BoundTheoremInfo, 6> infos = {{
      {BoundTheorem::ps1, true, true, {1, std::nullopt}, {}},
      {BoundTheorem::ps2, true, false, {1, 4}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}},
      {BoundTheorem::ps3, false, false, {1, 5}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}}},
      {BoundTheorem::ps4, true, true, {1, 6}, {}},
      {BoundTheorem::equi_six,
       false,
       false,
       {1, 6},
       {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}},
      {BoundTheorem::equi_four, false, false, {2, 4}, {{0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}},
  }};
  return infos;
}

std::string lowercase_alnum(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::pair<bool, std::string> at_most(std::size_t max_collinear, const Rational& limit, const std::string& label) {
  const bool ok = Rational(max_collinear) <= limit;
  return {ok, "max_collinear = " + std::to_string(max_collinear) + (ok ? " <= " : " > ") + label + " = " +
                  to_fraction_string(limit)};
}

}  // namespace

std::string_view name(BoundTheorem theorem) {
  switch (theorem) {
    case BoundTheorem::ps1: return "ps1";
    case BoundTheorem::ps2: return "ps2";
    case BoundTheorem::ps3: return "ps3";
    case BoundTheorem::ps4: return "ps4";
    case BoundTheorem::equi_six: return "equisix";
    case BoundTheorem::equi_four: return "equifour";
  }
  return "unknown";
}

BoundTheorem parse_bound_theorem(std::string_view text) {
  const std::string key = lowercase_alnum(text);
  for (BoundTheorem theorem : kAllBoundTheorems) {
    if (lowercase_alnum(name(theorem)) == key) return theorem;
  }
  throw InputError("unknown theorem '" + std::string(text) + "' (expected ps1, ps2, ps3, ps4, equisix, equifour)");
}

const BoundTheoremInfo& info(BoundTheorem theorem) {
  const auto& infos = table();
  return *std::find_if(infos.begin(), infos.end(), [&](const BoundTheoremInfo& i) { return i.theorem == theorem; });
}

Rational bound_value(BoundTheorem theorem, long n_in, long k_in, std::optional<std::int64_t> total_lines) {
  if (n_in < 1 || k_in < 0 || k_in > n_in) {
    throw InputError("bounds need n >= 1 and 0 <= k <= n (got n = " + std::to_string(n_in) +
                     ", k = " + std::to_string(k_in) + ")");
  }
  if (info(theorem).needs_total_lines && !total_lines) {
    throw MissingArgumentError(std::string(name(theorem)) + " needs the total number of determined lines t");
  }
  const Rational n(n_in);
  const Rational k(k_in);
  switch (theorem) {
    case BoundTheorem::ps1: return (Rational(Integer(*total_lines)) + 2 * n + 3 - k * (k + 1)) / 4;
    case BoundTheorem::ps2: return (2 * n + 6 - k * (k + 1)) / 4;
    case BoundTheorem::ps3: return (6 * n - k * (k + 3)) / 4;
    case BoundTheorem::ps4: return (Rational(Integer(*total_lines)) + 6 * n + 15 - 3 * k * (k + 1)) / 12;
    case BoundTheorem::equi_six: return (6 * n - k * (k + 3)) / 4;
    case BoundTheorem::equi_four: return (10 * n - k * (k + 5)) / 6;
  }
  return 0;
}

BoundReport evaluate_bound(BoundTheorem theorem, const IncidenceSummary& summary, const LineProfile& profile) {
  const BoundTheoremInfo& meta = info(theorem);
  const long n = profile.n();
  const long k = profile.k();
  const Rational points(2 * n - k);

  BoundReport report;
  report.theorem = theorem;
  switch (theorem) {
    case BoundTheorem::ps1:
    case BoundTheorem::ps2:
    case BoundTheorem::ps4: {
      const bool not_all = summary.max_collinear < summary.point_count;
      report.applicable = not_all;
      report.precondition_detail = not_all ? "points not all collinear" : "all points collinear";
      break;
    }
    case BoundTheorem::ps3:
      // "no 2n-k-2 points collinear"
      std::tie(report.applicable, report.precondition_detail) =
          at_most(summary.max_collinear, points - 3, "2n-k-3");
      break;
    case BoundTheorem::equi_six:
      std::tie(report.applicable, report.precondition_detail) =
          at_most(summary.max_collinear, points - 2, "2n-k-2");
      break;
    case BoundTheorem::equi_four:
      std::tie(report.applicable, report.precondition_detail) =
          at_most(summary.max_collinear, 2 * points / 3, "2(2n-k)/3");
      break;
  }
  if (meta.requires_real) {
    report.precondition_detail = std::string(summary.all_real ? "coordinates real" : "coordinates not real") +
                                 "; " + report.precondition_detail;
    report.applicable = report.applicable && summary.all_real;
  }

  report.bound = bound_value(theorem, n, k, profile.total_lines());
  report.bound_ceiling = ceil(report.bound);
  report.actual = count_equichromatic(profile, meta.query);
  for (const Cell& cell : meta.proof_cells) report.proof_cells_actual += profile.count(cell);
  report.slack = Rational(Integer(report.actual)) - report.bound;
  if (report.applicable) report.satisfied = sgn(report.slack) >= 0;
  return report;
}

BoundReport evaluate_bound(BoundTheorem theorem, const ColoredConfiguration& config) {
  const auto lines = enumerate_lines(config);
  return evaluate_bound(theorem, summarize(config, lines), compute_profile(config, lines));
}

}  // namespace equiline
