#include "equiline/profile.hpp"

#include "equiline/errors.hpp"

namespace equiline {

void LineProfile::add_line(Cell cell, std::int64_t count) {
  if (cell.green < 0 || cell.red < 0 || cell.total() < 2) {
    throw InputError("profile cells need i, j >= 0 and i + j >= 2");
  }
  if (count == 0) return;
  cells_[cell] += count;
}

std::int64_t LineProfile::count(Cell cell) const {
  auto it = cells_.find(cell);
  return it == cells_.end() ? 0 : it->second;
}

std::map<int, std::int64_t> LineProfile::marginals() const {
  std::map<int, std::int64_t> t;
  for (const auto& [cell, count] : cells_) t[cell.total()] += count;
  return t;
}

std::int64_t LineProfile::total_lines() const {
  std::int64_t total = 0;
  for (const auto& entry : cells_) total += entry.second;
  return total;
}

LineProfile tally_profile(std::span<const DeterminedLine> lines, std::span<const Color> colors, long n, long k) {
  std::map<Cell, std::int64_t> tally;
  for (const auto& line : lines) {
    Cell cell;
    for (std::size_t index : line.points) {
      (colors[index] == Color::green ? cell.green : cell.red) += 1;
    }
    ++tally[cell];
  }
  LineProfile profile(n, k);
  for (const auto& [cell, count] : tally) profile.add_line(cell, count);
  return profile;
}

LineProfile compute_profile(const ColoredConfiguration& config, std::span<const DeterminedLine> lines,
                            CheckMode mode) {
  if (config.size() < 2) throw InsufficientInputError("a line profile needs at least two points");
  LineProfile profile = tally_profile(lines, config.colors(), config.green_count(), config.k());
  if (mode == CheckMode::checked) require_identities(verify_identities(profile));
  return profile;
}

LineProfile compute_profile(const ColoredConfiguration& config, CheckMode mode) {
  if (config.size() < 2) throw InsufficientInputError("a line profile needs at least two points");
  return compute_profile(config, enumerate_lines(config), mode);
}

IdentityReport verify_identities(const LineProfile& profile) {
  const Rational n(profile.n());
  const Rational k(profile.k());

  Rational bichromatic = 0;
  Rational monochromatic = 0;
  Rational points_on_lines = 0;
  Rational squared_imbalance = 0;
  for (const auto& [cell, count] : profile.cells()) {
    const Rational t{Integer(count)};
    bichromatic += Rational(cell.green * cell.red) * t;
    monochromatic += Rational(choose2(cell.green) + choose2(cell.red)) * t;
    points_on_lines += Rational(cell.total()) * t;
    squared_imbalance += Rational(cell.imbalance() * cell.imbalance()) * t;
  }

  IdentityReport report;
  report.bichromatic_pairs = {"bichromatic_pairs", bichromatic, n * (n - k), false};
  report.monochromatic_pairs = {"monochromatic_pairs", monochromatic, n * n - n - n * k + (k * k + k) / 2, false};
  report.balance = {"balance", points_on_lines, squared_imbalance + 2 * n - (k * k + k), false};
  for (IdentityCheck* check : {&report.bichromatic_pairs, &report.monochromatic_pairs, &report.balance}) {
    check->passed = check->lhs == check->rhs;
  }
  return report;
}

void require_identities(const IdentityReport& report) {
  for (const IdentityCheck* check : {&report.bichromatic_pairs, &report.monochromatic_pairs, &report.balance}) {
    if (!check->passed) {
      throw InternalInconsistencyError("counting identity '" + check->name + "' failed: " +
                                       to_fraction_string(check->lhs) + " != " + to_fraction_string(check->rhs));
    }
  }
}

bool EquichromaticQuery::selects(Cell cell) const {
  if (cell.total() < 2 || cell.imbalance() > r) return false;
  return !max_points || cell.total() <= *max_points;
}

std::int64_t count_equichromatic(const LineProfile& profile, const EquichromaticQuery& query) {
  std::int64_t total = 0;
  for (const auto& [cell, count] : profile.cells()) {
    if (query.selects(cell)) total += count;
  }
  return total;
}

}  // namespace equiline
