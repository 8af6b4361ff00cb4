#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "equiline/projgeom.hpp"
#include "equiline/rational.hpp"

namespace equiline {

// (green count, red count) of a determined line.
struct Cell {
  int green = 0;
  int red = 0;

  int total() const { return green + red; }
  int imbalance() const { return green > red ? green - red : red - green; }

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Counts t_{i,j} of determined lines holding exactly i green and j red points.
// Only nonzero cells with i + j >= 2 are stored; iteration is lexicographic in (i, j).
class LineProfile {
 public:
  LineProfile(long n, long k) : n_(n), k_(k) {}

  long n() const { return n_; }
  long k() const { return k_; }

  void add_line(Cell cell, std::int64_t count = 1);
  std::int64_t count(Cell cell) const;
  const std::map<Cell, std::int64_t>& cells() const { return cells_; }

  // t_m = sum of t_{i,j} with i + j = m, for every m with t_m > 0.
  std::map<int, std::int64_t> marginals() const;
  std::int64_t total_lines() const;

  friend bool operator==(const LineProfile&, const LineProfile&) = default;

 private:
  long n_;
  long k_;
  std::map<Cell, std::int64_t> cells_;
};

enum class CheckMode { checked, unchecked };

// Throws InternalInconsistencyError in checked mode when an identity fails.
LineProfile compute_profile(const ColoredConfiguration& config, CheckMode mode = CheckMode::checked);
LineProfile compute_profile(const ColoredConfiguration& config, std::span<const DeterminedLine> lines,
                            CheckMode mode = CheckMode::checked);

// Tally by colouring alone; lines are colour-independent so search reuses them.
LineProfile tally_profile(std::span<const DeterminedLine> lines, std::span<const Color> colors, long n, long k);

struct IdentityCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool passed = false;

  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

struct IdentityReport {
  // Bichromatic pairs, monochromatic pairs, and their difference split by (i+j) and (i-j)^2.
  IdentityCheck bichromatic_pairs;
  IdentityCheck monochromatic_pairs;
  IdentityCheck balance;

  bool all_passed() const { return bichromatic_pairs.passed && monochromatic_pairs.passed && balance.passed; }
};

IdentityReport verify_identities(const LineProfile& profile);

// Throws InternalInconsistencyError naming the first failed identity.
void require_identities(const IdentityReport& report);

struct EquichromaticQuery {
  int r = 0;
  std::optional<int> max_points;  // unbounded when empty

  bool selects(Cell cell) const;
};

std::int64_t count_equichromatic(const LineProfile& profile, const EquichromaticQuery& query);

}  // namespace equiline
