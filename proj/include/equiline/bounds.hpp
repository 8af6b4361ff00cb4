#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equiline/inequalities.hpp"
#include "equiline/profile.hpp"

namespace equiline {

// Lower bounds on equichromatic line counts. ps1..ps4 are the real-plane
// bounds (ps3 is also valid over C); equi_six and equi_four are the complex
// bounds for 1-equichromatic lines on <= 6 points and 2-equichromatic lines
// on <= 4 points.
enum class BoundTheorem { ps1, ps2, ps3, ps4, equi_six, equi_four };

inline constexpr std::array<BoundTheorem, 6> kAllBoundTheorems = {BoundTheorem::ps1, BoundTheorem::ps2,
                                                                  BoundTheorem::ps3, BoundTheorem::ps4,
                                                                  BoundTheorem::equi_six, BoundTheorem::equi_four};

std::string_view name(BoundTheorem theorem);
// Accepts name() output case-insensitively ("equisix", "EquiSix", "ps3"...).
BoundTheorem parse_bound_theorem(std::string_view text);

struct BoundTheoremInfo {
  BoundTheorem theorem;
  bool requires_real;
  bool needs_total_lines;
  EquichromaticQuery query;
  // Cells the proof's final inequality sums over.
  std::vector<Cell> proof_cells;
};

const BoundTheoremInfo& info(BoundTheorem theorem);

// Throws MissingArgumentError if the theorem needs t and none is given, and
// InputError unless n >= 1 and 0 <= k <= n.
Rational bound_value(BoundTheorem theorem, long n, long k, std::optional<std::int64_t> total_lines = std::nullopt);

struct BoundReport {
  BoundTheorem theorem{};
  bool applicable = false;
  std::string precondition_detail;
  Rational bound;
  Integer bound_ceiling;
  std::int64_t actual = 0;
  std::int64_t proof_cells_actual = 0;
  Rational slack;                 // actual - bound
  std::optional<bool> satisfied;  // empty when not applicable

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport evaluate_bound(BoundTheorem theorem, const IncidenceSummary& summary, const LineProfile& profile);
BoundReport evaluate_bound(BoundTheorem theorem, const ColoredConfiguration& config);

}  // namespace equiline
