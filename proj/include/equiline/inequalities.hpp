#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "equiline/projgeom.hpp"
#include "equiline/rational.hpp"

namespace equiline {

// Point-line incidence inequalities on the marginals t_k of the whole point
// set. Colours play no role here.
enum class InequalityKind { melchior, langer, hirzebruch_linear, hirzebruch_quadratic, bojanowski_pokora };

inline constexpr std::array<InequalityKind, 5> kAllInequalities = {
    InequalityKind::melchior, InequalityKind::langer, InequalityKind::hirzebruch_linear,
    InequalityKind::hirzebruch_quadratic, InequalityKind::bojanowski_pokora};

std::string_view name(InequalityKind kind);
// Accepts the names produced by name(); throws InputError otherwise.
InequalityKind parse_inequality_kind(std::string_view text);

// Colour-independent facts about a point set and its determined lines.
struct IncidenceSummary {
  std::size_t point_count = 0;
  std::size_t max_collinear = 0;
  bool all_real = false;
  std::map<int, std::int64_t> t;  // t_k for k >= 2, zero entries omitted

  std::int64_t lines_through(int k) const;
  std::int64_t total_lines() const;
};

IncidenceSummary summarize(const ColoredConfiguration& config, std::span<const DeterminedLine> lines);

struct InequalityReport {
  InequalityKind kind{};
  bool applicable = false;
  std::string precondition_detail;
  Rational lhs;
  Rational rhs;
  Rational slack;                  // lhs - rhs
  std::optional<bool> satisfied;   // empty when not applicable

  friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

InequalityReport evaluate(InequalityKind kind, const IncidenceSummary& summary);
// Throws InsufficientInputError for fewer than two points.
InequalityReport evaluate(InequalityKind kind, const ColoredConfiguration& config);

// The unscaled Hirzebruch-type form t2 + 3/4 t3 >= n + sum_{k>=5} (k^2/4 - k) t_k,
// whose slack is exactly one quarter of the bojanowski_pokora slack.
Rational bojanowski_pokora_unscaled_slack(const IncidenceSummary& summary);

}  // namespace equiline
