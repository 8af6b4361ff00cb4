#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equiline/bounds.hpp"
#include "equiline/projgeom.hpp"

namespace equiline {

// Uncoloured base point set.
struct PointSet {
  Discriminant d;
  std::vector<ProjPoint> points;
};

// m x m affine grid {0..m-1}^2.
PointSet grid(int m, Discriminant d = Discriminant(-1));
// N-1 points on the line y = 0 plus (0, 1).
PointSet near_pencil(int count, Discriminant d = Discriminant(-1));
// The nine flexes of x^3 + y^3 + z^3 over Q(sqrt(-3)): 12 lines of 3 points.
PointSet hesse();
// `count` distinct affine points whose coordinates are p/q with |p| <= bound,
// 1 <= q <= bound. Deterministic for a given seed.
PointSet random_rational(int count, std::uint64_t seed, int bound, Discriminant d = Discriminant(-1));

// Generator names as used on the command line: "grid(3)", "near_pencil(5)",
// "hesse", "random_rational(8,1,5)". Throws InputError.
PointSet generate(std::string_view spec);

// Bit string over the base order, '1' = green, '0' = red.
using Coloring = std::string;

std::vector<Color> colors_from(const Coloring& coloring);
Coloring coloring_of(std::span<const Color> colors);
ColoredConfiguration colorize(const PointSet& base, const Coloring& coloring);

enum class SearchMode { exhaustive, local };

struct SearchSpec {
  PointSet base;
  long k = 0;
  BoundTheorem theorem = BoundTheorem::equi_six;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;           // swap proposals in local mode
  std::uint64_t cap = 10'000'000;         // maximum colourings in exhaustive mode
  bool check_identities = false;          // run identity checks on every tally
};

struct SearchResult {
  long n = 0;
  long k = 0;
  std::optional<Coloring> best_coloring;  // empty when no examined colouring was applicable
  std::optional<BoundReport> best_report;
  std::uint64_t examined = 0;
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  std::optional<Coloring> first_violation;

  bool any_violation() const { return violations > 0; }
  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

// Throws InputError when N + k is odd or k is outside [0, N], and
// CapExceededError when C(N, n) exceeds the cap.
SearchResult exhaustive_search(const SearchSpec& spec);
SearchResult local_search(const SearchSpec& spec);
SearchResult run_search(const SearchSpec& spec);

}  // namespace equiline
