#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "equiline/quadfield.hpp"

namespace equiline {

namespace detail {

// Homogeneous triple scaled so that its first nonzero entry is 1.
class CanonicalTriple {
 public:
  CanonicalTriple(QuadElement first, QuadElement second, QuadElement third);

  const QuadElement& operator[](std::size_t index) const { return coords_[index]; }
  Discriminant discriminant() const { return coords_[0].discriminant(); }

  friend bool operator==(const CanonicalTriple&, const CanonicalTriple&) = default;
  friend auto operator<=>(const CanonicalTriple&, const CanonicalTriple&) = default;

 private:
  std::array<QuadElement, 3> coords_;
};

}  // namespace detail

// Point (x : y : z) of the projective plane over Q(sqrt(d)).
class ProjPoint {
 public:
  ProjPoint(QuadElement x, QuadElement y, QuadElement z) : coords_(std::move(x), std::move(y), std::move(z)) {}
  // Affine point (x, y) lifted to (x : y : 1).
  static ProjPoint affine(QuadElement x, QuadElement y);

  const QuadElement& x() const { return coords_[0]; }
  const QuadElement& y() const { return coords_[1]; }
  const QuadElement& z() const { return coords_[2]; }
  const QuadElement& operator[](std::size_t index) const { return coords_[index]; }
  Discriminant discriminant() const { return coords_.discriminant(); }
  bool is_real() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  detail::CanonicalTriple coords_;
};

// Line u*x + v*y + w*z = 0, stored by its canonical dual triple.
class ProjLine {
 public:
  ProjLine(QuadElement u, QuadElement v, QuadElement w) : coords_(std::move(u), std::move(v), std::move(w)) {}

  const QuadElement& u() const { return coords_[0]; }
  const QuadElement& v() const { return coords_[1]; }
  const QuadElement& w() const { return coords_[2]; }
  const QuadElement& operator[](std::size_t index) const { return coords_[index]; }

  bool contains(const ProjPoint& p) const;

  friend bool operator==(const ProjLine&, const ProjLine&) = default;
  friend auto operator<=>(const ProjLine&, const ProjLine&) = default;

 private:
  detail::CanonicalTriple coords_;
};

std::string to_string(const ProjPoint& p);
std::string to_string(const ProjLine& l);

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

// Throws DegeneratePairError when p == q.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

enum class Color { green, red };

inline Color opposite(Color c) { return c == Color::green ? Color::red : Color::green; }

struct ColoredPoint {
  ProjPoint point;
  Color color;
};

// Distinct points over one field, two-colored, with green the majority colour.
// Inputs with more red than green points have their colours exchanged on
// construction; colors_swapped() records that this happened.
class ColoredConfiguration {
 public:
  // Throws FieldMismatchError, DuplicatePointError, InsufficientInputError (empty).
  static ColoredConfiguration create(Discriminant d, std::vector<ColoredPoint> points);
  static ColoredConfiguration create(Discriminant d, std::vector<ProjPoint> points, std::vector<Color> colors);

  Discriminant discriminant() const { return d_; }
  std::size_t size() const { return points_.size(); }
  std::span<const ProjPoint> points() const { return points_; }
  std::span<const Color> colors() const { return colors_; }
  const ProjPoint& point(std::size_t index) const { return points_[index]; }
  Color color(std::size_t index) const { return colors_[index]; }

  // n: number of green points.
  long green_count() const { return green_; }
  long red_count() const { return static_cast<long>(points_.size()) - green_; }
  // k = n - (red count) >= 0.
  long k() const { return 2 * green_ - static_cast<long>(points_.size()); }
  bool colors_swapped() const { return swapped_; }
  bool all_real() const;

 private:
  ColoredConfiguration(Discriminant d, std::vector<ProjPoint> points, std::vector<Color> colors);

  Discriminant d_;
  std::vector<ProjPoint> points_;
  std::vector<Color> colors_;
  long green_ = 0;
  bool swapped_ = false;
};

// A line through at least two configuration points with its full incidence set.
struct DeterminedLine {
  ProjLine line;
  std::vector<std::size_t> points;  // ascending indices
};

// Every determined line exactly once, ordered by canonical dual triple.
std::vector<DeterminedLine> enumerate_lines(std::span<const ProjPoint> points);
std::vector<DeterminedLine> enumerate_lines(const ColoredConfiguration& config);

// Throws InsufficientInputError for fewer than two points.
std::size_t max_collinear(const ColoredConfiguration& config);
std::size_t max_collinear(std::span<const DeterminedLine> lines);

}  // namespace equiline
