#include "equiline/projgeom.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "equiline/errors.hpp"

namespace equiline {

namespace detail {

CanonicalTriple::CanonicalTriple(QuadElement first, QuadElement second, QuadElement third)
    : coords_{std::move(first), std::move(second), std::move(third)} {
  const Discriminant d = coords_[0].discriminant();
  if (coords_[1].discriminant() != d || coords_[2].discriminant() != d) {
    throw FieldMismatchError("homogeneous coordinates from different fields");
  }
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const QuadElement& c) { return !c.is_zero(); });
  if (lead == coords_.end()) throw InputError("homogeneous triple (0 : 0 : 0) is not a projective object");
  const QuadElement scale = invert(*lead);
  for (auto& c : coords_) c *= scale;
}

}  // namespace detail

namespace {

QuadElement det3(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return p.x() * (q.y() * r.z() - q.z() * r.y()) - p.y() * (q.x() * r.z() - q.z() * r.x()) +
         p.z() * (q.x() * r.y() - q.y() * r.x());
}

}  // namespace

ProjPoint ProjPoint::affine(QuadElement x, QuadElement y) {
  const Discriminant d = x.discriminant();
  return ProjPoint(std::move(x), std::move(y), QuadElement::one(d));
}

bool ProjPoint::is_real() const { return equiline::is_real(x()) && equiline::is_real(y()) && equiline::is_real(z()); }

bool ProjLine::contains(const ProjPoint& p) const { return (u() * p.x() + v() * p.y() + w() * p.z()).is_zero(); }

std::string to_string(const ProjPoint& p) {
  return "(" + to_string(p.x()) + " : " + to_string(p.y()) + " : " + to_string(p.z()) + ")";
}

std::string to_string(const ProjLine& l) {
  return "[" + to_string(l.u()) + " : " + to_string(l.v()) + " : " + to_string(l.w()) + "]";
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) { return det3(p, q, r).is_zero(); }

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw DegeneratePairError("no unique line through a point and itself: " + to_string(p));
  return ProjLine(p.y() * q.z() - p.z() * q.y(), p.z() * q.x() - p.x() * q.z(), p.x() * q.y() - p.y() * q.x());
}

ColoredConfiguration::ColoredConfiguration(Discriminant d, std::vector<ProjPoint> points, std::vector<Color> colors)
    : d_(d), points_(std::move(points)), colors_(std::move(colors)) {}

ColoredConfiguration ColoredConfiguration::create(Discriminant d, std::vector<ColoredPoint> points) {
  std::vector<ProjPoint> coords;
  std::vector<Color> colors;
  coords.reserve(points.size());
  colors.reserve(points.size());
  for (auto& p : points) {
    coords.push_back(std::move(p.point));
    colors.push_back(p.color);
  }
  return create(d, std::move(coords), std::move(colors));
}

ColoredConfiguration ColoredConfiguration::create(Discriminant d, std::vector<ProjPoint> points,
                                                  std::vector<Color> colors) {
  if (points.size() != colors.size()) throw InputError("point and colour lists differ in length");
  if (points.empty()) throw InsufficientInputError("a configuration needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].discriminant() != d) {
      throw FieldMismatchError("point " + std::to_string(i) + " is not over Q(sqrt(" + std::to_string(d.value()) +
                               "))");
    }
  }

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points[order[i - 1]] == points[order[i]]) {
      const auto [first, second] = std::minmax(order[i - 1], order[i]);
      throw DuplicatePointError("points " + std::to_string(first) + " and " + std::to_string(second) +
                                    " coincide: " + to_string(points[first]),
                                first, second);
    }
  }

  const auto green = std::count(colors.begin(), colors.end(), Color::green);
  const bool swap = 2 * green < static_cast<long>(colors.size());
  if (swap) {
    for (auto& c : colors) c = opposite(c);
  }
  ColoredConfiguration config(d, std::move(points), std::move(colors));
  config.green_ = swap ? static_cast<long>(config.colors_.size()) - green : green;
  config.swapped_ = swap;
  return config;
}

bool ColoredConfiguration::all_real() const {
  return std::all_of(points_.begin(), points_.end(), [](const ProjPoint& p) { return p.is_real(); });
}

std::vector<DeterminedLine> enumerate_lines(std::span<const ProjPoint> points) {
  std::map<ProjLine, std::vector<std::size_t>> incidences;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      auto& on_line = incidences[line_through(points[i], points[j])];
      on_line.push_back(i);
      on_line.push_back(j);
    }
  }
  std::vector<DeterminedLine> lines;
  lines.reserve(incidences.size());
  for (auto& [line, members] : incidences) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    lines.push_back({line, std::move(members)});
  }
  return lines;
}

std::vector<DeterminedLine> enumerate_lines(const ColoredConfiguration& config) {
  return enumerate_lines(config.points());
}

std::size_t max_collinear(std::span<const DeterminedLine> lines) {
  std::size_t best = 0;
  for (const auto& line : lines) best = std::max(best, line.points.size());
  return best;
}

std::size_t max_collinear(const ColoredConfiguration& config) {
  if (config.size() < 2) throw InsufficientInputError("max_collinear needs at least two points");
  return max_collinear(enumerate_lines(config));
}

}  // namespace equiline
