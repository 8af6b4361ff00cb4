#include "equiline/search.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include "equiline/errors.hpp"

namespace equiline {

namespace {

QuadElement rational(Discriminant d, long value) { return QuadElement(d, value); }

std::pair<long, long> color_counts(const SearchSpec& spec) {
  const long total = static_cast<long>(spec.base.points.size());
  if (total < 2) throw InsufficientInputError("search needs a base set of at least two points");
  if (spec.k < 0 || spec.k > total || (total + spec.k) % 2 != 0) {
    throw InputError("k = " + std::to_string(spec.k) + " is incompatible with " + std::to_string(total) +
                     " points (need 0 <= k <= N and N + k even)");
  }
  const long n = (total + spec.k) / 2;
  return {n, n - spec.k};
}

// Shared state for both search modes: colour-independent incidence data plus
// the running best/violation bookkeeping.
class Evaluator {
 public:
  Evaluator(const SearchSpec& spec, long n)
      : spec_(spec), lines_(enumerate_lines(spec.base.points)), n_(n) {
    summary_.point_count = spec.base.points.size();
    summary_.max_collinear = max_collinear(lines_);
    summary_.all_real = std::all_of(spec.base.points.begin(), spec.base.points.end(),
                                    [](const ProjPoint& p) { return p.is_real(); });
    for (const auto& line : lines_) ++summary_.t[static_cast<int>(line.points.size())];
    result_.n = n;
    result_.k = spec.k;
  }

  // Returns the report; updates best and violation tallies.
  BoundReport visit(const Coloring& coloring) {
    const std::vector<Color> colors = colors_from(coloring);
    const LineProfile profile = tally_profile(lines_, colors, n_, spec_.k);
    if (spec_.check_identities) require_identities(verify_identities(profile));
    BoundReport report = evaluate_bound(spec_.theorem, summary_, profile);
    ++result_.examined;
    if (report.applicable) {
      ++result_.applicable;
      if (!*report.satisfied) {
        if (result_.violations++ == 0) result_.first_violation = coloring;
      }
      const bool better = !result_.best_report || report.slack < result_.best_report->slack ||
                          (report.slack == result_.best_report->slack && coloring < *result_.best_coloring);
      if (better) {
        result_.best_coloring = coloring;
        result_.best_report = report;
      }
    }
    return report;
  }

  SearchResult result() const { return result_; }

 private:
  const SearchSpec& spec_;
  std::vector<DeterminedLine> lines_;
  IncidenceSummary summary_;
  long n_;
  SearchResult result_;
};

long parse_int(std::string_view text, std::string_view spec) {
  if (text.empty()) throw InputError("bad generator spec '" + std::string(spec) + "'");
  long value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad generator spec '" + std::string(spec) + "'");
    value = value * 10 + (c - '0');
    if (value > 1'000'000'000L) throw InputError("generator parameter too large in '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

PointSet grid(int m, Discriminant d) {
  if (m < 1) throw InputError("grid size must be positive");
  PointSet set{d, {}};
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) set.points.push_back(ProjPoint::affine(rational(d, x), rational(d, y)));
  }
  return set;
}

PointSet near_pencil(int count, Discriminant d) {
  if (count < 3) throw InputError("near_pencil needs at least three points");
  PointSet set{d, {}};
  for (int x = 0; x < count - 1; ++x) set.points.push_back(ProjPoint::affine(rational(d, x), rational(d, 0)));
  set.points.push_back(ProjPoint::affine(rational(d, 0), rational(d, 1)));
  return set;
}

PointSet hesse() {
  const Discriminant d(-3);
  const QuadElement zero = QuadElement::zero(d);
  const QuadElement one = QuadElement::one(d);
  const QuadElement omega(d, fraction(-1, 2), fraction(1, 2));
  const QuadElement roots[3] = {one, omega, omega * omega};
  PointSet set{d, {}};
  for (const auto& r : roots) set.points.emplace_back(zero, one, -r);
  for (const auto& r : roots) set.points.emplace_back(one, zero, -r);
  for (const auto& r : roots) set.points.emplace_back(one, -r, zero);
  return set;
}

PointSet random_rational(int count, std::uint64_t seed, int bound, Discriminant d) {
  if (count < 1 || bound < 1) throw InputError("random_rational needs positive count and bound");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numerator(-bound, bound);
  std::uniform_int_distribution<long> denominator(1, bound);
  auto coordinate = [&] {
    const long p = numerator(rng);
    const long q = denominator(rng);
    return QuadElement(d, fraction(p, q));
  };
  PointSet set{d, {}};
  std::set<ProjPoint> seen;
  const long max_attempts = 1000L * count;
  for (long attempt = 0; static_cast<int>(set.points.size()) < count; ++attempt) {
    if (attempt >= max_attempts) throw InputError("cannot draw enough distinct points with this bound");
    QuadElement x = coordinate();
    QuadElement y = coordinate();
    ProjPoint p = ProjPoint::affine(std::move(x), std::move(y));
    if (seen.insert(p).second) set.points.push_back(std::move(p));
  }
  return set;
}

PointSet generate(std::string_view spec) {
  std::string compact;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact == "hesse" || compact == "hesse()") return hesse();
  const auto open = compact.find('(');
  if (open == std::string::npos || compact.back() != ')') {
    throw InputError("bad generator spec '" + std::string(spec) +
                     "' (expected grid(m), near_pencil(N), hesse, random_rational(N,seed,B))");
  }
  const std::string head = compact.substr(0, open);
  std::vector<long> args;
  std::string_view body(compact);
  body = body.substr(open + 1, body.size() - open - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    args.push_back(parse_int(body.substr(0, comma), spec));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (head == "grid" && args.size() == 1) return grid(static_cast<int>(args[0]));
  if (head == "near_pencil" && args.size() == 1) return near_pencil(static_cast<int>(args[0]));
  if (head == "random_rational" && args.size() == 3) {
    return random_rational(static_cast<int>(args[0]), static_cast<std::uint64_t>(args[1]), static_cast<int>(args[2]));
  }
  throw InputError("bad generator spec '" + std::string(spec) + "'");
}

std::vector<Color> colors_from(const Coloring& coloring) {
  std::vector<Color> colors;
  colors.reserve(coloring.size());
  for (char c : coloring) {
    if (c != '0' && c != '1') throw InputError("colourings are strings of '0' (red) and '1' (green)");
    colors.push_back(c == '1' ? Color::green : Color::red);
  }
  return colors;
}

Coloring coloring_of(std::span<const Color> colors) {
  Coloring out;
  out.reserve(colors.size());
  for (Color c : colors) out += c == Color::green ? '1' : '0';
  return out;
}

ColoredConfiguration colorize(const PointSet& base, const Coloring& coloring) {
  if (coloring.size() != base.points.size()) throw InputError("colouring length differs from the point count");
  return ColoredConfiguration::create(base.d, base.points, colors_from(coloring));
}

SearchResult exhaustive_search(const SearchSpec& spec) {
  const auto [n, red] = color_counts(spec);
  const Integer colorings = binomial(spec.base.points.size(), static_cast<unsigned long>(n));
  if (colorings > Integer(std::to_string(spec.cap))) {
    throw CapExceededError("exhaustive search over " + colorings.get_str() + " colourings exceeds the cap of " +
                               std::to_string(spec.cap),
                           colorings.get_str());
  }
  Evaluator evaluator(spec, n);
  // Ascending lexicographic order, so the first minimum seen wins ties.
  Coloring coloring = std::string(static_cast<std::size_t>(red), '0') + std::string(static_cast<std::size_t>(n), '1');
  do {
    evaluator.visit(coloring);
  } while (std::next_permutation(coloring.begin(), coloring.end()));
  return evaluator.result();
}

SearchResult local_search(const SearchSpec& spec) {
  const auto [n, red] = color_counts(spec);
  Evaluator evaluator(spec, n);
  std::mt19937_64 rng(spec.seed);

  Coloring current = std::string(static_cast<std::size_t>(red), '0') + std::string(static_cast<std::size_t>(n), '1');
  std::shuffle(current.begin(), current.end(), rng);
  Rational current_slack = evaluator.visit(current).slack;
  if (n == 0 || red == 0) return evaluator.result();

  std::vector<std::size_t> greens;
  std::vector<std::size_t> reds;
  for (std::uint64_t step = 0; step < spec.budget; ++step) {
    greens.clear();
    reds.clear();
    for (std::size_t i = 0; i < current.size(); ++i) (current[i] == '1' ? greens : reds).push_back(i);
    std::uniform_int_distribution<std::size_t> pick_green(0, greens.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_red(0, reds.size() - 1);
    Coloring candidate = current;
    std::swap(candidate[greens[pick_green(rng)]], candidate[reds[pick_red(rng)]]);
    const BoundReport report = evaluator.visit(candidate);
    // Non-worsening moves are accepted so plateaus can be crossed.
    if (report.slack <= current_slack) {
      current = std::move(candidate);
      current_slack = report.slack;
    }
  }
  return evaluator.result();
}

SearchResult run_search(const SearchSpec& spec) {
  return spec.mode == SearchMode::exhaustive ? exhaustive_search(spec) : local_search(spec);
}

}  // namespace equiline
