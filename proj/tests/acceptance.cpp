// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "equiline/cli_io.hpp"
#include "equiline/errors.hpp"
#include "test_support.hpp"

using namespace equiline;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

ColoredConfiguration uniform(const PointSet& set) {
  return ColoredConfiguration::create(set.d, set.points, std::vector<Color>(set.points.size(), Color::green));
}

Outcome identity_suite() {
  Outcome o;
  std::mt19937_64 rng;
  int checked = 0;
  for (int seed = 0; seed < 1000; ++seed) {
    rng.seed(static_cast<std::uint64_t>(seed));
    const auto config = testing::random_configuration(rng, {2, 20});
    const IdentityReport r = verify_identities(compute_profile(config, CheckMode::unchecked));
    o.require(r.all_passed(), "identity failure at seed " + std::to_string(seed));
    ++checked;
  }
  o.detail = o.pass ? std::to_string(checked) + " configurations, all three identities exact" : o.detail;
  return o;
}

Outcome coefficient_reproduction() {
  Outcome o;
  const Certificate six = verify_sign_claim(BoundTheorem::equi_six, 8);
  const std::map<Cell, Rational> six_expected = {{{1, 1}, -2}, {{1, 2}, -2}, {{2, 1}, -2}, {{2, 2}, -2},
                                                 {{2, 3}, -1}, {{3, 2}, -1}, {{3, 3}, -1}};
  o.require(six.verified && six.exceptional == six_expected &&
                six.exceptional_sign == ExceptionalSign::negative && six.tail_from == 8,
            "equisix negative-coefficient set mismatch");
  const Certificate four = verify_sign_claim(BoundTheorem::equi_four, 5);
  const std::map<Cell, Rational> four_expected = {{{0, 2}, 2}, {{2, 0}, 2}, {{1, 1}, 6},
                                                  {{1, 2}, 5}, {{2, 1}, 5}, {{2, 2}, 4}};
  o.require(four.verified && four.exceptional == four_expected &&
                four.exceptional_sign == ExceptionalSign::positive && four.tail_from == 5,
            "equifour positive-coefficient set mismatch");
  if (o.pass) o.detail = "equisix 7 negative cells @ window 8, equifour 6 positive cells @ window 5";
  return o;
}

Outcome hesse_oracle() {
  Outcome o;
  const auto config = uniform(hesse());
  const auto lines = enumerate_lines(config);
  const IncidenceSummary s = summarize(config, lines);
  o.require(s.lines_through(2) == 0 && s.lines_through(3) == 12 && s.total_lines() == 12, "t2/t3 mismatch");
  o.require(s.max_collinear == 3, "max_collinear != 3");
  const auto bp = evaluate(InequalityKind::bojanowski_pokora, s);
  o.require(bp.applicable && bp.lhs == 36 && bp.rhs == 36 && bp.slack == 0, "Bojanowski-Pokora not 36 = 36");
  const auto langer = evaluate(InequalityKind::langer, s);
  o.require(langer.applicable && langer.lhs == 36 && langer.rhs == 36 && langer.slack == 0, "Langer not 36 = 36");
  const auto hl = evaluate(InequalityKind::hirzebruch_linear, s);
  o.require(hl.applicable && hl.lhs == 12 && hl.rhs == 9 && hl.slack == 3, "Hirzebruch linear slack != 3");
  const auto mel = evaluate(InequalityKind::melchior, s);
  o.require(!mel.applicable && !mel.satisfied && mel.lhs == 0 && mel.rhs == 3, "Melchior not inapplicable 0 < 3");
  if (o.pass) o.detail = "t2=0 t3=12 max=3; BP 36=36, Langer 36=36, Hirzebruch 12>=9; Melchior inapplicable 0<3";
  return o;
}

Outcome exhaustive_bounds() {
  Outcome o;
  std::vector<std::pair<std::string, PointSet>> bases = {{"grid(3)", grid(3)}};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    bases.emplace_back("random_rational(8," + std::to_string(seed) + ",5)", random_rational(8, seed, 5));
  }
  std::uint64_t colorings = 0;
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  int skipped = 0;
  for (const auto& [label, base] : bases) {
    for (long k : {0L, 1L, 2L}) {
      if ((static_cast<long>(base.points.size()) + k) % 2 != 0) {
        ++skipped;  // no colouring of N points has n - (n - k) = k
        continue;
      }
      for (BoundTheorem t : {BoundTheorem::equi_six, BoundTheorem::equi_four}) {
        SearchSpec spec{base, k, t, SearchMode::exhaustive, 0, 0};
        spec.check_identities = true;
        const SearchResult r = exhaustive_search(spec);
        colorings += r.examined;
        applicable += r.applicable;
        violations += r.violations;
        o.require(r.violations == 0, std::string(name(t)) + " violated on " + label + " k=" + std::to_string(k) +
                                         " colouring " + r.first_violation.value_or("?"));
      }
    }
  }
  o.require(applicable > 0, "no applicable instance examined");
  if (o.pass) {
    o.detail = std::to_string(colorings) + " colourings, " + std::to_string(applicable) + " applicable, " +
               std::to_string(violations) + " violations (" + std::to_string(skipped) +
               " base/k pairs with odd N+k have no colourings)";
  }
  return o;
}

Outcome worked_example() {
  Outcome o;
  const Discriminant d(-1);
  auto pt = [&](long x, long y) { return ProjPoint::affine(QuadElement(d, x), QuadElement(d, y)); };
  const auto config = ColoredConfiguration::create(d, {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)},
                                                   {Color::green, Color::green, Color::red, Color::red});
  const LineProfile p = compute_profile(config);
  o.require(p.count({2, 0}) == 1 && p.count({0, 2}) == 1 && p.count({1, 1}) == 4 && p.cells().size() == 3,
            "profile mismatch");
  const BoundReport six = evaluate_bound(BoundTheorem::equi_six, config);
  o.require(six.applicable && six.actual == 4 && six.bound == 3 && six.satisfied == true, "equisix 4 vs 3");
  const BoundReport four = evaluate_bound(BoundTheorem::equi_four, config);
  o.require(four.applicable && four.actual == 6 && four.bound == fraction(10, 3) && four.satisfied == true,
            "equifour 6 vs 10/3");
  const BoundReport ps2 = evaluate_bound(BoundTheorem::ps2, config);
  o.require(ps2.applicable && ps2.actual == 4 && ps2.bound == fraction(10, 4) && ps2.satisfied == true,
            "ps2 4 vs 10/4");
  if (o.pass) o.detail = "t20=t02=1 t11=4; equisix 4>=3, equifour 6>=10/3, ps2 4>=5/2";
  return o;
}

Outcome real_plane_suite() {
  Outcome o;
  std::mt19937_64 rng;
  testing::RandomConfigOptions opt;
  opt.min_points = 3;
  opt.max_points = 20;
  opt.real_only = true;
  int configs = 0;
  std::map<InequalityKind, int> applied;
  for (int seed = 0; configs < 500; ++seed) {
    rng.seed(static_cast<std::uint64_t>(seed) + 1'000'000);
    const auto config = testing::random_configuration(rng, opt);
    const auto lines = enumerate_lines(config);
    const IncidenceSummary s = summarize(config, lines);
    if (!s.all_real || s.max_collinear == s.point_count) continue;  // need real, not all collinear
    ++configs;
    const auto mel = evaluate(InequalityKind::melchior, s);
    o.require(mel.applicable && *mel.satisfied, "Melchior violated at seed " + std::to_string(seed));
    for (InequalityKind kind : kAllInequalities) {
      const auto r = evaluate(kind, s);
      if (!r.applicable) continue;
      ++applied[kind];
      o.require(*r.satisfied, std::string(name(kind)) + " violated at seed " + std::to_string(seed));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(configs) + " configurations; applicable counts:";
    for (const auto& [kind, count] : applied) o.detail += " " + std::string(name(kind)) + "=" + std::to_string(count);
  }
  return o;
}

std::string run(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "equiline");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome determinism_and_io() {
  Outcome o;
  for (const char* spec : {"grid(3)", "near_pencil(6)", "hesse", "random_rational(8,1,5)"}) {
    int code = 0;
    const std::string doc = run({"generate", "--name", spec}, code);
    o.require(code == 0, std::string("generate failed for ") + spec);
    const ParsedConfig parsed = parse_config(doc);
    const PointSet base = generate(spec);
    o.require(std::equal(base.points.begin(), base.points.end(), parsed.config.points().begin(),
                         parsed.config.points().end()),
              std::string("round trip changed points for ") + spec);
    o.require(config_document(parsed.config) == doc, std::string("re-emitted document differs for ") + spec);

    const std::string path = std::string(EQUILINE_TEST_TMPDIR) + "/acceptance_" + std::to_string(doc.size()) + ".json";
    std::ofstream(path) << doc;
    int first_code = 0, second_code = 0;
    const std::string first = run({"analyze", path}, first_code);
    const std::string second = run({"analyze", path}, second_code);
    o.require(first_code == 0 && second_code == 0 && first == second && !first.empty(),
              std::string("analyze not byte-identical for ") + spec);
  }
  SearchSpec spec{grid(4), 0, BoundTheorem::equi_six, SearchMode::local, 42, 5000};
  o.require(local_search(spec) == local_search(spec), "local search not reproducible");
  if (o.pass) o.detail = "4 generators round-trip; analyze byte-identical; local_search(seed 42) reproducible";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> body;
    double limit_seconds;  // 0 = no runtime requirement
  };
  const std::vector<Criterion> criteria = {
      {1, "identity suite (1000 random configurations)", identity_suite, 10.0},
      {2, "coefficient reproduction with tail certificates", coefficient_reproduction, 1.0},
      {3, "Hesse configuration oracle", hesse_oracle, 1.0},
      {4, "exhaustive bound verification", exhaustive_bounds, 300.0},
      {5, "worked 2+2 example", worked_example, 0.0},
      {6, "real-plane inequality suite (500 configurations)", real_plane_suite, 0.0},
      {7, "determinism and I/O", determinism_and_io, 0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      outcome.pass = false;
      outcome.detail += " (runtime limit " + std::to_string(c.limit_seconds) + " s exceeded)";
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %d: %s -- %s (%.3f s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title,
                outcome.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
