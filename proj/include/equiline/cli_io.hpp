#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "equiline/bounds.hpp"
#include "equiline/inequalities.hpp"
#include "equiline/profile.hpp"
#include "equiline/proofcheck.hpp"
#include "equiline/search.hpp"

namespace equiline {

using Json = nlohmann::ordered_json;

struct ParsedConfig {
  ColoredConfiguration config;
  std::vector<std::string> notices;
};

// Parses a configuration document:
//   {"d": -3, "points": [{"coords": ["0", "1", "-1"], "color": "green"}, ...]}
// Two coordinates are affine and lifted with z = 1. Throws ParseError (with a
// field location), DuplicatePointError, InvalidDiscriminantError.
ParsedConfig parse_config(std::string_view text);
ParsedConfig load_config(const std::string& path);

// Canonical document text; affine coordinates whenever z != 0.
std::string config_document(const ColoredConfiguration& config);
std::string config_document(const PointSet& base, const Coloring& coloring);

// Report sections. Exact values are fraction strings; counts are integers.
Json summary_json(const ColoredConfiguration& config, const IncidenceSummary& summary,
                  const std::vector<std::string>& notices);
Json to_json(const LineProfile& profile);
Json to_json(const IdentityReport& report);
Json to_json(const InequalityReport& report);
Json to_json(const BoundReport& report);
Json to_json(const Certificate& certificate);
Json to_json(const SearchResult& result, BoundTheorem theorem);

// Full analysis of one configuration (summary, profile, identities, every
// inequality, every bound).
Json analyze_report(const ParsedConfig& parsed);
// True when every applicable check is satisfied and every identity holds.
bool report_passes(const Json& report);

// Command-line entry point. Exit codes: 0 all satisfied, 1 a check failed or a
// claim was refuted, 2 input/usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace equiline
