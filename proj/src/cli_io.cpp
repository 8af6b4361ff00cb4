#include "equiline/cli_io.hpp"

#include <fstream>
#include <sstream>

#include "equiline/errors.hpp"

namespace equiline {

namespace {

std::string color_name(Color c) { return c == Color::green ? "green" : "red"; }

std::string sign_name(ExceptionalSign s) { return s == ExceptionalSign::negative ? "negative" : "positive"; }

Json optional_bool(const std::optional<bool>& value) { return value ? Json(*value) : Json(nullptr); }

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const Json& require_field(const Json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw ParseError(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(where, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

ParsedConfig parse_config(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }

  const Json& d_field = require_field(doc, "d", "document");
  if (!d_field.is_number_integer()) throw ParseError("d", "expected an integer");
  const Discriminant d(d_field.get<std::int64_t>());

  const Json& points = require_field(doc, "points", "document");
  if (!points.is_array()) throw ParseError("points", "expected an array");
  if (points.size() < 2) throw ParseError("points", "at least two points are required");

  std::vector<ColoredPoint> colored;
  for (std::size_t index = 0; index < points.size(); ++index) {
    const std::string where = "points[" + std::to_string(index) + "]";
    const Json& coords = require_field(points[index], "coords", where);
    if (!coords.is_array() || (coords.size() != 2 && coords.size() != 3)) {
      throw ParseError(where + ".coords", "expected 2 (affine) or 3 (homogeneous) coordinates");
    }
    std::vector<QuadElement> values;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const std::string field = where + ".coords[" + std::to_string(c) + "]";
      if (!coords[c].is_string()) throw ParseError(field, "expected an element string");
      try {
        values.push_back(parse_element(coords[c].get<std::string>(), d));
      } catch (const ParseError& e) {
        throw ParseError(field, e.what());
      } catch (const InputError& e) {
        throw ParseError(field, e.what());
      }
    }
    if (values.size() == 2) values.push_back(QuadElement::one(d));

    const Json& color = require_field(points[index], "color", where);
    if (!color.is_string() || (color != "green" && color != "red")) {
      throw ParseError(where + ".color", "expected \"green\" or \"red\"");
    }
    try {
      colored.push_back({ProjPoint(values[0], values[1], values[2]), color == "green" ? Color::green : Color::red});
    } catch (const InputError& e) {
      throw ParseError(where + ".coords", e.what());
    }
  }

  ParsedConfig parsed{ColoredConfiguration::create(d, std::move(colored)), {}};
  if (parsed.config.colors_swapped()) {
    parsed.notices.push_back("more red than green points: colours exchanged so that green is the majority");
  }
  return parsed;
}

ParsedConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

namespace {

Json point_json(const ProjPoint& p, Color color) {
  Json coords = Json::array();
  if (!p.z().is_zero()) {
    coords.push_back(to_string(p.x() / p.z()));
    coords.push_back(to_string(p.y() / p.z()));
  } else {
    coords.push_back(to_string(p.x()));
    coords.push_back(to_string(p.y()));
    coords.push_back(to_string(p.z()));
  }
  Json out;
  out["coords"] = std::move(coords);
  out["color"] = color_name(color);
  return out;
}

std::string document_text(Discriminant d, std::span<const ProjPoint> points, std::span<const Color> colors) {
  Json doc;
  doc["d"] = d.value();
  doc["points"] = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) doc["points"].push_back(point_json(points[i], colors[i]));
  return doc.dump(2) + "\n";
}

}  // namespace

std::string config_document(const ColoredConfiguration& config) {
  return document_text(config.discriminant(), config.points(), config.colors());
}

std::string config_document(const PointSet& base, const Coloring& coloring) {
  if (coloring.size() != base.points.size()) throw InputError("colouring length differs from the point count");
  const std::vector<Color> colors = colors_from(coloring);
  return document_text(base.d, base.points, colors);
}

Json summary_json(const ColoredConfiguration& config, const IncidenceSummary& summary,
                  const std::vector<std::string>& notices) {
  Json out;
  out["d"] = config.discriminant().value();
  out["N"] = config.size();
  out["n"] = config.green_count();
  out["red"] = config.red_count();
  out["k"] = config.k();
  out["max_collinear"] = summary.max_collinear;
  out["total_lines"] = summary.total_lines();
  out["all_real"] = summary.all_real;
  out["notices"] = notices;
  return out;
}

Json to_json(const LineProfile& profile) {
  Json cells = Json::array();
  for (const auto& [cell, count] : profile.cells()) {
    cells.push_back(Json{{"i", cell.green}, {"j", cell.red}, {"count", count}});
  }
  Json marginals = Json::array();
  for (const auto& [k, count] : profile.marginals()) marginals.push_back(Json{{"k", k}, {"count", count}});
  Json out;
  out["cells"] = std::move(cells);
  out["marginals"] = std::move(marginals);
  return out;
}

Json to_json(const IdentityReport& report) {
  Json out;
  for (const IdentityCheck* check : {&report.bichromatic_pairs, &report.monochromatic_pairs, &report.balance}) {
    out[check->name] = Json{{"lhs", to_fraction_string(check->lhs)},
                            {"rhs", to_fraction_string(check->rhs)},
                            {"passed", check->passed}};
  }
  return out;
}

Json to_json(const InequalityReport& report) {
  Json out;
  out["kind"] = std::string(name(report.kind));
  out["applicable"] = report.applicable;
  out["precondition"] = report.precondition_detail;
  out["lhs"] = to_fraction_string(report.lhs);
  out["rhs"] = to_fraction_string(report.rhs);
  out["slack"] = to_fraction_string(report.slack);
  out["satisfied"] = optional_bool(report.satisfied);
  return out;
}

Json to_json(const BoundReport& report) {
  const BoundTheoremInfo& meta = info(report.theorem);
  Json out;
  out["theorem"] = std::string(name(report.theorem));
  out["applicable"] = report.applicable;
  out["precondition"] = report.precondition_detail;
  out["r"] = meta.query.r;
  out["max_points"] = meta.query.max_points ? Json(*meta.query.max_points) : Json(nullptr);
  out["bound"] = to_fraction_string(report.bound);
  out["bound_ceiling"] = report.bound_ceiling.get_str();
  out["actual"] = report.actual;
  if (!meta.proof_cells.empty()) out["proof_cells_actual"] = report.proof_cells_actual;
  out["slack"] = to_fraction_string(report.slack);
  out["satisfied"] = optional_bool(report.satisfied);
  return out;
}

Json to_json(const Certificate& certificate) {
  Json cells = Json::array();
  for (const auto& [cell, alpha] : certificate.exceptional) {
    cells.push_back(Json{{"i", cell.green}, {"j", cell.red}, {"alpha", to_fraction_string(alpha)}});
  }
  Json out;
  out["theorem"] = std::string(name(certificate.theorem));
  out["window"] = certificate.window;
  out["cells_checked"] = certificate.cells_checked;
  out["exceptional_sign"] = sign_name(certificate.exceptional_sign);
  out["exceptional_cells"] = std::move(cells);
  out["tail_from"] = certificate.tail_from;
  out["tail_certificate"] = certificate.tail_certificate;
  out["verified"] = certificate.verified;
  return out;
}

Json to_json(const SearchResult& result, BoundTheorem theorem) {
  Json out;
  out["theorem"] = std::string(name(theorem));
  out["n"] = result.n;
  out["k"] = result.k;
  out["examined"] = result.examined;
  out["applicable"] = result.applicable;
  out["violations"] = result.violations;
  out["first_violation"] = result.first_violation ? Json(*result.first_violation) : Json(nullptr);
  out["best_coloring"] = result.best_coloring ? Json(*result.best_coloring) : Json(nullptr);
  out["best_report"] = result.best_report ? to_json(*result.best_report) : Json(nullptr);
  if (!result.best_report) out["note"] = "no examined colouring satisfied the theorem's preconditions";
  return out;
}

Json analyze_report(const ParsedConfig& parsed) {
  const ColoredConfiguration& config = parsed.config;
  if (config.size() < 2) throw InsufficientInputError("analysis needs at least two points");
  const auto lines = enumerate_lines(config);
  const IncidenceSummary summary = summarize(config, lines);
  const LineProfile profile = compute_profile(config, lines, CheckMode::unchecked);

  Json report;
  report["summary"] = summary_json(config, summary, parsed.notices);
  report["profile"] = to_json(profile);
  report["identities"] = to_json(verify_identities(profile));
  report["inequalities"] = Json::array();
  for (InequalityKind kind : kAllInequalities) report["inequalities"].push_back(to_json(evaluate(kind, summary)));
  report["bounds"] = Json::array();
  for (BoundTheorem theorem : kAllBoundTheorems) {
    report["bounds"].push_back(to_json(evaluate_bound(theorem, summary, profile)));
  }
  return report;
}

bool report_passes(const Json& report) {
  if (auto it = report.find("identities"); it != report.end()) {
    for (const auto& [key, check] : it->items()) {
      if (!check.at("passed").get<bool>()) return false;
    }
  }
  for (const char* section : {"inequalities", "bounds"}) {
    if (auto it = report.find(section); it != report.end()) {
      for (const auto& entry : *it) {
        if (entry.at("satisfied") == false) return false;
      }
    }
  }
  if (auto it = report.find("certificates"); it != report.end()) {
    for (const auto& entry : *it) {
      if (!entry.at("verified").get<bool>()) return false;
    }
  }
  if (auto it = report.find("search"); it != report.end()) {
    if (it->at("violations").get<std::uint64_t>() > 0) return false;
  }
  return true;
}

}  // namespace equiline
