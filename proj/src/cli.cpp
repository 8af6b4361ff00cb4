#include <CLI11.hpp>

#include <ostream>

#include "equiline/cli_io.hpp"
#include "equiline/errors.hpp"

namespace equiline {

namespace {

enum class Format { json, text };

struct Output {
  Format format = Format::json;
  bool decimal = false;
};

std::string exact(const Json& value, const Output& output) {
  if (!value.is_string()) return value.dump();
  const std::string text = value.get<std::string>();
  if (!output.decimal) return text;
  Rational r;
  if (r.set_str(text, 10) != 0) return text;
  r.canonicalize();
  return text + " (~" + to_decimal_string(r) + ", approximate)";
}

std::string status(const Json& satisfied) {
  if (satisfied.is_null()) return "not applicable";
  return satisfied.get<bool>() ? "satisfied" : "VIOLATED";
}

void render_text(const Json& report, const Output& o, std::ostream& out) {
  if (auto it = report.find("summary"); it != report.end()) {
    const Json& s = *it;
    out << "configuration: N = " << s["N"] << " (n = " << s["n"] << " green, " << s["red"] << " red, k = "
        << s["k"] << ") over Q(sqrt(" << s["d"] << "))\n";
    out << "  determined lines: " << s["total_lines"] << ", max collinear: " << s["max_collinear"]
        << ", real coordinates: " << (s["all_real"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& notice : s["notices"]) out << "  notice: " << notice.get<std::string>() << "\n";
  }
  if (auto it = report.find("profile"); it != report.end()) {
    out << "profile:\n";
    for (const auto& cell : (*it)["cells"]) {
      out << "  t(" << cell["i"] << "," << cell["j"] << ") = " << cell["count"] << "\n";
    }
    out << "  marginals:";
    for (const auto& m : (*it)["marginals"]) out << " t" << m["k"] << "=" << m["count"];
    out << "\n";
  }
  if (auto it = report.find("identities"); it != report.end()) {
    out << "identities:\n";
    for (const auto& [key, check] : it->items()) {
      out << "  " << key << ": " << exact(check["lhs"], o) << " = " << exact(check["rhs"], o) << " "
          << (check["passed"].get<bool>() ? "ok" : "FAILED") << "\n";
    }
  }
  if (auto it = report.find("inequalities"); it != report.end()) {
    out << "inequalities:\n";
    for (const auto& r : *it) {
      out << "  " << r["kind"].get<std::string>() << ": lhs " << exact(r["lhs"], o) << ", rhs "
          << exact(r["rhs"], o) << ", slack " << exact(r["slack"], o) << " [" << status(r["satisfied"])
          << "; " << r["precondition"].get<std::string>() << "]\n";
    }
  }
  if (auto it = report.find("bounds"); it != report.end()) {
    out << "bounds:\n";
    for (const auto& r : *it) {
      out << "  " << r["theorem"].get<std::string>() << ": actual " << r["actual"] << " vs bound "
          << exact(r["bound"], o) << ", slack " << exact(r["slack"], o) << " [" << status(r["satisfied"]) << "; "
          << r["precondition"].get<std::string>() << "]\n";
    }
  }
  if (auto it = report.find("certificates"); it != report.end()) {
    for (const auto& c : *it) {
      out << "certificate " << c["theorem"].get<std::string>() << " (window " << c["window"] << "): "
          << (c["verified"].get<bool>() ? "verified" : "REFUTED") << "\n";
      if (c.contains("message")) out << "  " << c["message"].get<std::string>() << "\n";
      if (!c.contains("exceptional_cells")) continue;
      out << "  only " << c["exceptional_sign"].get<std::string>() << " coefficients:";
      for (const auto& cell : c["exceptional_cells"]) {
        out << " alpha(" << cell["i"] << "," << cell["j"] << ")=" << cell["alpha"].get<std::string>();
      }
      out << "\n  checked " << c["cells_checked"] << " cells; tail: " << c["tail_certificate"].get<std::string>()
          << "\n";
    }
  }
  if (auto it = report.find("search"); it != report.end()) {
    const Json& s = *it;
    out << "search " << s["theorem"].get<std::string>() << " (n = " << s["n"] << ", k = " << s["k"]
        << "): examined " << s["examined"] << ", applicable " << s["applicable"] << ", violations "
        << s["violations"] << "\n";
    if (s["best_report"].is_null()) {
      out << "  " << s["note"].get<std::string>() << "\n";
    } else {
      out << "  best colouring " << s["best_coloring"].get<std::string>() << ": actual "
          << s["best_report"]["actual"] << " vs bound " << exact(s["best_report"]["bound"], o) << ", slack "
          << exact(s["best_report"]["slack"], o) << "\n";
    }
  }
}

void emit(const Json& report, const Output& o, std::ostream& out) {
  if (o.format == Format::json) {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, o, out);
  }
}

Json config_sections(const ParsedConfig& parsed, const IncidenceSummary& summary) {
  Json report;
  report["summary"] = summary_json(parsed.config, summary, parsed.notices);
  return report;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of two-coloured point configurations and equichromatic line bounds", "equiline"};
  app.require_subcommand(1);
  Output output;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--decimal", output.decimal, "Show approximate decimals next to fractions (text format)");

  std::vector<std::string> analyze_files;
  auto* analyze = app.add_subcommand("analyze", "Profile, identities, inequalities and bounds for configurations");
  analyze->add_option("files", analyze_files, "Configuration documents")->required();

  std::string verify_file;
  std::string inequality;
  auto* verify = app.add_subcommand("verify", "Evaluate one incidence inequality");
  verify->add_option("file", verify_file)->required();
  verify->add_option("--inequality", inequality, "melchior|langer|hirzebruch_linear|hirzebruch_quadratic|"
                                                 "bojanowski_pokora")
      ->required();

  std::string bounds_file;
  std::string bounds_theorem;
  auto* bounds = app.add_subcommand("bounds", "Evaluate one equichromatic lower bound");
  bounds->add_option("file", bounds_file)->required();
  bounds->add_option("--theorem", bounds_theorem, "ps1|ps2|ps3|ps4|equisix|equifour")->required();

  std::string generator;
  std::string search_theorem;
  std::string mode = "exhaustive";
  long search_k = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;
  std::uint64_t cap = 10'000'000;
  auto* search = app.add_subcommand("search", "Search colourings of a generated point set for minimal slack");
  search->add_option("--generator", generator, "grid(m) | near_pencil(N) | hesse | random_rational(N,seed,B)")
      ->required();
  search->add_option("--k", search_k, "Green minus red count")->required();
  search->add_option("--theorem", search_theorem)->required();
  search->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "local"}));
  search->add_option("--seed", seed);
  search->add_option("--budget", budget, "Swap proposals in local mode");
  search->add_option("--cap", cap, "Maximum colourings in exhaustive mode");

  std::string proof_theorem;
  int window = 0;
  auto* proofcheck = app.add_subcommand("proofcheck", "Certify the coefficient sign claims of a proof");
  proofcheck->add_option("--theorem", proof_theorem, "equisix|equifour")->required();
  proofcheck->add_option("--window", window, "Largest i + j enumerated (default: tail threshold)");

  std::string generate_name;
  std::string coloring;
  auto* generate_cmd = app.add_subcommand("generate", "Emit a configuration document for a generated point set");
  generate_cmd->add_option("--name", generate_name, "grid(m) | near_pencil(N) | hesse | random_rational(N,seed,B)")
      ->required();
  generate_cmd->add_option("--coloring", coloring, "Bit string, 1 = green (default: first ceil(N/2) green)");

  for (auto* sub : {analyze, verify, bounds, search, proofcheck, generate_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  output.format = format == "text" ? Format::text : Format::json;

  try {
    if (*analyze) {
      std::vector<Json> reports;
      for (const auto& file : analyze_files) reports.push_back(analyze_report(load_config(file)));
      bool pass = true;
      for (const auto& r : reports) pass = pass && report_passes(r);
      if (reports.size() == 1) {
        emit(reports.front(), output, out);
      } else if (output.format == Format::json) {
        Json batch = Json::array();
        for (std::size_t i = 0; i < reports.size(); ++i) {
          batch.push_back(Json{{"file", analyze_files[i]}, {"report", reports[i]}});
        }
        out << batch.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
          out << "== " << analyze_files[i] << "\n";
          render_text(reports[i], output, out);
        }
      }
      return pass ? 0 : 1;
    }
    if (*verify) {
      const InequalityKind kind = parse_inequality_kind(inequality);
      const ParsedConfig parsed = load_config(verify_file);
      const auto lines = enumerate_lines(parsed.config);
      const IncidenceSummary summary = summarize(parsed.config, lines);
      Json report = config_sections(parsed, summary);
      report["inequalities"] = Json::array({to_json(evaluate(kind, summary))});
      emit(report, output, out);
      return report_passes(report) ? 0 : 1;
    }
    if (*bounds) {
      const BoundTheorem theorem = parse_bound_theorem(bounds_theorem);
      const ParsedConfig parsed = load_config(bounds_file);
      const auto lines = enumerate_lines(parsed.config);
      const IncidenceSummary summary = summarize(parsed.config, lines);
      const LineProfile profile = compute_profile(parsed.config, lines);
      Json report = config_sections(parsed, summary);
      report["profile"] = to_json(profile);
      report["bounds"] = Json::array({to_json(evaluate_bound(theorem, summary, profile))});
      emit(report, output, out);
      return report_passes(report) ? 0 : 1;
    }
    if (*search) {
      SearchSpec spec{generate(generator), search_k, parse_bound_theorem(search_theorem),
                      mode == "local" ? SearchMode::local : SearchMode::exhaustive, seed, budget, cap, false};
      const SearchResult result = run_search(spec);
      Json report;
      report["search"] = to_json(result, spec.theorem);
      report["search"]["generator"] = generator;
      report["search"]["mode"] = mode;
      report["search"]["seed"] = seed;
      emit(report, output, out);
      return report_passes(report) ? 0 : 1;
    }
    if (*proofcheck) {
      const BoundTheorem theorem = parse_bound_theorem(proof_theorem);
      const ProofTemplate& proof = proof_template(theorem);
      const int w = window == 0 ? proof.tail_from : window;
      Json report;
      try {
        report["certificates"] = Json::array({to_json(verify_sign_claim(proof, w))});
      } catch (const ClaimRefutedError& e) {
        report["certificates"] = Json::array({Json{{"theorem", std::string(name(theorem))},
                                                   {"window", w},
                                                   {"verified", false},
                                                   {"refuted_at", Json{{"i", e.i()}, {"j", e.j()}}},
                                                   {"message", e.what()}}});
      }
      emit(report, output, out);
      return report_passes(report) ? 0 : 1;
    }
    if (*generate_cmd) {
      const PointSet base = generate(generate_name);
      if (coloring.empty()) {
        const std::size_t greens = (base.points.size() + 1) / 2;
        coloring = std::string(greens, '1') + std::string(base.points.size() - greens, '0');
      }
      out << config_document(base, coloring);
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace equiline
