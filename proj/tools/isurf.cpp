#include "isurf/adjacency.hpp"
#include "isurf/catalog.hpp"
#include "isurf/config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace isurf;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

int cmd_verify(const std::string& path, const std::string& format_override, const std::string& out_path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return kInput;
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    std::cerr << "error: " << path << ": malformed JSON at byte " << e.byte << ": " << e.what() << "\n";
    return kInput;
  }
  try {
    auto cfg = parse_config(j);
    if (!format_override.empty()) cfg.output = format_override;
    const auto rep = run_config(cfg);
    const std::string text = cfg.output == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
    if (out_path.empty())
      std::cout << text;
    else if (!write_file(out_path, text))
      return kInput;
    if (cfg.dot_path && !write_file(*cfg.dot_path, build_strata_graph().to_dot())) return kInput;
    return rep.ok() ? kOk : kFail;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return kInput;
  }
}

int cmd_replicate(const std::string& only, bool list, bool as_json) {
  const auto entries = select_entries(only);
  if (entries.empty()) {
    std::cerr << "error: no catalog entry matches '" << only << "'\n";
    return kInput;
  }
  if (list) {
    for (const auto* e : entries) std::cout << e->id << "\t" << e->citation << "\t" << e->summary << "\n";
    std::cout << entries.size() << " entries\n";
    return kOk;
  }
  const auto rep = run_catalog(only);
  std::cout << (as_json ? rep.to_json().dump(2) + "\n" : rep.to_text());
  if (!as_json) std::cout << entries.size() << " catalog entries\n";
  return rep.ok() ? kOk : kFail;
}

int cmd_enumerate(Int max_mult, Int max_length, bool as_json) {
  try {
    const auto types = enumerate_types(max_mult, max_length);
    if (as_json) {
      json arr = json::array();
      for (const auto& g : types) arr.push_back(to_json(g));
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& g : types) std::cout << to_string(g) << "\tm=" << multiplicity(g) << "\n";
      std::cout << types.size() << " types\n";
    }
    return kOk;
  } catch (const GermError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

int cmd_adjacent(const std::string& from, const std::string& to) {
  try {
    std::cout << (is_adjacent(parse_germ(from), parse_germ(to)) ? "true" : "false") << "\n";
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

int cmd_strata_graph(const std::string& out) {
  const auto g = build_strata_graph();
  if (!write_file(out, g.to_dot())) return kInput;
  std::cout << g.nodes.size() << " nodes, " << g.edges.size() << " edges written to " << out << "\n";
  for (const auto& e : g.unexplained())
    std::cerr << "warning: asserted edge " << stratum_info(e.from).name << " -> " << stratum_info(e.to).name
              << " is not derived by any rule\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for I-surfaces with simple elliptic and cusp singularities"};
  app.footer(
      "Germ syntax: \"c:e1,e2,...\" for the cusp whose cycle has self-intersections -e1,-e2,...;\n"
      "\"se:m\" for simple elliptic of multiplicity m; \"rdp\"; \"smooth\"; or germ JSON such as\n"
      "{\"kind\":\"cusp\",\"es\":[4,2]}.\n"
      "Exit codes: 0 all checks pass, 1 some check fails, 2 input error.");
  app.require_subcommand(1);

  std::string config, format, out_path;
  auto* verify = app.add_subcommand("verify", "run the checks of a JSON config");
  verify->add_option("config", config, "config path")->required();
  verify->add_option("--format", format, "override the config's output format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  std::string only;
  bool list = false, rep_json = false;
  auto* rep = app.add_subcommand("replicate-paper", "run the golden replication catalog");
  rep->add_option("--only", only, "catalog id, or an id prefix before ':'");
  rep->add_flag("--list", list, "print the catalog without running it");
  rep->add_flag("--json", rep_json, "JSON report");

  Int max_mult = 2, max_length = 4;
  bool enum_json = false;
  auto* en = app.add_subcommand("enumerate", "list singularity types");
  en->add_option("--max-mult", max_mult, "1 or 2")->required();
  en->add_option("--max-length", max_length, "maximal cycle length")->required();
  en->add_flag("--json", enum_json, "JSON output");

  std::string from, to;
  auto* adj = app.add_subcommand("adjacent", "is FROM adjacent to TO under the closure");
  adj->add_option("from", from)->required();
  adj->add_option("to", to)->required();

  std::string dot_out;
  auto* sg = app.add_subcommand("strata-graph", "write the strata graph as DOT");
  sg->add_option("--out", dot_out, "DOT path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  if (*verify) return cmd_verify(config, format, out_path);
  if (*rep) return cmd_replicate(only, list, rep_json);
  if (*en) return cmd_enumerate(max_mult, max_length, enum_json);
  if (*adj) return cmd_adjacent(from, to);
  if (*sg) return cmd_strata_graph(dot_out);
  return kInput;
}
