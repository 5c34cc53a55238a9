// Command-line front end: analyze, search, verify, graph.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "noncent/analysis.hpp"
#include "noncent/catalog.hpp"
#include "noncent/families.hpp"
#include "noncent/graph.hpp"
#include "noncent/theorems.hpp"

#ifndef NONCENT_CATALOG_DIR
#define NONCENT_CATALOG_DIR "catalogs"
#endif

namespace fs = std::filesystem;
using namespace noncent;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

// Bare file names fall back to the shipped catalog directory.
std::string resolve_catalog(const std::string& path) {
  if (fs::exists(path)) return path;
  const auto shipped = fs::path(NONCENT_CATALOG_DIR) / path;
  if (fs::exists(shipped)) return shipped.string();
  return path;
}

std::vector<std::string> resolve_all(const std::vector<std::string>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(resolve_catalog(p));
  return out;
}

// A source is a catalog file (all entries, or the one named by `name`) or a
// family spec.
std::vector<LabeledGroup> resolve_source(const std::string& source, const std::string& name) {
  const auto path = resolve_catalog(source);
  if (fs::is_regular_file(path)) {
    auto entries = load(path);
    if (!name.empty()) {
      const auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.label == name; });
      if (it == entries.end()) throw Error(Errc::InvalidArgument, "no entry '" + name + "' in " + path);
      return {{it->label, it->group()}};
    }
    return materialize(entries);
  }
  if (!name.empty()) throw Error(Errc::InvalidArgument, "--name applies to catalog files only");
  return {{source, families::from_spec(source)}};
}

std::vector<LabeledGroup> sorted(std::vector<LabeledGroup> groups) {
  std::stable_sort(groups.begin(), groups.end(), [](const LabeledGroup& a, const LabeledGroup& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return natural_less(a.label, b.label);
  });
  return groups;
}

struct AnalyzeOptions {
  std::string source;
  std::string name;
  std::string format = "text";
};

int cmd_analyze(const AnalyzeOptions& o) {
  bool first = true;
  for (const auto& g : resolve_source(o.source, o.name)) {
    const auto report = regularity_report(g.group, g.label);
    if (!first) std::cout << '\n';
    first = false;
    std::cout << (o.format == "kv" ? report.to_key_value() : report.to_text());
  }
  return 0;
}

struct SearchOptions {
  std::vector<std::string> catalogs;
  bool regular = false;
  bool induced = false;
  bool reduced = false;
  bool table1 = false;
  std::optional<std::size_t> degree;
};

int cmd_search(const SearchOptions& o) {
  const auto groups = sorted(materialize(load_all(resolve_all(o.catalogs))));
  if (o.table1) {
    for (const auto& row : table1_search(groups)) {
      std::cout << "n=" << row.degree << "\t" << row.labels.size() << "\t";
      for (std::size_t i = 0; i < row.labels.size(); ++i) std::cout << (i ? " " : "") << row.labels[i];
      std::cout << '\n';
    }
    return 0;
  }
  for (const auto& g : groups) {
    std::optional<std::size_t> degree;
    if (o.induced) {
      degree = is_induced_regular(g.group);
    } else {
      degree = is_regular(g.group);
      if (o.reduced && degree) {
        const bool two_group = !g.group.is_abelian() && prime_power_base(g.group.order()) == 2;
        if (!two_group || !is_reduced_regular(g.group)) degree.reset();
      }
    }
    if (!degree || (o.degree && *o.degree != *degree)) continue;
    std::cout << g.label << '\n';
  }
  return 0;
}

struct VerifyOptions {
  std::vector<std::string> catalogs;
  std::vector<std::string> families;
  std::vector<std::string> checks;
  std::string format = "text";
};

int cmd_verify(const VerifyOptions& o) {
  auto groups = materialize(load_all(resolve_all(o.catalogs)));
  for (const auto& spec : o.families) groups.push_back({spec, families::from_spec(spec)});
  const auto results = run_suite(groups, o.checks);
  std::cout << (o.format == "kv" ? format_results_key_value(results) : format_results_text(results));
  return suite_failed(results) ? kExitFailure : 0;
}

struct GraphOptions {
  std::string source;
  std::string name;
  bool induced = false;
  std::string format = "dot";
};

int cmd_graph(const GraphOptions& o) {
  const auto format = parse_graph_format(o.format);
  const auto groups = resolve_source(o.source, o.name);
  if (groups.size() != 1) throw Error(Errc::InvalidArgument, "catalog has several entries; pick one with --name");
  std::cout << export_graph(build_graph(groups.front().group, o.induced), format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-centralizer graphs and regularity of finite groups"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Regularity report for a group");
  a->add_option("source", analyze.source, "Catalog file or family spec, e.g. 'dihedral:4 x cyclic:3'")->required();
  a->add_option("--name", analyze.name, "Entry label within a catalog file");
  a->add_option("--format", analyze.format)->check(CLI::IsMember({"text", "kv"}));

  SearchOptions search;
  auto* s = app.add_subcommand("search", "List catalog groups with a regularity property");
  s->add_option("--catalog", search.catalogs, "Catalog files")->required()->delimiter(',');
  auto* mode = s->add_option_group("mode");
  mode->add_flag("--regular", search.regular);
  mode->add_flag("--induced-regular", search.induced);
  mode->add_flag("--reduced", search.reduced);
  mode->add_flag("--table1", search.table1, "Reduced regular 2-groups grouped by degree");
  mode->require_option(1);
  s->add_option("--degree", search.degree);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run the theorem checks");
  v->add_option("--catalog", verify.catalogs, "Catalog files")->delimiter(',');
  v->add_option("--family", verify.families, "Extra family spec (repeatable)");
  v->add_option("--checks", verify.checks, "Check ids (default: all)")->delimiter(',');
  v->add_option("--format", verify.format)->check(CLI::IsMember({"text", "kv"}));

  GraphOptions graph;
  auto* g = app.add_subcommand("graph", "Export the non-centralizer graph");
  g->add_option("source", graph.source, "Catalog file or family spec")->required();
  g->add_option("--name", graph.name, "Entry label within a catalog file");
  g->add_flag("--induced", graph.induced, "Restrict to G \\ Z(G)");
  g->add_option("--format", graph.format, "dot | edge-list | parts-json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*a) return cmd_analyze(analyze);
    if (*s) return cmd_search(search);
    if (*v) {
      if (verify.catalogs.empty() && verify.families.empty()) throw Error(Errc::InvalidArgument, "nothing to verify");
      return cmd_verify(verify);
    }
    if (*g) return cmd_graph(graph);
  } catch (const Error& e) {
    std::cerr << "noncent: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
