// gcover: analyze finite groups for coverings by proper subgroups.
//
//   gcover analyze <spec> [--json|--csv] [--timing]
//   gcover verify <suite> [--max-order N] [--json] [--catalog FILE]
//   gcover catalog [--list] [--json|--csv]
//   gcover sigma <spec> [--cap K] [--json]
//   gcover covers <spec> [--limit M] [--json]
//
// Exit codes: 0 success, 1 assertion failure, 2 parse error, 3 cap exceeded.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcover.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

enum class Format { Table, Json, Csv };

struct Settings {
  std::size_t table_cap = gcover::kDefaultTableCap;
  std::size_t threads = 0;
};

void print_reports(const std::vector<gcover::AnalysisReport>& reports, Format fmt, bool timing) {
  if (fmt == Format::Csv) std::cout << gcover::csv_header(timing) << '\n';
  if (fmt == Format::Table) std::cout << gcover::table_header() << '\n';
  for (const auto& r : reports) {
    switch (fmt) {
      case Format::Json: std::cout << gcover::to_json(r, timing).dump() << '\n'; break;
      case Format::Csv: std::cout << gcover::to_csv(r, timing) << '\n'; break;
      case Format::Table:
        std::cout << gcover::to_table_row(r);
        if (timing) std::cout << "  " << r.elapsed_ms << " ms";
        std::cout << '\n';
        break;
    }
  }
}

int cmd_analyze(const Settings& s, const std::string& spec, Format fmt, bool timing) {
  gcover::AnalysisOptions opts;
  opts.table_cap = s.table_cap;
  print_reports({gcover::analyze(spec, opts)}, fmt, timing);
  return kExitOk;
}

int cmd_verify(const Settings& s, const std::string& suite_text, std::size_t max_order, bool json,
               const std::string& catalog_path) {
  const auto suite = gcover::suite_from_name(suite_text);
  if (!suite) {
    std::cerr << "unknown suite '" << suite_text << "'\n";
    return kExitParse;
  }
  gcover::VerifyOptions opts;
  opts.max_order = max_order;
  opts.table_cap = s.table_cap;
  opts.threads = s.threads;
  std::vector<gcover::CatalogEntry> custom;
  if (!catalog_path.empty()) {
    std::ifstream in(catalog_path);
    if (!in) {
      std::cerr << "cannot read catalog '" << catalog_path << "'\n";
      return kExitParse;
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
      custom = gcover::parse_catalog(text.str());
    } catch (const std::exception& e) {
      std::cerr << "bad catalog: " << e.what() << '\n';
      return kExitParse;
    }
  }
  const auto outcome = catalog_path.empty() ? gcover::verify(*suite, opts) : gcover::verify(*suite, opts, custom);
  std::size_t failed = 0;
  for (const auto& f : outcome.findings) {
    failed += !f.ok;
    if (json)
      std::cout << gcover::to_json(f).dump() << '\n';
    else
      std::cout << (f.ok ? "PASS " : "FAIL ") << f.suite << "  " << f.spec << "  " << f.detail << '\n';
  }
  if (!json)
    std::cout << outcome.findings.size() - failed << " passed, " << failed << " failed (" << suite_text
              << ", max order " << max_order << ")\n";
  return outcome.ok() ? kExitOk : kExitAssertion;
}

int cmd_catalog(const Settings& s, bool list, Format fmt) {
  const auto& catalog = gcover::catalog_list();
  if (list) {
    for (const auto& e : catalog) {
      if (fmt == Format::Json) {
        nlohmann::ordered_json j;
        j["spec"] = e.spec;
        if (e.sigma) j["sigma"] = gcover::expectation_string(*e.sigma);
        if (e.c3) j["c3"] = *e.c3;
        j["note"] = e.note;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << e.spec;
        if (e.sigma) std::cout << "  sigma=" << gcover::expectation_string(*e.sigma);
        if (e.c3) std::cout << "  c3=" << *e.c3;
        if (!e.note.empty()) std::cout << "  # " << e.note;
        std::cout << '\n';
      }
    }
    return kExitOk;
  }
  gcover::AnalysisOptions opts;
  opts.table_cap = s.table_cap;
  auto reports = gcover::parallel_map<gcover::AnalysisReport>(
      catalog.size(), [&](std::size_t i) { return gcover::analyze(catalog[i].spec, opts); }, s.threads);
  print_reports(reports, fmt, false);
  return kExitOk;
}

int cmd_sigma(const Settings& s, const std::string& spec, std::size_t cap, bool json) {
  const auto g = gcover::parse_group_spec(spec, {s.table_cap});
  const auto l = gcover::all_subgroups(g);
  const auto r = gcover::sigma(g, l, cap);
  if (json) {
    nlohmann::ordered_json j;
    j["spec"] = g.spec();
    if (r.finite())
      j["sigma"] = r.value;
    else
      j["sigma"] = r.to_string();
    j["witness"] = nlohmann::ordered_json::array();
    for (std::size_t i : r.witness_indices) j["witness"].push_back(gcover::subgroup_json(l, i));
    std::cout << j.dump() << '\n';
  } else {
    std::cout << g.spec() << ": sigma = " << r.to_string() << '\n';
    for (std::size_t i : r.witness_indices)
      std::cout << "  #" << i << " size " << l[i].size() << " bits " << l[i].members().to_hex() << '\n';
  }
  return kExitOk;
}

int cmd_covers(const Settings& s, const std::string& spec, std::size_t limit, bool json) {
  const auto g = gcover::parse_group_spec(spec, {s.table_cap});
  const auto l = gcover::all_subgroups(g);
  const auto covers = gcover::enumerate_three_covers(g, l);
  std::size_t shown = 0;
  for (const auto& t : covers) {
    if (limit && shown == limit) break;
    ++shown;
    if (json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (std::size_t i : t.indices) j.push_back(gcover::subgroup_json(l, i));
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "[" << t.indices[0] << ", " << t.indices[1] << ", " << t.indices[2] << "]";
      for (std::size_t i : t.indices) std::cout << "  " << l[i].members().to_hex();
      std::cout << '\n';
    }
  }
  if (!json) std::cout << g.spec() << ": " << covers.size() << " cover(s) by three proper subgroups\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering analysis of finite groups by proper subgroups"};
  app.require_subcommand(1);
  Settings settings;
  settings.table_cap = gcover::table_cap_from_env();
  app.add_option("--threads", settings.threads, "Worker threads for catalog runs (0: all cores)");

  std::string spec, suite, catalog_path;
  bool json = false, csv = false, timing = false, list = false;
  std::size_t max_order = gcover::kDefaultVerifyMaxOrder, cap = gcover::kDefaultSigmaCap, limit = 0;

  auto* analyze = app.add_subcommand("analyze", "Analyze one group");
  analyze->add_option("spec", spec, "Group specification, e.g. \"Q8 x C3\"")->required();
  auto* aj = analyze->add_flag("--json", json, "JSON lines output");
  analyze->add_flag("--csv", csv, "CSV output")->excludes(aj);
  analyze->add_flag("--timing", timing, "Include elapsed_ms");

  auto* verify = app.add_subcommand("verify", "Check a theorem suite over the catalog");
  verify->add_option("suite", suite,
                     "theorem-a | theorem-b | corollary-c | theorem-d | corollary-e | corollary-f | c3-formulas | all")
      ->required();
  verify->add_option("--max-order", max_order, "Skip catalog groups larger than this");
  verify->add_flag("--json", json, "JSON lines output");
  verify->add_option("--catalog", catalog_path, "Check this catalog file instead of the built-in one");

  auto* catalog = app.add_subcommand("catalog", "Analyze or list the built-in catalog");
  catalog->add_flag("--list", list, "List entries and expected values only");
  auto* cj = catalog->add_flag("--json", json, "JSON lines output");
  catalog->add_flag("--csv", csv, "CSV output")->excludes(cj);

  auto* sigma = app.add_subcommand("sigma", "Minimal covering number with witness");
  sigma->add_option("spec", spec, "Group specification")->required();
  sigma->add_option("--cap", cap, "Largest cover size searched");
  sigma->add_flag("--json", json, "JSON output");

  auto* covers = app.add_subcommand("covers", "List coverings by three proper subgroups");
  covers->add_option("spec", spec, "Group specification")->required();
  covers->add_option("--limit", limit, "Print at most this many (0: all)");
  covers->add_flag("--json", json, "JSON lines output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const Format fmt = json ? Format::Json : csv ? Format::Csv : Format::Table;
  try {
    if (*analyze) return cmd_analyze(settings, spec, fmt, timing);
    if (*verify) return cmd_verify(settings, suite, max_order, json, catalog_path);
    if (*catalog) return cmd_catalog(settings, list, fmt);
    if (*sigma) return cmd_sigma(settings, spec, cap, json);
    if (*covers) return cmd_covers(settings, spec, limit, json);
  } catch (const gcover::ParseError& e) {
    std::cerr << "parse error " << e.what() << '\n';
    return kExitParse;
  } catch (const gcover::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  }
  return kExitOk;
}
