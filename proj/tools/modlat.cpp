#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "modlat/catalog.hpp"
#include "modlat/classify.hpp"
#include "modlat/json_io.hpp"
#include "modlat/lattice.hpp"
#include "modlat/suite.hpp"
#include "modlat/verify.hpp"

namespace {

using namespace modlat;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitLoad = 2;
constexpr int kExitUnsound = 3;

struct Config {
  std::string source;
  std::string format = "text";
  std::size_t max_order = kDefaultMaxOrder;
  int n = 0;
  unsigned jobs = 1;
  bool fast = false;
  bool timing = false;
  std::string suite = "all";
};

Group load_source(const Config& cfg) {
  constexpr std::string_view prefix = "catalog:";
  if (cfg.source.starts_with(prefix)) return construct(cfg.source.substr(prefix.size()), cfg.max_order);
  if (std::filesystem::exists(cfg.source)) return load_group_file(cfg.source, cfg.max_order);
  try {
    return construct(cfg.source, cfg.max_order);
  } catch (const Error& e) {
    if (e.code() == Errc::unknown_name)
      throw Error(Errc::load_error, "'" + cfg.source + "' is neither a file nor a catalog name");
    throw;
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string ordering_text(const PrimeOrdering& phi) {
  std::string s = "(";
  for (std::size_t i = 0; i < phi.size(); ++i) s += (i ? "," : "") + std::to_string(phi[i]);
  return s + ")";
}

int cmd_classify(const Config& cfg) {
  const Group g = load_source(cfg);
  const SubgroupLattice lat(g);
  const ClassProfile p = classify(lat);
  const auto gu = residual_u(g).size();
  const auto gus = residual_us(g).size();
  if (cfg.format == "json") {
    Json j;
    j["group"] = g.name();
    j["order"] = g.order();
    j["profile"] = to_json(p);
    j["residual_u_order"] = gu;
    j["residual_us_order"] = gus;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "group " << g.name() << " (order " << g.order() << ")\n";
  for (const auto& name : profile_field_names())
    std::cout << "  " << std::left << std::setw(24) << name << yes_no(profile_field(p, name)) << "\n";
  std::string orderings;
  for (const auto& phi : p.dispersive_orderings) orderings += (orderings.empty() ? "" : " ") + ordering_text(phi);
  std::cout << "  " << std::setw(24) << "dispersive_orderings" << (orderings.empty() ? "none" : orderings) << "\n";
  std::cout << "  " << std::setw(24) << "|G^U|" << gu << "\n";
  std::cout << "  " << std::setw(24) << "|G^Us|" << gus << "\n";
  return kExitOk;
}

int cmd_lattice(const Config& cfg) {
  const GroupStudy s(load_source(cfg));
  const auto& lat = s.lattice();
  if (cfg.format == "dot") {
    std::cout << lattice_to_dot(lat);
    return kExitOk;
  }
  if (cfg.format == "json") {
    Json subs = Json::array();
    for (SubIdx i = 0; i < lat.size(); ++i)
      subs.push_back({{"index", i},
                      {"order", lat.order_of(i)},
                      {"members", lat.subgroup(i).members()},
                      {"normal", lat.is_normal(i)},
                      {"modular", s.modular(i)},
                      {"s_quasinormal", s.s_quasinormal(i)},
                      {"upper_covers", lat.upper_covers(i)}});
    Json j{{"group", s.group().name()}, {"order", s.group().order()}, {"subgroups", std::move(subs)}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "group " << s.group().name() << " (order " << s.group().order() << "), " << lat.size()
            << " subgroups\n";
  for (SubIdx i = 0; i < lat.size(); ++i) {
    std::cout << "  " << std::left << std::setw(10) << lat.describe(i) << " normal=" << std::setw(6)
              << yes_no(lat.is_normal(i)) << " modular=" << std::setw(6) << yes_no(s.modular(i))
              << " s_quasinormal=" << std::setw(6) << yes_no(s.s_quasinormal(i)) << " maximal_in=[";
    const auto& ups = lat.upper_covers(i);
    for (std::size_t k = 0; k < ups.size(); ++k) std::cout << (k ? "," : "") << ups[k];
    std::cout << "]\n";
  }
  return kExitOk;
}

int cmd_census(const Config& cfg) {
  const GroupStudy s(load_source(cfg));
  const auto c = census(s);
  if (cfg.format == "json") {
    std::cout << to_json(c).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "group " << c.group_name << " (order " << s.group().order() << ")\n";
  std::cout << "  n  count  modular  s_quasinormal  neither\n";
  for (const auto& row : c.rows)
    std::cout << "  " << std::right << std::setw(1) << row.n << std::setw(7) << row.count << std::setw(9)
              << row.modular << std::setw(15) << row.s_quasinormal << std::setw(9) << row.neither << "\n";
  std::cout << "min_n_all_modular "
            << (c.min_n_all_modular ? std::to_string(*c.min_n_all_modular) : std::string("none")) << "\n";
  return kExitOk;
}

std::string status_word(const VerdictReport& r) {
  if (r.violates()) return "FAIL";
  if (r.hypothesis == HypothesisStatus::fails) return "N/A";
  if (r.hypothesis == HypothesisStatus::vacuous) return "VACUOUS";
  return "PASS";
}

int cmd_verify(const Config& cfg) {
  theorem_ids(cfg.suite);
  std::vector<Group> groups;
  if (cfg.source.empty())
    groups = select_groups("all", cfg.max_order);
  else
    groups.push_back(load_source(cfg));

  VerifyOptions opt;
  opt.fast = cfg.fast;
  opt.timing = cfg.timing;
  SuiteResult result = run_suite(groups, cfg.suite, cfg.jobs, opt);
  if (cfg.n > 0) {
    std::erase_if(result.reports, [&](const VerdictReport& r) { return r.n != 0 && r.n != cfg.n; });
    result.summary = summarize(result.reports);
  }

  if (cfg.format == "json") {
    Json reports = Json::array();
    for (const auto& r : result.reports) reports.push_back(to_json(r));
    Json j{{"reports", std::move(reports)}, {"summary", to_json(result.summary)}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : result.reports) {
      std::cout << std::left << std::setw(8) << status_word(r) << std::setw(10) << r.group_name << std::setw(18)
                << r.label() << "hypothesis=" << std::setw(8) << to_string(r.hypothesis)
                << " conclusion=" << to_string(r.conclusion);
      if (cfg.timing) std::cout << " ms=" << r.elapsed_ms;
      std::cout << "\n";
      if (r.violates() || r.theorem_id.starts_with("Sharp.")) {
        for (const auto& c : r.clauses) std::cout << "          " << c.name << " = " << yes_no(c.value) << "\n";
        for (const auto& w : r.witnesses) std::cout << "          - " << w << "\n";
      }
    }
    const auto& s = result.summary;
    std::cout << "summary: pass=" << s.pass << " fail=" << s.fail << " vacuous=" << s.vacuous
              << " inapplicable=" << s.inapplicable << "\n";
  }
  return result.sound() ? kExitOk : kExitUnsound;
}

int cmd_catalog(const Config& cfg) {
  const Json listing = catalog_listing(cfg.max_order);
  if (cfg.format == "json") {
    std::cout << listing.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& e : listing) {
    std::cout << std::left << std::setw(10) << e["name"].get<std::string>() << " order=" << std::setw(5)
              << e["order"].get<std::size_t>() << " pi={";
    bool first = true;
    for (const auto& p : e["pi"]) {
      std::cout << (first ? "" : ",") << p.get<std::uint64_t>();
      first = false;
    }
    std::cout << "}";
    for (const auto& [field, v] : e["expected"].items())
      std::cout << " " << field << "=" << yes_no(v["value"].get<bool>());
    std::cout << "\n";
  }
  return kExitOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::unknown_selector:
    case Errc::bad_depth:
    case Errc::bad_ordering:
      return kExitUsage;
    default:
      return kExitLoad;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup lattice and group class analysis"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--max-order", cfg.max_order, "Largest group order to construct")->check(CLI::PositiveNumber);

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
    sub->add_option("--max-order", cfg.max_order, "Largest group order to construct")->check(CLI::PositiveNumber);
  };

  auto* classify_cmd = app.add_subcommand("classify", "Class profile of a group");
  classify_cmd->add_option("source", cfg.source, "catalog:NAME or a group JSON file")->required();
  add_format(classify_cmd, {"text", "json"});

  auto* lattice_cmd = app.add_subcommand("lattice", "Subgroup lattice listing or DOT export");
  lattice_cmd->add_option("source", cfg.source, "catalog:NAME or a group JSON file")->required();
  add_format(lattice_cmd, {"text", "json", "dot"});

  auto* census_cmd = app.add_subcommand("census", "Modularity census of n-maximal subgroups");
  census_cmd->add_option("source", cfg.source, "catalog:NAME or a group JSON file")->required();
  add_format(census_cmd, {"text", "json"});

  auto* verify_cmd = app.add_subcommand("verify", "Check the theorem suite");
  verify_cmd->add_option("source", cfg.source, "Single group (default: the standard suite)");
  verify_cmd->add_option("--suite", cfg.suite, "all, theorems, lemmas, sharpness, or one theorem id");
  verify_cmd->add_option("--n", cfg.n, "Only depth-indexed reports at this n")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", cfg.jobs, "Groups analysed in parallel")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--fast", cfg.fast, "Skip conclusions under failed hypotheses");
  verify_cmd->add_flag("--timing", cfg.timing, "Record per-report wall-clock time");
  add_format(verify_cmd, {"text", "json"});

  auto* catalog_cmd = app.add_subcommand("catalog", "List the standard suite");
  add_format(catalog_cmd, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg);
    if (*lattice_cmd) return cmd_lattice(cfg);
    if (*census_cmd) return cmd_census(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*catalog_cmd) return cmd_catalog(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLoad;
  }
  return kExitUsage;
}
