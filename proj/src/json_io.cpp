#include "modlat/json_io.hpp"

#include <fstream>

#include "modlat/catalog.hpp"

namespace modlat {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::load_error, what); }

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const VerdictReport& r) {
  Json j;
  j["group"] = r.group_name;
  j["theorem"] = r.label();
  j["hypothesis"] = to_string(r.hypothesis);
  j["conclusion"] = to_string(r.conclusion);
  j["witnesses"] = r.witnesses;
  j["ms"] = r.elapsed_ms;
  Json clauses = Json::object();
  for (const auto& c : r.clauses) clauses[c.name] = c.value;
  j["clauses"] = std::move(clauses);
  return j;
}

VerdictReport report_from_json(const Json& j) {
  VerdictReport r;
  r.group_name = field<std::string>(j, "group");
  std::tie(r.theorem_id, r.n) = parse_label(field<std::string>(j, "theorem"));
  r.hypothesis = parse_hypothesis_status(field<std::string>(j, "hypothesis"));
  r.conclusion = parse_conclusion_status(field<std::string>(j, "conclusion"));
  r.witnesses = field<std::vector<std::string>>(j, "witnesses");
  r.elapsed_ms = field<std::int64_t>(j, "ms");
  if (j.contains("clauses")) {
    if (!j["clauses"].is_object()) malformed("clauses must be an object");
    for (const auto& [name, value] : j["clauses"].items()) {
      if (!value.is_boolean()) malformed("clause '" + name + "' must be boolean");
      r.clauses.push_back({name, value.get<bool>()});
    }
  }
  return r;
}

Json to_json(const ClassProfile& p) {
  Json j;
  for (const auto& name : profile_field_names()) j[name] = profile_field(p, name);
  j["dispersive_orderings"] = p.dispersive_orderings;
  return j;
}

ClassProfile profile_from_json(const Json& j) {
  ClassProfile p;
  p.abelian = field<bool>(j, "abelian");
  p.nilpotent = field<bool>(j, "nilpotent");
  p.soluble = field<bool>(j, "soluble");
  p.supersoluble = field<bool>(j, "supersoluble");
  p.strongly_supersoluble = field<bool>(j, "strongly_supersoluble");
  p.nearly_nilpotent = field<bool>(j, "nearly_nilpotent");
  p.p_group_schmidt = field<bool>(j, "p_group_schmidt");
  p.schmidt_group = field<bool>(j, "schmidt_group");
  p.u_critical = field<bool>(j, "u_critical");
  p.ore_dispersive = field<bool>(j, "ore_dispersive");
  p.dispersive_orderings = field<std::vector<PrimeOrdering>>(j, "dispersive_orderings");
  return p;
}

Json to_json(const ModularityCensus& c) {
  Json j;
  j["group"] = c.group_name;
  Json rows = Json::array();
  for (const auto& row : c.rows)
    rows.push_back({{"n", row.n},
                    {"count", row.count},
                    {"modular", row.modular},
                    {"s_quasinormal", row.s_quasinormal},
                    {"neither", row.neither}});
  j["rows"] = std::move(rows);
  j["min_n_all_modular"] = c.min_n_all_modular ? Json(*c.min_n_all_modular) : Json(nullptr);
  return j;
}

Json to_json(const SuiteSummary& s) {
  return {{"pass", s.pass}, {"fail", s.fail}, {"vacuous", s.vacuous}, {"inapplicable", s.inapplicable}};
}

Json catalog_listing(std::size_t max_order_cap) {
  Json out = Json::array();
  for (const auto& e : standard_suite()) {
    const Group g = construct(e.constructor, max_order_cap);
    Json expected = Json::object();
    for (const auto& f : e.expected)
      expected[f.field] = {{"value", f.value}, {"provenance", f.provenance == Provenance::cited ? "cited" : "derived"}};
    out.push_back({{"name", e.name},
                   {"constructor", e.constructor},
                   {"order", g.order()},
                   {"pi", prime_spectrum(g).primes()},
                   {"expected", std::move(expected)}});
  }
  return out;
}

Group group_from_json(const Json& j, std::size_t max_order_cap) {
  const auto name = j.contains("name") ? field<std::string>(j, "name") : std::string("file");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "permutation") {
    const auto degree = field<std::size_t>(j, "degree");
    const auto cycle_lists = field<std::vector<std::vector<std::vector<std::uint32_t>>>>(j, "generators");
    std::vector<Permutation> gens;
    for (const auto& cycles : cycle_lists) gens.push_back(permutation_from_cycles(degree, cycles));
    return group_from_permutations(degree, gens, name, max_order_cap);
  }
  if (kind == "cayley") {
    const auto table = field<std::vector<std::vector<std::uint32_t>>>(j, "table");
    return group_from_cayley_table(table, name, max_order_cap);
  }
  malformed("unknown group kind '" + kind + "'");
}

Group load_group_file(const std::filesystem::path& path, std::size_t max_order_cap) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    malformed(path.string() + ": " + e.what());
  }
  return group_from_json(j, max_order_cap);
}

}  // namespace modlat
