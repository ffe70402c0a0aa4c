#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "modlat/classify.hpp"
#include "modlat/group.hpp"
#include "modlat/suite.hpp"
#include "modlat/verify.hpp"

namespace modlat {

using Json = nlohmann::ordered_json;

Json to_json(const VerdictReport& r);
/// Inverse of to_json; throws Errc::load_error on malformed input.
VerdictReport report_from_json(const Json& j);

Json to_json(const ClassProfile& p);
ClassProfile profile_from_json(const Json& j);

Json to_json(const ModularityCensus& c);
Json to_json(const SuiteSummary& s);

/// name, order, π(G) and expected fields of every standard-suite entry.
Json catalog_listing(std::size_t max_order_cap = kDefaultMaxOrder);

/// {"name", "kind": "permutation"|"cayley", "degree", "generators", "table"}.
/// Malformed documents raise Errc::load_error; invalid groups raise the
/// construction errors.
Group group_from_json(const Json& j, std::size_t max_order_cap = kDefaultMaxOrder);
Group load_group_file(const std::filesystem::path& path, std::size_t max_order_cap = kDefaultMaxOrder);

}  // namespace modlat
