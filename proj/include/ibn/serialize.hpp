#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "ibn/catalog.hpp"
#include "ibn/knowledge.hpp"
#include "ibn/rank_congruence.hpp"

// JSON forms shared by the CLI and the catalog file format. Sentinels are
// spelled out: "Infinity" for an unbounded N, "AnyK" for an unconstrained
// period, "Infinite"/"Unknown" for unit orders.

namespace ibn {

nlohmann::json knowledge_to_json(const Knowledge& k);
Knowledge knowledge_from_json(const nlohmann::json& j);  // throws errc::bad_file

nlohmann::json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const nlohmann::json& j);   // throws errc::bad_file

nlohmann::json violations_to_json(const std::vector<Violation>& violations);
nlohmann::json partition_to_json(const RankPartition& partition);

/// Catalog file: { "entries": [ <entry>, ... ] }. Entries are validated and
/// added to the catalog; any violation or id clash throws errc::bad_file.
void load_catalog_file(Catalog& catalog, const std::filesystem::path& path);

}  // namespace ibn
