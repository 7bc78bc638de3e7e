#include "ibn/serialize.hpp"

#include <fstream>

#include "ibn/errors.hpp"

namespace ibn {

namespace {

nlohmann::json type_to_json(const BasisType& t) {
  return nlohmann::json{{"N", t.n_min()}, {"K", t.k_period()}};
}

BasisType type_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("K") ||
      !j["N"].is_number_unsigned() || !j["K"].is_number_unsigned()) {
    throw Error(errc::bad_file, "basis type needs unsigned fields N and K");
  }
  try {
    return BasisType(j["N"].get<std::uint64_t>(), j["K"].get<std::uint64_t>());
  } catch (const Error& e) {
    throw Error(errc::bad_file, e.what());
  }
}

nlohmann::json upper_to_json(const Knowledge& k) {
  nlohmann::json upper;
  if (k.upper_n) {
    upper["N"] = *k.upper_n;
  } else {
    upper["N"] = "Infinity";
  }
  if (k.upper_k) {
    upper["K"] = *k.upper_k;
  } else {
    upper["K"] = "AnyK";
  }
  return upper;
}

std::optional<std::uint64_t> upper_component_from_json(const nlohmann::json& j,
                                                       const char* sentinel) {
  if (j.is_string()) {
    if (j.get<std::string>() == sentinel) return std::nullopt;
    throw Error(errc::bad_file, std::string("upper bound component must be an integer or \"") +
                                    sentinel + "\"");
  }
  if (!j.is_number_unsigned()) {
    throw Error(errc::bad_file, "upper bound component must be an unsigned integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

nlohmann::json knowledge_to_json(const Knowledge& k) {
  nlohmann::json j{{"status", to_string(k.status)}};
  if (k.status == IbnStatus::known_ibn) return j;
  if (auto exact = normalize_exact(k)) {
    j["exact"] = type_to_json(*exact);
    return j;
  }
  j["lower"] = type_to_json(k.lower);
  j["upper"] = upper_to_json(k);
  return j;
}

Knowledge knowledge_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("status") || !j["status"].is_string()) {
    throw Error(errc::bad_file, "knowledge needs a string status");
  }
  const std::string status = j["status"].get<std::string>();
  if (status == "IBN") return Knowledge::known_ibn();
  if (status != "NonIBN" && status != "Unknown") {
    throw Error(errc::bad_file, "knowledge status must be IBN, NonIBN or Unknown");
  }
  if (j.contains("exact")) {
    if (status != "NonIBN") {
      throw Error(errc::bad_file, "an exact type requires status NonIBN");
    }
    return Knowledge::exact(type_from_json(j["exact"]));
  }
  BasisType lower(1, 1);
  if (j.contains("lower")) lower = type_from_json(j["lower"]);
  std::optional<std::uint64_t> upper_n, upper_k;
  if (j.contains("upper")) {
    const auto& upper = j["upper"];
    if (!upper.is_object()) throw Error(errc::bad_file, "upper bound must be an object");
    if (upper.contains("N")) upper_n = upper_component_from_json(upper["N"], "Infinity");
    if (upper.contains("K")) upper_k = upper_component_from_json(upper["K"], "AnyK");
  }
  try {
    if (status == "NonIBN") return Knowledge::known_non_ibn(lower, upper_n, upper_k);
    Knowledge k = Knowledge::unconstrained(lower);
    k.upper_n = upper_n;
    k.upper_k = upper_k;
    if (!k.bounds_well_formed()) throw Error(errc::bad_file, "inconsistent type bounds");
    return k;
  } catch (const Error& e) {
    throw Error(errc::bad_file, e.what());
  }
}

namespace {

nlohmann::json unit_order_to_json(const UnitOrder& o) {
  switch (o.kind()) {
    case UnitOrder::Kind::finite: return o.value();
    case UnitOrder::Kind::infinite: return "Infinite";
    case UnitOrder::Kind::unknown: return "Unknown";
  }
  return "Unknown";
}

UnitOrder unit_order_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "Infinite") return UnitOrder::infinite();
    if (s == "Unknown") return UnitOrder::not_recorded();
    throw Error(errc::bad_file, "unit order must be an integer, \"Infinite\" or \"Unknown\"");
  }
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() < 1) {
    throw Error(errc::bad_file, "finite unit order must be a positive integer");
  }
  return UnitOrder::finite(j.get<std::uint64_t>());
}

Tri tri_from_json(const nlohmann::json& j) {
  if (j.is_boolean()) return j.get<bool>() ? Tri::yes : Tri::no;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "yes") return Tri::yes;
    if (s == "no") return Tri::no;
    if (s == "unknown") return Tri::unknown;
  }
  throw Error(errc::bad_file, "flag must be yes, no or unknown");
}

}  // namespace

nlohmann::json entry_to_json(const CatalogEntry& e) {
  nlohmann::json j{{"id", e.id},
                   {"display_name", e.display_name},
                   {"k0_unit_order", unit_order_to_json(e.k0_unit_order)},
                   {"ibn", e.ibn},
                   {"ibn1", to_string(e.ibn1)},
                   {"ibn2_stably_finite", to_string(e.ibn2_stably_finite)},
                   {"knowledge", knowledge_to_json(e.knowledge)},
                   {"provenance_note", e.provenance_note}};
  if (e.presentation_id) j["presentation"] = *e.presentation_id;
  return j;
}

CatalogEntry entry_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("id") || !j["id"].is_string()) {
    throw Error(errc::bad_file, "catalog entry needs a string id");
  }
  CatalogEntry e;
  e.id = j["id"].get<std::string>();
  e.display_name = j.value("display_name", e.id);
  if (j.contains("k0_unit_order")) e.k0_unit_order = unit_order_from_json(j["k0_unit_order"]);
  if (j.contains("ibn")) {
    if (!j["ibn"].is_boolean()) throw Error(errc::bad_file, "ibn must be a boolean");
    e.ibn = j["ibn"].get<bool>();
  }
  if (j.contains("ibn1")) e.ibn1 = tri_from_json(j["ibn1"]);
  if (j.contains("ibn2_stably_finite")) e.ibn2_stably_finite = tri_from_json(j["ibn2_stably_finite"]);
  if (j.contains("knowledge")) e.knowledge = knowledge_from_json(j["knowledge"]);
  if (j.contains("presentation")) {
    if (!j["presentation"].is_string()) {
      throw Error(errc::bad_file, "presentation must be a string id");
    }
    e.presentation_id = j["presentation"].get<std::string>();
  }
  e.provenance_note = j.value("provenance_note", std::string("user:"));
  return e;
}

nlohmann::json violations_to_json(const std::vector<Violation>& violations) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : violations) {
    arr.push_back({{"entry", v.entry_id}, {"rule", v.rule}, {"message", v.message}});
  }
  return nlohmann::json{{"violations", std::move(arr)}};
}

nlohmann::json partition_to_json(const RankPartition& partition) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : partition.classes()) classes.push_back(cls);
  return nlohmann::json{{"bound", partition.bound()}, {"classes", std::move(classes)}};
}

void load_catalog_file(Catalog& catalog, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::bad_file, "cannot open '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::bad_file, "invalid JSON in '" + path.string() + "': " + e.what());
  }
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw Error(errc::bad_file, "catalog file needs an entries array");
  }
  for (const auto& ej : j["entries"]) {
    CatalogEntry e = entry_from_json(ej);
    auto violations = validate_entry(e);
    if (!violations.empty()) {
      throw Error(errc::bad_file,
                  "entry '" + e.id + "' fails validation: " + violations.front().rule + ": " +
                      violations.front().message,
                  violations.front().rule);
    }
    try {
      catalog.add_entry(std::move(e));
    } catch (const Error& err) {
      throw Error(errc::bad_file, err.what());
    }
  }
}

}  // namespace ibn
