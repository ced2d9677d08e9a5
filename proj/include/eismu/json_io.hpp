#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "eismu/bg_table.hpp"
#include "eismu/cyclotomic.hpp"
#include "eismu/qseries.hpp"

namespace eismu {

using nlohmann::json;

/* Exact encodings.  Integer coordinates are serialized as decimal
 * strings so arbitrary-precision values survive the round trip. */
json cyclo_to_json(const Cyclo& c);
Cyclo cyclo_from_json(const json& j);

json qexp_to_json(const QExpansion& f);
QExpansion qexp_from_json(const json& j);

json nearly_to_json(const NearlyHol& f);
NearlyHol nearly_from_json(const json& j);

json bg_to_json(const BGSymbolTable& t);
BGSymbolTable bg_from_json(const json& j);

// IOFailure on unreadable or unparsable input
void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

/* Content-addressed JSON cache: one file per key under dir.  Corrupt or
 * missing entries read as nullopt so callers recompute. */
void cache_store(const std::string& dir, const std::string& key, const json& j);
std::optional<json> cache_load(const std::string& dir, const std::string& key);

} // namespace eismu
