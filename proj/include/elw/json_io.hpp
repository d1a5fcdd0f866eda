#pragma once

#include <filesystem>

#include "json.hpp"

#include "elw/catalog.hpp"
#include "elw/integer.hpp"

namespace elw::io {

using json = nlohmann::json;

/// Integers within ±(2^53 - 1) are JSON numbers; larger magnitudes are
/// decimal strings.
json to_json(const Integer& n);
json to_json(const CycleCatalog& catalog);
json to_json(const ElwSequence& seq);

// Readers throw Error(Parse) with the offending field named.
Integer integer_from_json(const json& j, std::string_view field);
CycleCatalog catalog_from_json(const json& j);
ElwSequence sequence_from_json(const json& j);
SheafModel sheaf_from_json(const json& j);
CycleClass cycle_from_json(const json& j);
/// "source" and "target" are inline catalogs, or paths resolved against
/// `base_dir`.
MorphismModel morphism_from_json(const json& j, const std::filesystem::path& base_dir);

json load_json_file(const std::filesystem::path& path);

}  // namespace elw::io
