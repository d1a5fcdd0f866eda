#include "elw/json_io.hpp"

#include <fstream>
#include <set>

#include "elw/error.hpp"

namespace elw::io {

namespace {

// 2^53 - 1
const Integer kMaxSafe("9007199254740991", 10);

[[noreturn]] void fail(std::string_view field, const std::string& why) {
  throw Error(ErrorKind::Parse, "field '" + std::string(field) + "': " + why);
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object()) fail(key, "enclosing value is not an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(key, "missing");
  return *it;
}

void reject_unknown_keys(const json& obj, std::string_view what,
                         std::initializer_list<std::string_view> allowed) {
  const std::set<std::string_view> keys(allowed);
  for (const auto& [key, value] : obj.items()) {
    if (!keys.contains(key)) fail(key, "unknown key in " + std::string(what));
  }
}

std::string string_field(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_string()) fail(key, "expected a string");
  return v.get<std::string>();
}

std::uint64_t dim_field(const json& obj, const char* key) {
  const Integer v = integer_from_json(require(obj, key), key);
  if (v < 0) fail(key, "must be >= 0");
  if (!v.fits_ulong_p()) fail(key, "too large");
  return v.get_ui();
}

std::vector<std::pair<std::string, Integer>> named_terms(const json& arr, const char* key,
                                                         const char* coefficient) {
  if (!arr.is_array()) fail(key, "expected an array");
  std::vector<std::pair<std::string, Integer>> out;
  for (const auto& item : arr) {
    if (!item.is_object()) fail(key, "entries must be objects");
    reject_unknown_keys(item, key, {"generator", coefficient});
    out.emplace_back(string_field(item, "generator"),
                     integer_from_json(require(item, coefficient), coefficient));
  }
  return out;
}

}  // namespace

json to_json(const Integer& n) {
  if (abs(n) <= kMaxSafe) return json(n.get_si());
  return json(to_string(n));
}

Integer integer_from_json(const json& j, std::string_view field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
    return Integer(std::to_string(j.get<std::int64_t>()), 10);
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const Error& e) {
      fail(field, e.what());
    }
  }
  fail(field, "expected an integer or a decimal string");
}

json to_json(const CycleCatalog& catalog) {
  json flags = json::array();
  for (Flag f : catalog.flags.list()) flags.push_back(std::string(to_string(f)));
  json gens = json::array();
  for (const auto& g : catalog.generators) {
    gens.push_back({{"name", g.name}, {"dim", g.dim}, {"chi", to_json(g.chi)}});
  }
  json j = {{"name", catalog.name},
            {"dimension", catalog.dimension},
            {"flags", flags},
            {"generators", gens}};
  if (catalog.global_chi) j["global_chi"] = to_json(*catalog.global_chi);
  return j;
}

CycleCatalog catalog_from_json(const json& j) {
  if (!j.is_object()) fail("catalog", "expected an object");
  reject_unknown_keys(j, "catalog",
                      {"name", "dimension", "flags", "global_chi", "generators", "expected_sequence"});
  CycleCatalog c;
  c.name = string_field(j, "name");
  c.dimension = dim_field(j, "dimension");
  if (auto it = j.find("flags"); it != j.end()) {
    if (!it->is_array()) fail("flags", "expected an array");
    for (const auto& f : *it) {
      if (!f.is_string()) fail("flags", "entries must be strings");
      c.flags.set(flag_from_string(f.get<std::string>()));
    }
  }
  if (auto it = j.find("global_chi"); it != j.end() && !it->is_null()) {
    c.global_chi = integer_from_json(*it, "global_chi");
  }
  const json& gens = require(j, "generators");
  if (!gens.is_array()) fail("generators", "expected an array");
  for (const auto& g : gens) {
    if (!g.is_object()) fail("generators", "entries must be objects");
    reject_unknown_keys(g, "generator", {"name", "dim", "chi"});
    c.generators.push_back(
        {string_field(g, "name"), dim_field(g, "dim"), integer_from_json(require(g, "chi"), "chi")});
  }
  c.validate();
  return c;
}

json to_json(const ElwSequence& seq) {
  json arr = json::array();
  for (const auto& ideal : seq.ideals()) arr.push_back(to_json(ideal.generator()));
  return arr;
}

ElwSequence sequence_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("sequence", "expected a nonempty array");
  std::vector<ZIdeal> ideals;
  for (const auto& x : j) {
    const Integer g = integer_from_json(x, "sequence");
    if (g < 0) fail("sequence", "generators must be >= 0");
    ideals.emplace_back(g);
  }
  return ElwSequence(std::move(ideals));
}

SheafModel sheaf_from_json(const json& j) {
  if (!j.is_object()) fail("sheaf", "expected an object");
  reject_unknown_keys(j, "sheaf", {"dim", "components", "total_chi"});
  SheafModel s;
  s.dim = dim_field(j, "dim");
  s.components = named_terms(require(j, "components"), "components", "length");
  s.total_chi = integer_from_json(require(j, "total_chi"), "total_chi");
  return s;
}

CycleClass cycle_from_json(const json& j) {
  if (!j.is_object()) fail("cycle", "expected an object");
  reject_unknown_keys(j, "cycle", {"dim", "terms"});
  CycleClass z;
  z.dim = dim_field(j, "dim");
  z.terms = named_terms(require(j, "terms"), "terms", "coefficient");
  return z;
}

MorphismModel morphism_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) fail("morphism", "expected an object");
  reject_unknown_keys(j, "morphism", {"source", "target", "kind", "degree"});
  auto side = [&](const char* key) {
    const json& v = require(j, key);
    if (v.is_string()) return catalog_from_json(load_json_file(base_dir / v.get<std::string>()));
    return catalog_from_json(v);
  };
  MorphismModel m;
  m.source = side("source");
  m.target = side("target");
  m.kind = morphism_kind_from_string(string_field(j, "kind"));
  if (auto it = j.find("degree"); it != j.end()) m.degree = integer_from_json(*it, "degree");
  return m;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

}  // namespace elw::io
