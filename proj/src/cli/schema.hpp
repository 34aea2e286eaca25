#pragma once

// JSON file format for monoids and homs. Integers are written as decimal
// strings; on input plain JSON integers are accepted too. Object keys that
// start with '_' are annotations and are dropped before parsing.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "logmonoid/cech.hpp"
#include "logmonoid/invariants.hpp"
#include "logmonoid/morphism.hpp"

namespace logmonoid::cli {

using json = nlohmann::json;

json strip_annotations(const json& j);
/// Reads and parses a file; errors carry the file name and byte offset.
json load_json_file(const std::filesystem::path& path);
json parse_json_text(const std::string& text, const std::string& what);

Integer parse_integer(const json& j, const std::string& path);
Vector parse_vector(const json& j, const std::string& path, std::size_t length);
/// Vector whose length is taken from the data.
Vector parse_vector(const json& j, const std::string& path);
IntMatrix parse_matrix(const json& j, const std::string& path, std::size_t cols);
Monoid parse_monoid(const json& j, const std::string& path);
/// source and target may be inline objects or file names relative to base_dir.
MonoidHom parse_hom(const json& j, const std::string& path, const std::filesystem::path& base_dir);

json to_json(const Integer& x);
json to_json(const Vector& v);
json to_json(const IntMatrix& m);
json to_json(const GroupElement& x);
json to_json(const GroupStructure& s);
json to_json(const Monoid& p);
json to_json(const MonoidHom& h);
json to_json(const CochainComplexReport& r);
json to_json(const Certificate& c);
json to_json(const ProfiniteDescriptor& d);
json to_json(const TorsionGroup& t);
json to_json(const BundleClass& c);

}  // namespace logmonoid::cli
