#include "schema.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace logmonoid::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InvalidInput(path + ": " + msg);
}

const json& field(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

std::size_t parse_size(const json& j, const std::string& path) {
  Integer x = parse_integer(j, path);
  if (x < 0 || !x.fits_ulong_p()) fail(path, "expected a nonnegative size");
  return x.get_ui();
}

}  // namespace

json strip_annotations(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key().empty() || it.key()[0] != '_') out[it.key()] = strip_annotations(it.value());
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& x : j) out.push_back(strip_annotations(x));
    return out;
  }
  return j;
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return strip_annotations(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InvalidInput(what + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.string());
}

Integer parse_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (!j.is_string()) fail(path, "expected an integer (decimal string)");
  static const std::regex decimal("[+-]?[0-9]+");
  const std::string& s = j.get_ref<const std::string&>();
  if (!std::regex_match(s, decimal)) fail(path, "\"" + s + "\" is not a decimal integer");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

Vector parse_vector(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_integer(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

Vector parse_vector(const json& j, const std::string& path, std::size_t length) {
  Vector v = parse_vector(j, path);
  if (v.size() != length)
    fail(path, "expected " + std::to_string(length) + " entries, got " + std::to_string(v.size()));
  return v;
}

IntMatrix parse_matrix(const json& j, const std::string& path, std::size_t cols) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(parse_vector(j[i], path + "[" + std::to_string(i) + "]", cols));
  return rows.empty() ? IntMatrix(0, cols) : IntMatrix::from_rows(rows, cols);
}

Monoid parse_monoid(const json& j, const std::string& path) {
  const json& amb = field(j, path, "ambient");
  const std::size_t rank = parse_size(field(amb, path + ".ambient", "rank"), path + ".ambient.rank");
  IntMatrix rel(0, rank);
  if (amb.contains("relations")) rel = parse_matrix(amb["relations"], path + ".ambient.relations", rank);
  const json& gens = field(j, path, "generators");
  if (!gens.is_array()) fail(path + ".generators", "expected an array of vectors");
  std::vector<Vector> g;
  for (std::size_t i = 0; i < gens.size(); ++i)
    g.push_back(parse_vector(gens[i], path + ".generators[" + std::to_string(i) + "]", rank));
  return Monoid(FgAbelianGroup(rank, rel), g);
}

MonoidHom parse_hom(const json& j, const std::string& path, const std::filesystem::path& base_dir) {
  auto side = [&](const std::string& key) {
    const json& s = field(j, path, key);
    if (s.is_string()) {
      std::filesystem::path file = base_dir / s.get<std::string>();
      return parse_monoid(load_json_file(file), file.string());
    }
    return parse_monoid(s, path + "." + key);
  };
  Monoid source = side("source");
  Monoid target = side("target");
  const json& m = field(j, path, "ambient_map");
  IntMatrix map = parse_matrix(m, path + ".ambient_map", source.rank());
  if (map.rows() != target.rank())
    fail(path + ".ambient_map", "expected " + std::to_string(target.rank()) + " rows, got " + std::to_string(map.rows()));
  MonoidHom h(source, target, map);
  ValidationReport r = check(h);
  if (!r.ok)
    fail(path, r.error + (r.offending_generator ? " at generator " + r.offending_generator->to_string() : std::string()));
  return h;
}

json to_json(const Integer& x) { return x.get_str(); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json to_json(const GroupElement& x) { return to_json(x.coords); }

json to_json(const GroupStructure& s) {
  return {{"free_rank", std::to_string(s.free_rank)},
          {"invariant_factors", to_json(s.invariant_factors)},
          {"text", s.to_string()}};
}

json to_json(const Monoid& p) {
  json gens = json::array();
  for (const auto& g : p.generators()) gens.push_back(to_json(g));
  return {{"ambient", {{"rank", std::to_string(p.rank())}, {"relations", to_json(p.ambient().relation_basis())}}},
          {"generators", gens}};
}

json to_json(const MonoidHom& h) {
  return {{"source", to_json(h.source)}, {"target", to_json(h.target)}, {"ambient_map", to_json(h.ambient_map)}};
}

json to_json(const Certificate& c) {
  return {{"identity", c.identity}, {"element", c.element}, {"expected", c.expected}, {"actual", c.actual}};
}

json to_json(const CochainComplexReport& r) {
  json out = {{"check", r.check}, {"passed", r.passed}, {"checked", std::to_string(r.checked)}, {"notes", r.notes}};
  if (r.h0_dimension) out["h0_dimension"] = std::to_string(*r.h0_dimension);
  if (r.h1_dimension) out["h1_dimension"] = std::to_string(*r.h1_dimension);
  if (r.certificate) out["certificate"] = to_json(*r.certificate);
  return out;
}

json to_json(const ProfiniteDescriptor& d) {
  return {{"free_rank", std::to_string(d.free_rank)},
          {"finite_factors", to_json(d.finite_factors)},
          {"excluded_prime", to_json(d.excluded_prime)},
          {"text", d.to_string()}};
}

json to_json(const TorsionGroup& t) {
  return {{"finite", to_json(t.finite)}, {"qz_rank", std::to_string(t.qz_rank)}, {"text", t.to_string()}};
}

json to_json(const BundleClass& c) {
  json comps = json::array();
  for (const auto& e : c.components) {
    json fr = json::array();
    for (const auto& q : e.fractions) fr.push_back(q.get_str());
    comps.push_back({{"element", to_json(e.base)}, {"denominator", to_json(e.denominator)}, {"fractions", fr}});
  }
  return {{"rank", std::to_string(c.rank())}, {"components", comps}, {"classical", is_classical(c)},
          {"text", c.to_string()}};
}

}  // namespace logmonoid::cli
