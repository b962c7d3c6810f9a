#include "macposets/io.hpp"

#include <filesystem>
#include <fstream>

namespace macposets {

using nlohmann::json;

json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.labels();
  json covers = json::array();
  for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
  j["covers"] = std::move(covers);
  return j;
}

Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    fail(errc::bad_format, "poset file needs 'elements' and 'covers'");
  std::vector<std::string> labels;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) fail(errc::bad_format, "'elements' must hold strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      fail(errc::bad_format, "each cover must be a [lower, upper] pair of labels");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return Poset::from_covers(std::move(labels), covers);
}

json ring_to_json(const IdealPresentation& ring) {
  json j;
  j["vars"] = ring.vars;
  if (ring.field.kind == Field::Kind::rationals)
    j["field"] = "QQ";
  else
    j["field"] = json{{"Fp", ring.field.p}};
  json ideal = json::array();
  for (const auto& g : ring.generators) ideal.push_back(g.to_string(ring.vars));
  j["ideal"] = std::move(ideal);
  return j;
}

IdealPresentation ring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("ideal"))
    fail(errc::bad_format, "ring file needs 'vars' and 'ideal'");
  std::vector<std::string> vars;
  for (const auto& v : j.at("vars")) {
    if (!v.is_string()) fail(errc::bad_format, "'vars' must hold strings");
    vars.push_back(v.get<std::string>());
  }
  Field field = Field::rationals();
  if (j.contains("field")) {
    const auto& f = j.at("field");
    if (f.is_string() && f.get<std::string>() == "QQ") {
      field = Field::rationals();
    } else if (f.is_object() && f.contains("Fp")) {
      field = Field::prime(f.at("Fp").get<uint32_t>());
    } else {
      fail(errc::bad_format, "'field' must be \"QQ\" or {\"Fp\": prime}");
    }
  }
  std::vector<std::string> ideal;
  for (const auto& g : j.at("ideal")) {
    if (!g.is_string()) fail(errc::bad_format, "'ideal' must hold polynomial strings");
    ideal.push_back(g.get<std::string>());
  }
  return make_presentation(std::move(vars), ideal, field);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail(errc::bad_format, "invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

namespace {

Poset poset_from_ref(const json& j, const std::string& base_dir) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    return poset_from_json(load_json(p.string()));
  }
  return poset_from_json(j);
}

}  // namespace

PosetMap poset_map_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
      !j.contains("images"))
    fail(errc::bad_format, "map file needs 'domain', 'codomain' and 'images'");
  Poset domain = poset_from_ref(j.at("domain"), base_dir);
  Poset codomain = poset_from_ref(j.at("codomain"), base_dir);
  std::vector<std::pair<std::string, std::string>> images;
  for (const auto& pair : j.at("images")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      fail(errc::bad_format, "each image must be a [domainLabel, codomainLabel] pair");
    images.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  return poset_map(std::move(domain), std::move(codomain), images);
}

json class_to_json(const MonomialClass& c, const std::vector<std::string>& vars) {
  json j;
  j["label"] = c.label;
  j["degree"] = c.degree;
  j["representative"] = monomial_to_string(c.representative, vars);
  j["key"] = c.key.to_string(vars);
  return j;
}

Poset load_poset(const std::string& path) { return poset_from_json(load_json(path)); }

IdealPresentation load_ring(const std::string& path) { return ring_from_json(load_json(path)); }

PosetMap load_poset_map(const std::string& path) {
  std::string dir = std::filesystem::path(path).parent_path().string();
  return poset_map_from_json(load_json(path), dir);
}

}  // namespace macposets
