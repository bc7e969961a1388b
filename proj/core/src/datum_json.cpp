#include "twklv/datum.hpp"

#include "twklv/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace twklv {

using Json = nlohmann::ordered_json;

namespace {

void require_fields(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional) {
  if (!j.is_object()) throw DatumFormatError(where + " must be an object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) throw DatumFormatError(where + " is missing field '" + k + "'");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& item : j.items())
    if (!known.count(item.key())) throw DatumFormatError(where + " has unknown field '" + item.key() + "'");
}

std::string get_string(const Json& j, const char* key, const std::string& where) {
  const auto& v = j.at(key);
  if (!v.is_string()) throw DatumFormatError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

std::vector<std::string> get_strings(const Json& j, const char* key, const std::string& where) {
  const auto& v = j.at(key);
  if (!v.is_array()) throw DatumFormatError(where + "." + key + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw DatumFormatError(where + "." + key + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

int get_int(const Json& j, const char* key, const std::string& where) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw DatumFormatError(where + "." + key + " must be an integer");
  return v.get<int>();
}

}  // namespace

ParamDatum datum_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DatumFormatError(std::string("malformed JSON: ") + e.what());
  }
  require_fields(j, "datum", {"name", "generators", "parameters", "statuses"}, {"levi_subsets"});

  ParamDatum d;
  d.name = get_string(j, "name", "datum");
  if (!j["generators"].is_array()) throw DatumFormatError("generators must be an array");
  for (const auto& g : j["generators"]) {
    require_fields(g, "generator", {"id", "m"}, {});
    d.generators.push_back({get_string(g, "id", "generator"), get_int(g, "m", "generator")});
  }
  if (!j["parameters"].is_array()) throw DatumFormatError("parameters must be an array");
  for (const auto& p : j["parameters"]) {
    require_fields(p, "parameter", {"id", "length"}, {"orbit"});
    Parameter par{get_string(p, "id", "parameter"), get_int(p, "length", "parameter"), std::nullopt};
    if (p.contains("orbit")) par.orbit = get_string(p, "orbit", "parameter");
    d.parameters.push_back(std::move(par));
  }
  std::set<std::string> ids;
  for (const auto& p : d.parameters)
    if (!ids.insert(p.id).second) throw DatumFormatError("duplicate parameter id '" + p.id + "'");
  ids.clear();
  for (const auto& g : d.generators)
    if (!ids.insert(g.id).second) throw DatumFormatError("duplicate generator id '" + g.id + "'");

  d.reset_statuses();
  if (!j["statuses"].is_array()) throw DatumFormatError("statuses must be an array");
  for (const auto& s : j["statuses"]) {
    require_fields(s, "status", {"gen", "param", "kind"}, {"cross", "cayley", "role"});
    const std::string gid = get_string(s, "gen", "status");
    const std::string pid = get_string(s, "param", "status");
    auto g = d.gen_index(gid);
    auto p = d.param_index(pid);
    if (!g) throw DatumFormatError("status names unknown generator '" + gid + "'");
    if (!p) throw DatumFormatError("status names unknown parameter '" + pid + "'");
    if (d.statuses[*g][*p]) throw DatumFormatError("duplicate status for " + gid + " at " + pid);
    GeneratorStatus st;
    const std::string kind = get_string(s, "kind", "status");
    auto k = parse_kind(kind);
    if (!k) throw DatumFormatError("unknown kind '" + kind + "'");
    st.kind = *k;
    if (s.contains("cross")) st.cross = get_string(s, "cross", "status");
    if (s.contains("cayley")) st.cayley = get_strings(s, "cayley", "status");
    if (s.contains("role")) {
      const std::string role = get_string(s, "role", "status");
      auto r = parse_role(role);
      if (!r) throw DatumFormatError("unknown role '" + role + "'");
      st.role = *r;
    }
    d.statuses[*g][*p] = std::move(st);
  }
  if (j.contains("levi_subsets")) {
    if (!j["levi_subsets"].is_array()) throw DatumFormatError("levi_subsets must be an array");
    for (const auto& l : j["levi_subsets"]) {
      require_fields(l, "levi subset", {"gens", "params"}, {});
      d.levi_subsets.push_back({get_strings(l, "gens", "levi subset"), get_strings(l, "params", "levi subset")});
    }
  }
  return d;
}

std::string datum_to_json(const ParamDatum& d) {
  Json j;
  j["name"] = d.name;
  j["generators"] = Json::array();
  for (const auto& g : d.generators) j["generators"].push_back({{"id", g.id}, {"m", g.m}});
  j["parameters"] = Json::array();
  for (const auto& p : d.parameters) {
    Json pj{{"id", p.id}, {"length", p.length}};
    if (p.orbit) pj["orbit"] = *p.orbit;
    j["parameters"].push_back(pj);
  }
  j["statuses"] = Json::array();
  for (std::size_t g = 0; g < d.generators.size(); ++g) {
    for (std::size_t p = 0; p < d.parameters.size(); ++p) {
      if (g >= d.statuses.size() || p >= d.statuses[g].size() || !d.statuses[g][p]) continue;
      const auto& st = *d.statuses[g][p];
      Json sj{{"gen", d.generators[g].id}, {"param", d.parameters[p].id}, {"kind", kind_info(st.kind).name}};
      if (st.cross) sj["cross"] = *st.cross;
      if (!st.cayley.empty()) sj["cayley"] = st.cayley;
      if (st.role != Role::None) sj["role"] = role_name(st.role);
      j["statuses"].push_back(sj);
    }
  }
  if (!d.levi_subsets.empty()) {
    j["levi_subsets"] = Json::array();
    for (const auto& l : d.levi_subsets) j["levi_subsets"].push_back({{"gens", l.gens}, {"params", l.params}});
  }
  return j.dump(2) + "\n";
}

ParamDatum load_datum(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatumFormatError("cannot open datum file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return datum_from_json(ss.str());
}

void save_datum(const ParamDatum& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DatumFormatError("cannot write datum file '" + path + "'");
  out << datum_to_json(d);
}

}  // namespace twklv
