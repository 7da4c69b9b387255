#include "conic/json_io.hpp"

#include <stdexcept>

namespace conic {

json to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.convert_to<long long>());
  return a;
}

IntVec intvec_from_json(const json& j) {
  IntVec v;
  for (const auto& x : j) v.push_back(Int(x.get<long long>()));
  return v;
}

ConeSpec cone_from_json(const json& j) {
  ConeSpec spec;
  if (j.contains("name") && j["name"].is_string()) spec.name = j["name"].get<std::string>();
  if (!j.contains("rays") || !j["rays"].is_array() || j["rays"].empty())
    throw std::invalid_argument("cone json: missing rays");
  for (const auto& row : j["rays"]) spec.rays.push_back(intvec_from_json(row));
  spec.dim = static_cast<int>(spec.rays[0].size());
  return spec;
}

json to_json(const ConeSpec& spec) {
  json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  json rays = json::array();
  for (const IntVec& u : spec.rays) rays.push_back(to_json(u));
  j["rays"] = rays;
  return j;
}

json class_group_fragment(const ClassGroupData& cg) {
  json j;
  j["free_rank"] = cg.free_rank;
  j["torsion"] = to_json(cg.torsion);
  json betas = json::array();
  for (const LatticePoint& b : cg.betas) betas.push_back(to_json(b));
  j["betas"] = betas;
  return j;
}

json zonotope_fragment(const ZonotopeModel& z) {
  json pts = json::array();
  for (const LatticePoint& p : z.lattice_points()) pts.push_back(to_json(p));
  return json{{"lattice_points", pts}};
}

json to_json(const PathSpec& p) {
  return json{{"subset", p.subset}, {"start", to_json(p.start)}, {"end", to_json(p.end)}, {"length", p.length}};
}

json to_json(const ComplexProfile& prof) {
  json degrees = json::object();
  for (const auto& [deg, entries] : prof.degrees) {
    json list = json::array();
    for (const auto& [q, mult] : entries) list.push_back(json{{"point", to_json(q)}, {"mult", mult}});
    degrees[std::to_string(deg)] = list;
  }
  return json{{"point", to_json(prof.point)}, {"degrees", degrees}, {"length", prof.length()}};
}

ComplexProfile profile_from_json(const json& j) {
  ComplexProfile prof;
  prof.point = intvec_from_json(j.at("point"));
  for (const auto& [key, list] : j.at("degrees").items()) {
    int deg = std::stoi(key);
    for (const auto& e : list) prof.degrees[deg][intvec_from_json(e.at("point"))] = e.at("mult").get<long long>();
  }
  return prof;
}

json to_json(const SearchResult& r) {
  json sets = json::array();
  for (const auto& s : r.incredulous_sets) {
    json one = json::array();
    for (const LatticePoint& p : s) one.push_back(to_json(p));
    sets.push_back(one);
  }
  return json{{"incredulous_sets", sets}, {"subsets_examined", r.subsets_examined}};
}

json to_json(const Classification& c) {
  json j;
  j["verdict"] = c.has_nccr ? "has_nccr" : "no_nccr";
  j["witness"] = c.has_nccr ? to_json(c.witness) : json(nullptr);
  j["reason"] = c.reason;
  return j;
}

}  // namespace conic
