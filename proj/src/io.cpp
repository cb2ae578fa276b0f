#include "rpkh/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rpkh {

using nlohmann::json;

namespace {

Endpoint endpoint_from_json(const json& j) {
  if (!j.is_array() || j.size() < 2) throw std::runtime_error("malformed endpoint");
  std::string kind = j[0].get<std::string>();
  if (kind == "x") {
    if (j.size() != 3) throw std::runtime_error("malformed crossing endpoint");
    return slot_ep(j[1].get<int>(), j[2].get<int>());
  }
  if (kind == "b") return boundary_ep(j[1].get<int>());
  throw std::runtime_error("unknown endpoint kind: " + kind);
}

json endpoint_to_json(const Endpoint& e) {
  if (e.is_slot()) return json::array({"x", e.crossing, e.slot});
  return json::array({"b", e.boundary});
}

}  // namespace

DiagramRP2 diagram_from_json(const std::string& text) {
  json j = json::parse(text);
  DiagramRP2 d;
  d.name = j.value("name", "");
  d.boundary_points = j.value("boundary_points", 0);
  d.free_loops = j.value("free_loops", 0);
  for (const auto& c : j.value("crossings", json::array())) {
    Crossing cr;
    cr.raw = c.value("over_pair", "");
    cr.over_pair = over_pair_from_string(cr.raw);
    d.crossings.push_back(cr);
  }
  for (const auto& a : j.value("arcs", json::array())) {
    if (!a.is_array() || a.size() != 2) throw std::runtime_error("malformed arc");
    d.arcs.push_back({{endpoint_from_json(a[0]), endpoint_from_json(a[1])}});
  }
  if (j.contains("orientation_seeds"))
    for (const auto& s : j["orientation_seeds"])
      d.orientation_seeds.push_back({s[0].get<int>(), s[1].get<int>()});
  if (j.contains("basepoint_face")) d.basepoint_face = j["basepoint_face"].get<int>();
  if (j.contains("marked_arc")) d.marked_arc = j["marked_arc"].get<int>();
  if (j.contains("crosscap_face_dart"))
    d.crosscap_face_dart = {
        {j["crosscap_face_dart"][0].get<int>(), j["crosscap_face_dart"][1].get<int>()}};
  return d;
}

std::string diagram_to_json(const DiagramRP2& d) {
  json j;
  j["name"] = d.name;
  j["boundary_points"] = d.boundary_points;
  j["crossings"] = json::array();
  for (const auto& c : d.crossings)
    j["crossings"].push_back({{"over_pair", over_pair_to_string(c.over_pair)}});
  j["arcs"] = json::array();
  for (const auto& a : d.arcs)
    j["arcs"].push_back(json::array({endpoint_to_json(a.end[0]), endpoint_to_json(a.end[1])}));
  if (d.free_loops) j["free_loops"] = d.free_loops;
  if (!d.orientation_seeds.empty()) {
    j["orientation_seeds"] = json::array();
    for (auto& [a, dir] : d.orientation_seeds)
      j["orientation_seeds"].push_back(json::array({a, dir}));
  }
  if (d.basepoint_face) j["basepoint_face"] = *d.basepoint_face;
  if (d.marked_arc) j["marked_arc"] = *d.marked_arc;
  if (d.crosscap_face_dart)
    j["crosscap_face_dart"] =
        json::array({d.crosscap_face_dart->first, d.crosscap_face_dart->second});
  return j.dump(2) + "\n";
}

Dyad dyad_from_json(const std::string& text) {
  json j = json::parse(text);
  Dyad a;
  a.name = j.value("name", "");
  auto read_space = [&](const char* key) {
    GradedSpaceF2 s;
    for (const auto& g : j.value(key, json::array()))
      s.gens.push_back({g[0].get<std::string>(), g[1].get<int>()});
    return s;
  };
  a.V0 = read_space("V0");
  a.V1 = read_space("V1");
  auto read_map = [&](const char* key, const GradedSpaceF2& dom, const GradedSpaceF2& cod) {
    LinearMapF2 m = LinearMapF2::zero(dom.dim(), cod.dim());
    if (!j.contains(key)) return m;
    for (const auto& [src, targets] : j[key].items()) {
      int si = dom.index_of(src);
      if (si < 0) throw std::runtime_error(std::string(key) + ": unknown generator " + src);
      for (const auto& t : targets) {
        int ti = cod.index_of(t.get<std::string>());
        if (ti < 0)
          throw std::runtime_error(std::string(key) + ": unknown target " + t.get<std::string>());
        m.cols[si].push_back(ti);
      }
      std::sort(m.cols[si].begin(), m.cols[si].end());
    }
    return m;
  };
  a.f = read_map("f", a.V0, a.V1);
  a.g = read_map("g", a.V1, a.V0);
  return a;
}

std::string dyad_to_json(const Dyad& a) {
  json j;
  j["name"] = a.name;
  auto space = [](const GradedSpaceF2& s) {
    json arr = json::array();
    for (auto& [name, deg] : s.gens) arr.push_back(json::array({name, deg}));
    return arr;
  };
  j["V0"] = space(a.V0);
  j["V1"] = space(a.V1);
  auto map_json = [](const LinearMapF2& m, const GradedSpaceF2& dom, const GradedSpaceF2& cod) {
    json obj = json::object();
    for (int c = 0; c < m.dom_dim; c++) {
      if (m.cols[c].empty()) continue;
      json targets = json::array();
      for (int t : m.cols[c]) targets.push_back(cod.name(t));
      obj[dom.name(c)] = targets;
    }
    return obj;
  };
  j["f"] = map_json(a.f, a.V0, a.V1);
  j["g"] = map_json(a.g, a.V1, a.V0);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

DiagramRP2 load_diagram(const std::string& path) { return diagram_from_json(read_file(path)); }
Dyad load_dyad(const std::string& path) { return dyad_from_json(read_file(path)); }

Dyad resolve_dyad(const std::string& name_or_path) {
  if (const Dyad* b = find_builtin_dyad(name_or_path)) return *b;
  return load_dyad(name_or_path);
}

std::string dims_to_json(const DimTable& dims) {
  json terms = json::array();
  for (auto& [iq, d] : dims) terms.push_back(json::array({iq.first, iq.second, d}));
  json j;
  j["terms"] = terms;
  return j.dump();
}

}  // namespace rpkh
