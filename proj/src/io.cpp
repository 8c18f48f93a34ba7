#include "trackcube/io.hpp"

#include <fstream>

namespace trackcube {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::input_error, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::input_error, "bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

void save_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(errc::input_error, "cannot write '" + path + "'");
  out << content;
}

namespace {

void warn_unknown(const json& j, std::initializer_list<const char*> known,
                  const char* what, std::vector<std::string>* warnings) {
  if (!warnings || !j.is_object()) return;
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool found = false;
    for (const char* k : known)
      if (it.key() == k) found = true;
    if (!found)
      warnings->push_back(std::string("ignoring unknown field '") + it.key() + "' in " + what);
  }
}

long long as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(errc::input_error, std::string(what) + " must be an integer");
  return j.get<long long>();
}

} // namespace

RawComplex complex_from_json(const json& j, std::vector<std::string>* warnings) {
  if (!j.is_object()) fail(errc::input_error, "complex file must hold a JSON object");
  warn_unknown(j, {"vertices", "edges", "faces"}, "complex", warnings);
  RawComplex raw;
  if (!j.contains("vertices") || !j.contains("edges") || !j.contains("faces"))
    fail(errc::input_error, "complex needs vertices, edges and faces");
  for (auto& v : j.at("vertices")) raw.vertices.push_back(as_int(v, "vertex"));
  for (auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail(errc::input_error, "edge must be a pair");
    raw.edges.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")});
  }
  for (auto& f : j.at("faces")) {
    if (!f.is_array() || f.size() != 3) fail(errc::input_error, "face must be a triple");
    raw.faces.push_back(
        {as_int(f[0], "face corner"), as_int(f[1], "face corner"), as_int(f[2], "face corner")});
  }
  return raw;
}

RawDrawing drawing_from_json(const json& j, std::vector<std::string>* warnings) {
  if (!j.is_object()) fail(errc::input_error, "drawing file must hold a JSON object");
  warn_unknown(j, {"crossing_counts", "arcs", "tracks"}, "drawing", warnings);
  RawDrawing raw;
  if (j.contains("crossing_counts"))
    for (auto it = j.at("crossing_counts").begin(); it != j.at("crossing_counts").end(); ++it)
      raw.crossing_counts[it.key()] = (int)as_int(it.value(), "crossing count");
  if (j.contains("arcs"))
    for (auto& a : j.at("arcs")) {
      if (!a.is_object() || !a.contains("face") || !a.contains("endpoints"))
        fail(errc::input_error, "arc needs face and endpoints");
      RawArc ra;
      auto& f = a.at("face");
      if (!f.is_array() || f.size() != 3) fail(errc::input_error, "arc face must be a triple");
      ra.face = {as_int(f[0], "face corner"), as_int(f[1], "face corner"),
                 as_int(f[2], "face corner")};
      auto& ends = a.at("endpoints");
      if (!ends.is_array() || ends.size() != 2)
        fail(errc::input_error, "arc needs two endpoints");
      auto parse_end = [](const json& e) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string())
          fail(errc::input_error, "endpoint must be [edge, index]");
        return RawArcEnd{e[0].get<std::string>(), (int)as_int(e[1], "endpoint index")};
      };
      ra.a = parse_end(ends[0]);
      ra.b = parse_end(ends[1]);
      raw.arcs.push_back(ra);
    }
  if (j.contains("tracks")) {
    std::vector<std::vector<int>> tracks;
    for (auto& t : j.at("tracks")) {
      std::vector<int> arcs;
      for (auto& a : t) arcs.push_back((int)as_int(a, "track arc index"));
      tracks.push_back(std::move(arcs));
    }
    raw.tracks = std::move(tracks);
  }
  return raw;
}

RawPocset pocset_from_json(const json& j, std::vector<std::string>* warnings) {
  if (!j.is_object()) fail(errc::input_error, "pocset file must hold a JSON object");
  warn_unknown(j, {"pairs", "relations"}, "pocset", warnings);
  RawPocset raw;
  if (!j.contains("pairs")) fail(errc::input_error, "pocset needs pairs");
  auto name_of = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  for (auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) fail(errc::input_error, "pair must have two sides");
    raw.pairs.push_back({name_of(p[0]), name_of(p[1])});
  }
  if (j.contains("relations"))
    for (auto& r : j.at("relations")) {
      if (!r.is_array() || r.size() != 2) fail(errc::input_error, "relation must be a pair");
      raw.relations.push_back({name_of(r[0]), name_of(r[1])});
    }
  return raw;
}

VertexMap vertex_map_from_json(const json& j, const SimplicialComplex2& k,
                               const CubeComplex& x) {
  if (!j.is_object()) fail(errc::input_error, "vertex map must hold a JSON object");
  VertexMap f;
  f.image.assign(k.V(), -1);
  for (auto it = j.begin(); it != j.end(); ++it) {
    long long id;
    try {
      id = std::stoll(it.key());
    } catch (...) {
      fail(errc::input_error, "vertex map key '" + it.key() + "' is not a vertex id");
    }
    int v = k.vertex_index(id);
    if (v < 0) fail(errc::input_error, "vertex map key " + it.key() + " not in complex");
    long long target = as_int(it.value(), "vertex map value");
    if (target < 0 || target >= x.V())
      fail(errc::input_error, "vertex map target " + std::to_string(target) + " out of range");
    f.image[v] = (int)target;
  }
  for (int v = 0; v < k.V(); ++v)
    if (f.image[v] < 0)
      fail(errc::input_error,
           "vertex map misses vertex " + std::to_string(k.vertex_ids[v]));
  return f;
}

json complex_to_json(const SimplicialComplex2& k) {
  json j;
  j["vertices"] = k.vertex_ids;
  auto& edges = j["edges"] = json::array();
  for (auto& e : k.edges)
    edges.push_back({k.vertex_ids[e[0]], k.vertex_ids[e[1]]});
  auto& faces = j["faces"] = json::array();
  for (auto& f : k.faces)
    faces.push_back({k.vertex_ids[f[0]], k.vertex_ids[f[1]], k.vertex_ids[f[2]]});
  return j;
}

json drawing_to_json(const SimplicialComplex2& k, const Drawing& d) {
  json j;
  auto& counts = j["crossing_counts"] = json::object();
  for (int e = 0; e < k.E(); ++e)
    if (d.crossing_counts[e] > 0) counts[k.edge_name(e)] = d.crossing_counts[e];
  auto& arcs = j["arcs"] = json::array();
  for (auto& a : d.arcs) {
    json ja;
    auto& f = k.faces[a.face];
    ja["face"] = {k.vertex_ids[f[0]], k.vertex_ids[f[1]], k.vertex_ids[f[2]]};
    json ends = json::array();
    ends.push_back(json::array({k.edge_name(a.a.edge), a.a.index}));
    ends.push_back(json::array({k.edge_name(a.b.edge), a.b.index}));
    ja["endpoints"] = std::move(ends);
    arcs.push_back(ja);
  }
  return j;
}

json pattern_to_json(const SimplicialComplex2& k, const Pattern& p) {
  json j = drawing_to_json(k, p.drawing);
  j["tracks"] = p.tracks;
  return j;
}

json pocset_to_json(const Pocset& p) {
  json j;
  auto& pairs = j["pairs"] = json::array();
  for (int q = 0; q < p.pairs(); ++q)
    pairs.push_back({p.names[2 * q], p.names[2 * q + 1]});
  auto& rels = j["relations"] = json::array();
  // emit a transitively closed relation; closure on reload is the identity
  for (int a = 0; a < p.elements(); ++a)
    for (int b = 0; b < p.elements(); ++b)
      if (p.lt.get(a, b)) rels.push_back({p.names[a], p.names[b]});
  return j;
}

} // namespace trackcube
