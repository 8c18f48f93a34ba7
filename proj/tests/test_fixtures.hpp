#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "trackcube/drawing.hpp"
#include "trackcube/pattern.hpp"

namespace trackcube::testing {

// single triangle {1,2,3}
inline SimplicialComplex2 k1() {
  RawComplex raw;
  raw.vertices = {1, 2, 3};
  raw.edges = {{1, 2}, {1, 3}, {2, 3}};
  raw.faces = {{1, 2, 3}};
  return validate_complex(raw);
}

// two faces {1,2,3},{2,3,4} glued along 2-3
inline SimplicialComplex2 k2() {
  RawComplex raw;
  raw.vertices = {1, 2, 3, 4};
  raw.edges = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
  raw.faces = {{1, 2, 3}, {2, 3, 4}};
  return validate_complex(raw);
}

// the standard 7-vertex triangulation of the torus
inline SimplicialComplex2 torus7() {
  RawComplex raw;
  raw.vertices = {0, 1, 2, 3, 4, 5, 6};
  for (int i = 0; i < 7; ++i) {
    auto f1 = std::array<long long, 3>{i, (i + 1) % 7, (i + 3) % 7};
    auto f2 = std::array<long long, 3>{i, (i + 2) % 7, (i + 3) % 7};
    raw.faces.push_back(f1);
    raw.faces.push_back(f2);
  }
  std::set<std::array<long long, 2>> edges;
  for (auto& f : raw.faces)
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        edges.insert({std::min(f[a], f[b]), std::max(f[a], f[b])});
  raw.edges.assign(edges.begin(), edges.end());
  return validate_complex(raw);
}

inline Arc arc(const SimplicialComplex2& k, std::array<long long, 3> face,
               std::pair<std::array<long long, 2>, int> a,
               std::pair<std::array<long long, 2>, int> b) {
  Arc out;
  std::array<int, 3> t{k.vertex_index(face[0]), k.vertex_index(face[1]),
                       k.vertex_index(face[2])};
  std::sort(t.begin(), t.end());
  int f = -1;
  for (int i = 0; i < k.T(); ++i)
    if (k.faces[i] == t) f = i;
  out.face = f;
  out.a = {k.edge_id(k.vertex_index(a.first[0]), k.vertex_index(a.first[1])), a.second};
  out.b = {k.edge_id(k.vertex_index(b.first[0]), k.vertex_index(b.first[1])), b.second};
  if (out.b < out.a) std::swap(out.a, out.b);
  return out;
}

// crossing counts by edge name
inline std::vector<int> counts(const SimplicialComplex2& k,
                               std::map<std::string, int> by_name) {
  std::vector<int> c(k.E(), 0);
  for (auto& [name, v] : by_name) {
    bool found = false;
    for (int e = 0; e < k.E(); ++e)
      if (k.edge_name(e) == name) {
        c[e] = v;
        found = true;
      }
    if (!found) throw std::runtime_error("no edge " + name);
  }
  return c;
}

} // namespace trackcube::testing
