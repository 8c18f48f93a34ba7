#include "trackcube/complex.hpp"

#include <algorithm>
#include <set>

#include "trackcube/gf2.hpp"

namespace trackcube {

int SimplicialComplex2::vertex_index(long long id) const {
  auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), id);
  if (it == vertex_ids.end() || *it != id) return -1;
  return int(it - vertex_ids.begin());
}

int SimplicialComplex2::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  std::array<int, 2> key{u, v};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return -1;
  return int(it - edges.begin());
}

std::string SimplicialComplex2::edge_name(int e) const {
  return std::to_string(vertex_ids[edges[e][0]]) + "-" + std::to_string(vertex_ids[edges[e][1]]);
}

std::string SimplicialComplex2::face_name(int f) const {
  return std::to_string(vertex_ids[faces[f][0]]) + "-" + std::to_string(vertex_ids[faces[f][1]]) +
         "-" + std::to_string(vertex_ids[faces[f][2]]);
}

int SimplicialComplex2::components() const {
  std::vector<int> parent(V());
  for (int i = 0; i < V(); ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto& e : edges) {
    int a = find(e[0]), b = find(e[1]);
    if (a != b) parent[a] = b;
  }
  int c = 0;
  for (int i = 0; i < V(); ++i)
    if (find(i) == i) ++c;
  return c;
}

SimplicialComplex2 validate_complex(const RawComplex& raw, bool require_pure) {
  SimplicialComplex2 k;

  {
    std::set<long long> seen;
    for (long long v : raw.vertices) {
      if (v < 0) fail(errc::input_error, "negative vertex id " + std::to_string(v));
      if (!seen.insert(v).second)
        fail(errc::duplicate_simplex, "vertex " + std::to_string(v) + " listed twice");
    }
    k.vertex_ids.assign(seen.begin(), seen.end());
  }

  auto need_vertex = [&](long long id, const std::string& where) {
    int idx = k.vertex_index(id);
    if (idx < 0) fail(errc::missing_simplex, where + " references absent vertex " + std::to_string(id));
    return idx;
  };

  {
    std::set<std::array<int, 2>> es;
    for (auto& e : raw.edges) {
      int u = need_vertex(e[0], "edge"), v = need_vertex(e[1], "edge");
      if (u == v)
        fail(errc::input_error, "edge with equal endpoints " + std::to_string(e[0]));
      if (u > v) std::swap(u, v);
      if (!es.insert({u, v}).second)
        fail(errc::duplicate_simplex,
             "edge " + std::to_string(e[0]) + "-" + std::to_string(e[1]) + " listed twice");
    }
    k.edges.assign(es.begin(), es.end());
  }

  {
    std::set<std::array<int, 3>> fs;
    for (auto& f : raw.faces) {
      std::array<int, 3> t{need_vertex(f[0], "face"), need_vertex(f[1], "face"),
                           need_vertex(f[2], "face")};
      std::sort(t.begin(), t.end());
      if (t[0] == t[1] || t[1] == t[2])
        fail(errc::input_error, "face with repeated vertices");
      if (!fs.insert(t).second) fail(errc::duplicate_simplex, "face listed twice");
    }
    k.faces.assign(fs.begin(), fs.end());
  }

  k.edge_faces.assign(k.E(), {});
  k.face_edge_ids.resize(k.T());
  for (int f = 0; f < k.T(); ++f) {
    auto& t = k.faces[f];
    std::array<std::array<int, 2>, 3> fe{{{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]}}};
    for (int j = 0; j < 3; ++j) {
      int e = k.edge_id(fe[j][0], fe[j][1]);
      if (e < 0)
        fail(errc::missing_simplex, "face " + k.face_name(f) + " references absent edge " +
                                        std::to_string(k.vertex_ids[fe[j][0]]) + "-" +
                                        std::to_string(k.vertex_ids[fe[j][1]]));
      k.face_edge_ids[f][j] = e;
      k.edge_faces[e].push_back(f);
    }
  }

  for (int e = 0; e < k.E(); ++e)
    if (k.edge_faces[e].empty() && require_pure)
      fail(errc::dangling_edge, "edge " + k.edge_name(e) + " lies in no face");
  k.pure = true;
  for (int e = 0; e < k.E(); ++e)
    if (k.edge_faces[e].empty()) k.pure = false;

  for (int e = 0; e < k.E(); ++e)
    if (k.edge_faces[e].size() == 1) k.boundary_edges.push_back(e);

  k.h1 = h1_z2_dimension(k);
  return k;
}

int h1_z2_dimension(const SimplicialComplex2& k) {
  // dim ker d1 - rank d0, coboundaries over GF(2)
  std::vector<BitVec> d0; // rows = edges, cols = vertices
  d0.reserve(k.E());
  for (auto& e : k.edges) {
    BitVec row(k.V());
    row.set(e[0]);
    row.set(e[1]);
    d0.push_back(row);
  }
  std::vector<BitVec> d1; // rows = faces, cols = edges
  d1.reserve(k.T());
  for (int f = 0; f < k.T(); ++f) {
    BitVec row(k.E());
    for (int e : k.face_edge_ids[f]) row.set(e);
    d1.push_back(row);
  }
  int rank_d0 = gf2_rank(std::move(d0));
  int rank_d1 = gf2_rank(std::move(d1));
  return (k.E() - rank_d1) - rank_d0;
}

long long euler_characteristic(const SimplicialComplex2& k) { return k.euler(); }

} // namespace trackcube
