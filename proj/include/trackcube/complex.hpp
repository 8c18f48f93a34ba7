#pragma once

#include <array>
#include <string>
#include <vector>

#include "trackcube/error.hpp"

namespace trackcube {

struct RawComplex {
  std::vector<long long> vertices;
  std::vector<std::array<long long, 2>> edges;
  std::vector<std::array<long long, 3>> faces;
};

// Finite 2-dimensional simplicial complex with canonical orientations.
// Immutable after validation. Vertex identifiers are arbitrary non-negative
// integers; dense indices are internal and never appear in outputs.
//
// Canonical conventions: an edge is directed from its smaller vertex id to
// the larger one; a face is traversed in ascending vertex order v0->v1->v2->v0.
struct SimplicialComplex2 {
  std::vector<long long> vertex_ids;        // ascending; dense index = position
  std::vector<std::array<int, 2>> edges;    // dense endpoints, [0]<[1], lex-sorted
  std::vector<std::array<int, 3>> faces;    // dense corners, sorted triple, lex-sorted
  std::vector<std::vector<int>> edge_faces; // edge id -> incident face ids
  std::vector<std::array<int, 3>> face_edge_ids; // per face: edges {v0v1},{v1v2},{v0v2}
  std::vector<int> boundary_edges;          // edges with exactly one face
  bool pure = false;
  int h1 = 0;                               // dim H^1(K; Z/2)

  int V() const { return (int)vertex_ids.size(); }
  int E() const { return (int)edges.size(); }
  int T() const { return (int)faces.size(); }
  long long euler() const { return (long long)V() - E() + T(); }

  int vertex_index(long long id) const;     // -1 if absent
  int edge_id(int u, int v) const;          // dense endpoints, -1 if absent
  bool is_boundary_edge(int e) const { return edge_faces[e].size() == 1; }
  std::string edge_name(int e) const;       // "u-v" with original ids
  std::string face_name(int f) const;
  int components() const;                   // connected components of the 1-skeleton
};

// `require_pure`: every edge must lie in at least one face (needed by all
// pattern operations).
SimplicialComplex2 validate_complex(const RawComplex& raw, bool require_pure = true);

int h1_z2_dimension(const SimplicialComplex2& k);
long long euler_characteristic(const SimplicialComplex2& k);

} // namespace trackcube
