#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trackcube/pocset.hpp"

namespace trackcube {

inline constexpr int kDefaultVertexCap = 100000;

// Dual cube complex of a finite pocset. Vertices are the ultrafilters,
// encoded as one orientation bit per pair (bit s of pair p selects element
// 2p+s). Stored data is the 1-skeleton; higher cubes are implicit in the
// crossing relation. The enumeration order (breadth-first from the seed,
// flipping minimal elements in ascending pair order) is part of the output
// contract.
struct CubeComplex {
  Pocset pocset;
  std::vector<BitVec> vertices;
  std::unordered_map<BitVec, int, BitVecHash> vertex_index;
  struct Edge {
    int u, v, pair;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<std::pair<int, int>>> adj; // vertex -> (neighbour, pair)

  BitMatrix crossing_pairs;        // realized: all four side combinations occur
  std::vector<BitVec> carrier;     // pair -> endpoints of its dual edges
  std::vector<BitVec> side_vertices0; // pair -> vertices oriented to element 2p

  int V() const { return (int)vertices.size(); }
  int n_pairs() const { return pocset.pairs(); }
  int element_at(int v, int pair) const { return 2 * pair + (vertices[v].get(pair) ? 1 : 0); }
  int index_of(const BitVec& bits) const {
    auto it = vertex_index.find(bits);
    return it == vertex_index.end() ? -1 : it->second;
  }
};

bool is_ultrafilter(const Pocset& p, const BitVec& bits);

// Greedy seed: repeatedly orient away from a minimal element. Succeeds on
// every valid pocset; NoSeed guards hand-built inconsistent relations.
BitVec greedy_seed(const Pocset& p);

CubeComplex dual_complex(const Pocset& p, int vertex_cap = kDefaultVertexCap,
                         std::optional<BitVec> seed = std::nullopt);

// Majority vote per pair; the result must be a vertex (MedianMissing is a
// broken dual and fatal).
int median(const CubeComplex& x, int a, int b, int c);

struct Interval {
  int x = -1, y = -1;
  BitVec walls;             // pairs where x and y differ
  std::vector<int> members; // vertices v with median(x,v,y) = v
};
Interval interval(const CubeComplex& x, int a, int b);

bool crossing(const CubeComplex& x, int p, int q);
bool adjacent(const CubeComplex& x, int p, int q); // non-crossing, carriers meet
// no inclusion between v's sides of p and q (origin pocset order)
bool separated_by(const CubeComplex& x, int v, int p, int q);
// p separates vertex v from q: v's side of p strictly below v's side of q
bool less_from(const CubeComplex& x, int v, int p, int q);
// p separates hyperplane g from q: one side of p contains g, the other q
bool less_from_hyperplane(const CubeComplex& x, int g, int p, int q);
bool facing_triple(const CubeComplex& x, int p, int q, int r);

int dimension(const CubeComplex& x, long long budget = kDefaultCliqueBudget);

// Pocset read back from the constructed complex (vertex-set sides under
// inclusion); equals the origin pocset on full enumerations.
Pocset read_off_pocset(const CubeComplex& x);

// Image of each K-vertex in the coarse dual: orient every class towards the
// side whose vertex set contains it.
std::vector<int> coarse_vertex_images(const CubeComplex& coarse, const CoarsePocset& cp,
                                      const SimplicialComplex2& k);
// Per face of K, the triple of coarse-dual vertices of its corners.
std::vector<std::array<int, 3>> triangle_images(const CubeComplex& coarse,
                                                const CoarsePocset& cp,
                                                const SimplicialComplex2& k);

std::string export_json(const CubeComplex& x);
std::string export_dot(const CubeComplex& x);

} // namespace trackcube
