#pragma once

#include "trackcube/analysis.hpp"
#include "trackcube/dual.hpp"

namespace trackcube {

// Map from K-vertices (dense indices) into vertices of a target dual complex.
struct VertexMap {
  std::vector<int> image;
};

// Hyperplanes separating the images of the edge's endpoints.
BitVec edge_walls(const CubeComplex& x, const SimplicialComplex2& k, int edge,
                  const VertexMap& f);

// Order in which the walls of `edge` are crossed along one combinatorial
// geodesic from the image of the canonical start: forced for nested pairs,
// ascending pair id for transverse ones.
std::vector<int> edge_crossing_order(const CubeComplex& x, const SimplicialComplex2& k,
                                     int edge, const VertexMap& f);

struct Pullback {
  Pattern pattern;
  std::vector<int> track_hyperplane;        // track -> X pair
  std::vector<std::vector<int>> edge_order; // per edge: X pairs in crossing order
  bool empty = false;                       // no wall meets any edge
};

// One arc per face and per hyperplane flipping exactly two of its edges;
// grouped into tracks per connected component. Requires H^1(K;Z/2)=0.
Pullback pullback_pattern(const SimplicialComplex2& k, const CubeComplex& x,
                          const VertexMap& f);

struct Resolution {
  Pullback pull;
  RegionDecomposition rd;
  FineHalfspaces fh;
  CoarseHalfspaces ch;
  FinePocset fine_pocset;
  CoarsePocset coarse_pocset;
  CubeComplex fine_dual;
  CubeComplex coarse_dual;
  // halfspace image per track and side (X element), from the crossed edges
  std::vector<std::array<int, 2>> track_side_image;
  std::vector<int> common_side;  // X pair outside the image -> constant element
  std::vector<int> F;            // fine-dual vertex -> X vertex
  std::vector<int> Phi;          // coarse-dual vertex -> fine-dual vertex
  std::vector<std::string> failures;
};

Resolution resolve(const SimplicialComplex2& k, const CubeComplex& x, const VertexMap& f);

struct ResolutionCheck {
  struct Item {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

ResolutionCheck check_resolution(const SimplicialComplex2& k, const CubeComplex& x,
                                 const VertexMap& f, const Resolution& r,
                                 long long budget = kDefaultCliqueBudget);

} // namespace trackcube
