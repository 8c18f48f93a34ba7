#pragma once

#include <optional>

#include "trackcube/arrangement.hpp"
#include "trackcube/bits.hpp"
#include "trackcube/clique.hpp"
#include "trackcube/drawing.hpp"

namespace trackcube {

// A pattern is a drawing partitioned into tracks. Tracks always coincide with
// the connected components of the arc graph; a user-supplied grouping is
// validated against that partition.
struct Pattern {
  Drawing drawing;
  std::vector<std::vector<int>> tracks; // arc indices, component order
  std::vector<int> arc_track;

  int n_tracks() const { return (int)tracks.size(); }
};

// check_tracks: additionally require every component to be a track (no two of
// its arcs cross); needs H^1(K;Z/2)=0.
Pattern make_pattern(const SimplicialComplex2& k, Drawing d,
                     const std::optional<std::vector<std::vector<int>>>& tracks = std::nullopt,
                     bool check_tracks = true);

// Track crossing graph and its exact clique number.
BitMatrix track_crossing_graph(const SimplicialComplex2& k, const Pattern& p);
int max_pairwise_crossing(const SimplicialComplex2& k, const Pattern& p,
                          long long budget = kDefaultCliqueBudget);
bool is_d_pattern(const SimplicialComplex2& k, const Pattern& p, int d,
                  long long budget = kDefaultCliqueBudget);

struct Region {
  std::vector<std::pair<int, int>> pieces; // (face, piece)
  BitVec vertices;                         // dense K-vertex indices
};

struct RegionAdjacency {
  int r1, r2; // r1 <= r2; equal only when a track fails to be two-sided
  int track;
  bool operator<(const RegionAdjacency& o) const {
    return std::tie(r1, r2, track) < std::tie(o.r1, o.r2, o.track);
  }
  bool operator==(const RegionAdjacency& o) const {
    return r1 == o.r1 && r2 == o.r2 && track == o.track;
  }
};

// Complement components of the pattern. Pieces of the face arrangements are
// glued along interior-edge sub-segments and around vertices (a vertex lies
// in the complement and joins its corner pieces even when its link is
// disconnected).
struct RegionDecomposition {
  std::vector<FaceArrangement> face_arr;     // per face id
  std::vector<int> piece_base;               // face -> first global piece id
  std::vector<int> piece_region;             // global piece id -> region
  std::vector<Region> regions;
  std::vector<RegionAdjacency> adjacencies;  // sorted, deduplicated
  std::vector<int> vertex_region;            // dense K-vertex -> region

  int n_regions() const { return (int)regions.size(); }
  int region_of_piece(int face, int piece) const {
    return piece_region[piece_base[face] + piece];
  }
};

RegionDecomposition regions(const SimplicialComplex2& k, const Pattern& p);

// The two complement components per track, as region sets. Side 0 always
// contains region 0. Requires H^1(K;Z/2)=0; throws NotTwoSided when the
// complement of a single track is not two complement components.
struct FineHalfspaces {
  std::vector<std::array<BitVec, 2>> side_regions; // per track
};
FineHalfspaces fine_halfspaces(const SimplicialComplex2& k, const Pattern& p,
                               const RegionDecomposition& rd);

struct CoarseHalfspaces {
  std::vector<std::array<BitVec, 2>> side_vertices; // per track, same side labels
  std::vector<bool> essential;                      // both sides meet K^0
  std::vector<int> inessential_tracks;              // report
};
CoarseHalfspaces coarse_halfspaces(const SimplicialComplex2& k, const Pattern& p,
                                   const RegionDecomposition& rd, const FineHalfspaces& fh);

// Vertex-essential tracks grouped by their unordered coarse halfspace pair.
std::vector<std::vector<int>> parallelism_classes(const CoarseHalfspaces& ch);

// Orientation choice per track: bit t = side of track t containing the region.
BitVec principal_ultrafilter(const FineHalfspaces& fh, int region);

} // namespace trackcube
