#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trackcube/complex.hpp"

namespace trackcube {

// A crossing point is (edge, index) with 1-based index measured along the
// edge's canonical direction (smaller vertex id -> larger).
struct ArcEnd {
  int edge = -1;
  int index = 0;
  bool operator==(const ArcEnd& o) const { return edge == o.edge && index == o.index; }
  bool operator<(const ArcEnd& o) const {
    return edge != o.edge ? edge < o.edge : index < o.index;
  }
};

struct Arc {
  int face = -1;
  ArcEnd a, b; // a <= b
  bool self_returning() const { return a.edge == b.edge; }
};

struct RawArcEnd {
  std::string edge; // "u-v", u < v, original vertex ids
  int index = 0;
};
struct RawArc {
  std::array<long long, 3> face{};
  RawArcEnd a, b;
};
struct RawDrawing {
  std::map<std::string, int> crossing_counts;
  std::vector<RawArc> arcs;
  std::optional<std::vector<std::vector<int>>> tracks; // arc index lists
};

struct DrawingOptions {
  bool allow_empty = false;
  bool generalized = false; // permit self-returning arcs (same-edge endpoints)
  // Self-returns to boundary edges are inessential and rejected on input;
  // push moves may create them transiently, so rewriting code sets this.
  bool allow_boundary_returns = false;
};

// Arc systems on the faces of a complex. Arc order is the input order; it is
// preserved so that track files can reference arcs by position.
struct Drawing {
  std::vector<int> crossing_counts;    // per edge id
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> face_arcs; // face id -> arc indices
  bool generalized = false;

  long long total_crossings() const;
  bool empty() const { return arcs.empty(); }
};

Drawing validate_drawing(const SimplicialComplex2& k, const RawDrawing& raw,
                         DrawingOptions opts = {});

// Revalidate an already-built arc system (used after rewriting moves).
Drawing validate_drawing(const SimplicialComplex2& k, std::vector<int> crossing_counts,
                         std::vector<Arc> arcs, DrawingOptions opts = {});

// Crossing points of a face boundary in traversal order (v0->v1->v2->v0;
// an edge traversed against its canonical direction lists indices downward).
std::vector<ArcEnd> boundary_cycle(const SimplicialComplex2& k, const Drawing& d, int face);

// True iff the two arcs' endpoints interleave around the face boundary;
// equivalent to straight chords crossing in the model triangle.
bool arcs_cross(const SimplicialComplex2& k, const Drawing& d, int face, const Arc& a1,
                const Arc& a2);

// Connected components of the arc graph (arcs joined when they meet the same
// crossing point from different faces). Deterministic: components ordered by
// smallest arc index. Errors NonEmptyRequired on the empty drawing.
std::vector<std::vector<int>> split_into_pretracks(const SimplicialComplex2& k,
                                                   const Drawing& d);

// A pre-track is a track when no two of its arcs cross. Requires
// H^1(K; Z/2) = 0 so that the component-wise check is meaningful.
bool is_track(const SimplicialComplex2& k, const Drawing& d,
              const std::vector<int>& pretrack_arcs);

} // namespace trackcube
