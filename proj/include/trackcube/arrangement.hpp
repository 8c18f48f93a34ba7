#pragma once

#include <array>
#include <vector>

#include "trackcube/drawing.hpp"
#include "trackcube/frac.hpp"

namespace trackcube {

// Exact arrangement of a face's arcs, drawn as straight chords in the model
// right triangle (0,0),(1,0),(0,1). Crossing point i of an edge with count c
// sits at parameter i/(c+1) along the edge's canonical direction. Only the
// incidence structure leaves this module; the combinatorics is affine
// invariant, so the model choice is immaterial.
struct FaceArrangement {
  int face = -1;
  int n_pieces = 0;    // bounded cells, in discovery order
  int n_crossings = 0; // interior chord-chord crossings

  // piece adjacent to boundary sub-segment m of face-edge position j
  // (m = 0 .. c(e); m counts along the canonical edge direction)
  std::array<std::vector<int>, 3> boundary_piece;
  // piece whose closure contains corner 0/1/2 (face vertex positions)
  std::array<int, 3> corner_piece{-1, -1, -1};

  struct ChordAdjacency {
    int arc;    // global arc index
    int p1, p2; // pieces on the two sides of one chord sub-segment
  };
  std::vector<ChordAdjacency> chord_adjacencies;
};

// Model coordinates of a crossing point within a face (exposed for tests).
Pt model_point(const SimplicialComplex2& k, const Drawing& d, int face, const ArcEnd& end);

// Strict drawings only; throws DegenerateArrangement when three chords meet
// in a point (impossible for 2-patterns, possible for d >= 3 input).
FaceArrangement arrange_face(const SimplicialComplex2& k, const Drawing& d, int face);

} // namespace trackcube
