#pragma once

#include "trackcube/pattern.hpp"

namespace trackcube {

// Self-returning arcs (both endpoints on one edge) of a generalized drawing,
// in arc order.
std::vector<std::pair<int, int>> find_self_returning(const SimplicialComplex2& k,
                                                     const Drawing& d); // (face, arc)

// Innermost self-returning arc: no other self-returning arc's endpoint pair
// lies strictly between its endpoint indices on the shared edge. Ties resolve
// by (edge, lower index, arc index). Returns -1 when none exist.
int innermost(const SimplicialComplex2& k, const Drawing& d);

struct PushLog {
  int edge = -1;
  int from_face = -1, to_face = -1;
  int lo = 0, hi = 0;          // removed crossing indices
  bool closed_loop = false;    // partner arcs coincided; component deleted
  bool created_return = false; // splice produced a new self-returning arc
};

// Push an innermost self-returning arc through its edge into the opposite
// face. The two crossing points disappear (total crossing count drops by 2)
// and the partner arcs are spliced.
Drawing push_move(const SimplicialComplex2& k, const Drawing& d, int arc_index,
                  PushLog* log = nullptr);

struct NormalizeResult {
  Pattern pattern;     // empty drawing allowed, flagged below
  int moves = 0;
  bool emptied = false;
  std::vector<PushLog> log;
  std::vector<int> clique_numbers; // crossing-graph clique number before each
                                   // move and after the last (optional)
};

// Iterate innermost pushes until the drawing is strict, then split into
// tracks. `record_cliques` additionally tracks the crossing-graph clique
// number across moves.
NormalizeResult normalize(const SimplicialComplex2& k, const Drawing& d,
                          bool record_cliques = false);

} // namespace trackcube
