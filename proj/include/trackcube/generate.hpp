#pragma once

#include <optional>

#include "trackcube/dual.hpp"
#include "trackcube/normalize.hpp"
#include "trackcube/resolution.hpp"
#include "trackcube/rng.hpp"

namespace trackcube {

// Random triangulated disk with n_faces faces (recursive polygon split) and
// arbitrary gappy vertex ids. H^1 = 0 by construction.
SimplicialComplex2 gen_disk(int n_faces, Rng& rng);

// Bipyramid over a cycle of length rim (>= 3): closed surface, no boundary
// edges, H^1 = 0.
SimplicialComplex2 gen_sphere(int rim, Rng& rng);

// Random pocset on n pairs: candidate relations are kept when the closure
// still satisfies the axioms.
Pocset gen_pocset(int n_pairs, int relation_attempts, Rng& rng);

// Width <= 2 pocset, usable as a square-complex halfspace system. Drawn from
// fine pocsets of random 2-patterns plus small handcrafted families.
Pocset gen_width2_pocset(Rng& rng);

struct GenPatternOptions {
  int max_count = 2;     // crossing-count range per edge
  int max_tracks = 15;
  int attempts = 200;    // rejection budget
  int max_width = 2;     // pairwise-crossing bound
};

// Random strict pattern: per-edge counts with face parity repair, random
// matchings per face, rejection on track validity and width. Throws
// RejectionBudgetExceeded when attempts run out.
Pattern gen_pattern_direct(const SimplicialComplex2& k, const GenPatternOptions& opts,
                           Rng& rng);

// Random generalized drawing on a closed complex; same-edge endpoints are
// allowed and lightly favoured so push moves get exercised.
Drawing gen_generalized_drawing(const SimplicialComplex2& k, int max_count, Rng& rng);

VertexMap gen_vertex_map(const SimplicialComplex2& k, const CubeComplex& x, Rng& rng);

RawComplex to_raw(const SimplicialComplex2& k);

} // namespace trackcube
