#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trackcube/dual.hpp"

namespace trackcube {

// An obstructing pair for non-crossing hyperplanes (h, k) within a wall set:
// hp crosses k but not h, kp crosses h but not k, and hp crosses kp.
struct PopWitness {
  int hp, kp;
};

// Exhaustive search over ordered pairs from `walls`, deterministic order;
// errors: CrossingInput when (h,k) cross, NotInInterval when h or k is
// outside `walls`.
std::optional<PopWitness> find_obstructing_pair(const CubeComplex& x, const BitVec& walls,
                                                int h, int k);

// Adjacent, non-crossing, and free of obstructing pairs within the walls.
bool adj_p(const CubeComplex& x, const BitVec& walls, int h, int k);

// All unordered adj-P pairs with both members in `walls`.
std::vector<std::pair<int, int>> adjp_pairs(const CubeComplex& x, const BitVec& walls);

// Number of adj-P pairs in `walls` separated by vertex m. `strict_between`
// additionally requires m to lie in neither carrier (the alternative reading
// of separation for a pair); both counts go into reports, the 2d^2 bound is
// asserted for the default reading on genuine intervals only.
int count_separated_adjp_pairs(const CubeComplex& x, const BitVec& walls, int m,
                               bool strict_between = false);

// Number of pairs meeting both intervals [x,y1] and [x,y2] that are adj-P in
// the first but not in the second.
int count_transfer_adjp_pairs(const CubeComplex& x, int xv, int y1, int y2);

// C(d): threshold for count_separated_adjp_pairs on intervals
constexpr int adjp_separation_bound(int d) { return 2 * d * d; }

// Theorem bound on parallelism classes of a 2-pattern
long long parallelism_class_bound(const SimplicialComplex2& k);

// Category scan for one coarse hyperplane:
//  1 - adjacent to the canonical-start image of some K-edge whose interval it
//      meets,
//  2 - member of an adj-P pair in a triangle-edge interval separated by the
//      median of the triangle's images,
//  3 - member of an adj-P pair in one triangle-edge interval that meets but
//      is not adj-P in a second interval anchored at the shared corner.
struct CategoryScan {
  bool cat1 = false, cat2 = false, cat3 = false;
  bool none() const { return !cat1 && !cat2 && !cat3; }
};
CategoryScan hyperplane_categories(const CubeComplex& coarse, const CoarsePocset& cp,
                                   const SimplicialComplex2& k,
                                   const std::vector<std::array<int, 3>>& images, int pair);

struct BoundCheckReport {
  int classes = 0;
  long long bound = 0;
  long long slack = 0;
  int dim = 0;
  int lemma1_max = 0;
  int lemma1_strict_max = 0;
  bool lemma1_interpretations_differ = false;
  int lemma2_max = 0;
  int parallel_crossing_pairs = 0;      // crossing member tracks inside one class
  std::vector<int> trichotomy_gaps;     // coarse pairs with empty category set
  std::vector<std::string> violations;  // first-class entries, never aborts
  std::vector<int> inessential_tracks;
  bool pass() const { return violations.empty() && trichotomy_gaps.empty(); }
};

// Full check over the deduplicated coarse dual of a 2-pattern: separation
// counts over all intervals, transfer counts anchored at triangle images,
// category scan per hyperplane, class count against 96T + 2E.
BoundCheckReport check_parallelism_bound(const SimplicialComplex2& k, const Pattern& p,
                                         long long budget = kDefaultCliqueBudget);

} // namespace trackcube
