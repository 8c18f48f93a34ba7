#pragma once

#include <string>
#include <vector>

#include "trackcube/bits.hpp"
#include "trackcube/clique.hpp"
#include "trackcube/pattern.hpp"

namespace trackcube {

// Finite pocset: elements 2p and 2p+1 are the two sides of pair p, `*` is
// xor with 1, and `lt` is a strict order stored transitively closed.
struct Pocset {
  std::vector<std::string> names; // size 2 * pairs()
  BitMatrix lt;

  int pairs() const { return (int)names.size() / 2; }
  int elements() const { return (int)names.size(); }
  static int star(int e) { return e ^ 1; }
  static int pair_of(int e) { return e >> 1; }
  static int side_of(int e) { return e & 1; }
  bool less(int a, int b) const { return lt.get(a, b); }
  bool leq(int a, int b) const { return a == b || lt.get(a, b); }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
};

struct RawPocset {
  std::vector<std::array<std::string, 2>> pairs;     // [h, h*]
  std::vector<std::array<std::string, 2>> relations; // [a, b] meaning a <= b
};

// Closure plus the three pocset axioms. Relations are mirrored (a<=b implies
// b*<=a*) before closing.
Pocset validate_pocset(const RawPocset& raw);

// Same, from element-index relations (a < b). Used by generators and tests.
Pocset make_pocset(std::vector<std::string> names,
                   const std::vector<std::pair<int, int>>& strict_relations);

// True iff the two pairs admit no inclusion relation between any sides.
// Throws SamePair when p == q.
bool transverse(const Pocset& p, int pair_p, int pair_q);

// Maximum number of pairwise transverse pairs.
int width(const Pocset& p, long long budget = kDefaultCliqueBudget);

// Pocset of the fine halfspaces: pair t = track t, order by region-set
// inclusion.
struct FinePocset {
  Pocset pocset;
  std::vector<std::array<BitVec, 2>> side_regions;
  int n_regions = 0;
};
FinePocset pocset_from_fine(const SimplicialComplex2& k, const Pattern& p,
                            const RegionDecomposition& rd, const FineHalfspaces& fh);

// Pocset of the coarse halfspaces, one pair per parallelism class of
// vertex-essential tracks, ordered by vertex-set inclusion. Side 0 of each
// class contains the smallest K-vertex. phi maps fine elements onto coarse
// elements; inessential tracks fall outside its domain.
struct CoarsePocset {
  Pocset pocset;
  std::vector<std::array<BitVec, 2>> side_vertices; // per class
  std::vector<std::vector<int>> class_tracks;
  std::vector<int> track_class;     // -1 for inessential tracks
  std::vector<int> track_flip;      // track side s -> class side s ^ flip
  std::vector<int> inessential_tracks;

  int classes() const { return pocset.pairs(); }
  // fine element 2t+s -> coarse element, -1 when t is inessential
  int phi(int fine_element) const {
    int t = Pocset::pair_of(fine_element);
    if (track_class[t] < 0) return -1;
    return 2 * track_class[t] + (Pocset::side_of(fine_element) ^ track_flip[t]);
  }
};
CoarsePocset pocset_from_coarse(const SimplicialComplex2& k, const Pattern& p,
                                const RegionDecomposition& rd, const FineHalfspaces& fh,
                                const CoarseHalfspaces& ch);

} // namespace trackcube
