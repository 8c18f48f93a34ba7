#include "trackcube/analysis.hpp"

#include <algorithm>

namespace trackcube {

std::optional<PopWitness> find_obstructing_pair(const CubeComplex& x, const BitVec& walls,
                                                int h, int k) {
  if (h == k) fail(errc::same_pair, "pair needs distinct hyperplanes");
  if (!walls.get(h) || !walls.get(k))
    fail(errc::not_in_interval, "hyperplane outside the interval walls");
  if (x.crossing_pairs.get(h, k))
    fail(errc::crossing_input, "obstructing pairs are defined for non-crossing input");
  std::optional<PopWitness> found;
  walls.for_each([&](int hp) {
    if (found || hp == h || hp == k) return;
    if (!x.crossing_pairs.get(hp, k) || x.crossing_pairs.get(hp, h)) return;
    walls.for_each([&](int kp) {
      if (found || kp == h || kp == k || kp == hp) return;
      if (!x.crossing_pairs.get(kp, h) || x.crossing_pairs.get(kp, k)) return;
      if (x.crossing_pairs.get(hp, kp)) found = PopWitness{hp, kp};
    });
  });
  return found;
}

bool adj_p(const CubeComplex& x, const BitVec& walls, int h, int k) {
  if (x.crossing_pairs.get(h, k)) return false;
  if (!adjacent(x, h, k)) return false;
  return !find_obstructing_pair(x, walls, h, k).has_value();
}

std::vector<std::pair<int, int>> adjp_pairs(const CubeComplex& x, const BitVec& walls) {
  std::vector<std::pair<int, int>> out;
  walls.for_each([&](int h) {
    walls.for_each([&](int k) {
      if (k <= h) return;
      if (!x.crossing_pairs.get(h, k) && adj_p(x, walls, h, k)) out.push_back({h, k});
    });
  });
  return out;
}

int count_separated_adjp_pairs(const CubeComplex& x, const BitVec& walls, int m,
                               bool strict_between) {
  int count = 0;
  for (auto& [h, k] : adjp_pairs(x, walls)) {
    if (!separated_by(x, m, h, k)) continue;
    if (strict_between && (x.carrier[h].get(m) || x.carrier[k].get(m))) continue;
    ++count;
  }
  return count;
}

int count_transfer_adjp_pairs(const CubeComplex& x, int xv, int y1, int y2) {
  Interval i1 = interval(x, xv, y1);
  Interval i2 = interval(x, xv, y2);
  BitVec both = i1.walls & i2.walls;
  int count = 0;
  both.for_each([&](int h) {
    both.for_each([&](int k) {
      if (k <= h || x.crossing_pairs.get(h, k)) return;
      if (adj_p(x, i1.walls, h, k) && !adj_p(x, i2.walls, h, k)) ++count;
    });
  });
  return count;
}

long long parallelism_class_bound(const SimplicialComplex2& k) {
  return 96LL * k.T() + 2LL * k.E();
}

namespace {

std::vector<CategoryScan> all_hyperplane_categories(
    const CubeComplex& coarse, const CoarsePocset& cp, const SimplicialComplex2& k,
    const std::vector<std::array<int, 3>>& images) {
  std::vector<CategoryScan> cats(coarse.n_pairs());
  auto img = coarse_vertex_images(coarse, cp, k);

  // 1: adjacent to the canonical-start image of an edge whose walls hold it
  for (int e = 0; e < k.E(); ++e) {
    int u = img[k.edges[e][0]], v = img[k.edges[e][1]];
    if (u == v) continue;
    BitVec walls = coarse.vertices[u] ^ coarse.vertices[v];
    walls.for_each([&](int pr) {
      if (coarse.carrier[pr].get(u)) cats[pr].cat1 = true;
    });
  }

  for (int f = 0; f < k.T(); ++f) {
    auto& tri = images[f];
    if (tri[0] == tri[1] && tri[1] == tri[2]) continue;
    int m = median(coarse, tri[0], tri[1], tri[2]);
    // corner pair (a,b) with third corner c, per face edge
    const int sel[3][3] = {{0, 1, 2}, {1, 2, 0}, {0, 2, 1}};
    for (auto& s : sel) {
      int xa = tri[s[0]], ya = tri[s[1]], za = tri[s[2]];
      if (xa == ya) continue;
      BitVec walls = coarse.vertices[xa] ^ coarse.vertices[ya];
      for (auto& [h, kk] : adjp_pairs(coarse, walls)) {
        // 2: separated by the triangle midpoint (median of the images)
        if (separated_by(coarse, m, h, kk)) cats[h].cat2 = cats[kk].cat2 = true;
        // 3: meets a second interval anchored at either shared corner
        // without staying adj-P there
        for (int anchor : {xa, ya}) {
          if (za == anchor) continue;
          BitVec walls2 = coarse.vertices[anchor] ^ coarse.vertices[za];
          if (walls2.get(h) && walls2.get(kk) && !adj_p(coarse, walls2, h, kk))
            cats[h].cat3 = cats[kk].cat3 = true;
        }
      }
    }
  }
  return cats;
}

} // namespace

CategoryScan hyperplane_categories(const CubeComplex& coarse, const CoarsePocset& cp,
                                   const SimplicialComplex2& k,
                                   const std::vector<std::array<int, 3>>& images, int pair) {
  return all_hyperplane_categories(coarse, cp, k, images)[pair];
}

BoundCheckReport check_parallelism_bound(const SimplicialComplex2& k, const Pattern& p,
                                         long long budget) {
  BoundCheckReport rep;
  if (k.h1 != 0) fail(errc::precondition_h1, "bound check needs H^1(K;Z/2)=0");
  if (!is_d_pattern(k, p, 2, budget)) fail(errc::not_2_pattern, "pattern is not a 2-pattern");

  auto rd = regions(k, p);
  auto fh = fine_halfspaces(k, p, rd);
  auto ch = coarse_halfspaces(k, p, rd, fh);
  auto cp = pocset_from_coarse(k, p, rd, fh, ch);
  rep.inessential_tracks = cp.inessential_tracks;

  auto coarse = dual_complex(cp.pocset, kDefaultVertexCap);
  auto crossing_graph = track_crossing_graph(k, p);
  for (auto& cls : cp.class_tracks)
    for (size_t i = 0; i < cls.size(); ++i)
      for (size_t j = i + 1; j < cls.size(); ++j)
        if (crossing_graph.get(cls[i], cls[j])) ++rep.parallel_crossing_pairs;
  rep.classes = cp.classes();
  rep.bound = parallelism_class_bound(k);
  rep.slack = rep.bound - rep.classes;
  rep.dim = dimension(coarse, budget);
  if (rep.classes > rep.bound)
    rep.violations.push_back("BoundViolation: " + std::to_string(rep.classes) + " classes > " +
                             std::to_string(rep.bound));

  int c_bound = adjp_separation_bound(rep.dim);

  // separation counts over all intervals (unordered endpoint pairs)
  for (int a = 0; a < coarse.V(); ++a)
    for (int b = a; b < coarse.V(); ++b) {
      Interval iv = interval(coarse, a, b);
      auto pairs = adjp_pairs(coarse, iv.walls);
      if (pairs.empty()) continue;
      for (int m : iv.members) {
        int cnt = 0, cnt_strict = 0;
        for (auto& [h, kk] : pairs) {
          if (!separated_by(coarse, m, h, kk)) continue;
          ++cnt;
          if (!coarse.carrier[h].get(m) && !coarse.carrier[kk].get(m)) ++cnt_strict;
        }
        rep.lemma1_max = std::max(rep.lemma1_max, cnt);
        rep.lemma1_strict_max = std::max(rep.lemma1_strict_max, cnt_strict);
        if (cnt != cnt_strict) rep.lemma1_interpretations_differ = true;
        if (cnt > c_bound)
          rep.violations.push_back("Lemma1Violation: " + std::to_string(cnt) +
                                   " pairs at vertex " + std::to_string(m) + " of interval [" +
                                   std::to_string(a) + "," + std::to_string(b) + "]");
      }
    }

  // transfer counts anchored at triangle images
  auto images = triangle_images(coarse, cp, k);
  for (auto& tri : images) {
    const int idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& sel : idx) {
      int xv = tri[sel[0]], y1 = tri[sel[1]], y2 = tri[sel[2]];
      if (y1 == y2) continue;
      int cnt = count_transfer_adjp_pairs(coarse, xv, y1, y2);
      rep.lemma2_max = std::max(rep.lemma2_max, cnt);
      if (rep.dim <= 2 && cnt > 4)
        rep.violations.push_back("Lemma2Violation: " + std::to_string(cnt) +
                                 " pairs on a triangle interval pair");
    }
  }

  auto cats = all_hyperplane_categories(coarse, cp, k, images);
  for (int pr = 0; pr < coarse.n_pairs(); ++pr)
    if (cats[pr].none()) rep.trichotomy_gaps.push_back(pr);
  return rep;
}

} // namespace trackcube
