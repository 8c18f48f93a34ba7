#include <doctest.h>

#include "test_fixtures.hpp"
#include "trackcube/generate.hpp"
#include "trackcube/dual.hpp"

using namespace trackcube;
using namespace trackcube::testing;

namespace {

BitVec vertex_set(const SimplicialComplex2& k, std::initializer_list<long long> ids) {
  BitVec b(k.V());
  for (long long id : ids) b.set(k.vertex_index(id));
  return b;
}

Pattern corner_arc_pattern(const SimplicialComplex2& k) {
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 1}, {"1-3", 1}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1})});
  return make_pattern(k, std::move(d));
}

} // namespace

TEST_CASE("single corner arc: two regions split 1 | 2,3") {
  auto k = k1();
  Pattern p = corner_arc_pattern(k);
  auto rd = regions(k, p);
  REQUIRE(rd.n_regions() == 2);
  std::set<BitVec> sets{rd.regions[0].vertices, rd.regions[1].vertices};
  CHECK(sets.count(vertex_set(k, {1})));
  CHECK(sets.count(vertex_set(k, {2, 3})));

  auto fh = fine_halfspaces(k, p, rd);
  CHECK((fh.side_regions[0][0].count() + fh.side_regions[0][1].count()) == 2);
  auto ch = coarse_halfspaces(k, p, rd, fh);
  std::set<BitVec> coarse{ch.side_vertices[0][0], ch.side_vertices[0][1]};
  CHECK(coarse.count(vertex_set(k, {1})));
  CHECK(coarse.count(vertex_set(k, {2, 3})));
  CHECK(ch.essential[0]);
}

TEST_CASE("crossing arcs: four regions and two classes") {
  auto k = k1();
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 2}, {"1-3", 1}, {"2-3", 1}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 2}, {{1, 3}, 1}),
                                arc(k, {1, 2, 3}, {{1, 2}, 1}, {{2, 3}, 1})});
  Pattern p = make_pattern(k, std::move(d));
  REQUIRE(p.n_tracks() == 2);
  auto rd = regions(k, p);
  CHECK(rd.n_regions() == 4);
  CHECK(max_pairwise_crossing(k, p) == 2);
  CHECK(is_d_pattern(k, p, 2));
  CHECK_FALSE(is_d_pattern(k, p, 1));

  auto fh = fine_halfspaces(k, p, rd);
  auto ch = coarse_halfspaces(k, p, rd, fh);
  CHECK(parallelism_classes(ch).size() == 2);

  // the central region: not a corner piece of any vertex
  int central = -1;
  for (int r = 0; r < rd.n_regions(); ++r)
    if (rd.regions[r].vertices.none()) central = r;
  REQUIRE(central >= 0);
  BitVec u = principal_ultrafilter(fh, central);
  for (int t = 0; t < 2; ++t)
    CHECK(fh.side_regions[t][u.get(t) ? 1 : 0].get(central));
}

TEST_CASE("nested corner arcs are parallel") {
  auto k = k1();
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 2}, {"1-3", 2}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1}),
                                arc(k, {1, 2, 3}, {{1, 2}, 2}, {{1, 3}, 2})});
  Pattern p = make_pattern(k, std::move(d));
  REQUIRE(p.n_tracks() == 2);
  auto rd = regions(k, p);
  CHECK(rd.n_regions() == 3); // corner, band, rest
  CHECK(max_pairwise_crossing(k, p) == 1);

  auto fh = fine_halfspaces(k, p, rd);
  // the inner track separates the corner region from band+rest
  int band = -1;
  for (int r = 0; r < rd.n_regions(); ++r)
    if (rd.regions[r].vertices.none()) band = r;
  REQUIRE(band >= 0);
  auto ch = coarse_halfspaces(k, p, rd, fh);
  for (int t = 0; t < 2; ++t) {
    std::set<BitVec> coarse{ch.side_vertices[t][0], ch.side_vertices[t][1]};
    CHECK(coarse.count(vertex_set(k, {1})));
    CHECK(coarse.count(vertex_set(k, {2, 3})));
  }
  CHECK(parallelism_classes(ch).size() == 1);
}

TEST_CASE("three disjoint corner arcs: 4 regions, width 1") {
  auto k = k1();
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 2}, {"1-3", 2}, {"2-3", 2}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1}),
                                arc(k, {1, 2, 3}, {{1, 2}, 2}, {{2, 3}, 1}),
                                arc(k, {1, 2, 3}, {{1, 3}, 2}, {{2, 3}, 2})});
  Pattern p = make_pattern(k, std::move(d));
  auto rd = regions(k, p);
  CHECK(rd.n_regions() == 4);
  CHECK(max_pairwise_crossing(k, p) == 1);
  CHECK(parallelism_classes(coarse_halfspaces(k, p, rd, fine_halfspaces(k, p, rd))).size() ==
        3);
}

TEST_CASE("track through a shared edge separates a corner of the square") {
  auto k = k2();
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 1}, {"2-3", 1}, {"2-4", 1}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{2, 3}, 1}),
                                arc(k, {2, 3, 4}, {{2, 3}, 1}, {{2, 4}, 1})});
  Pattern p = make_pattern(k, std::move(d));
  REQUIRE(p.n_tracks() == 1);
  auto rd = regions(k, p);
  CHECK(rd.n_regions() == 2);
  auto ch = coarse_halfspaces(k, p, rd, fine_halfspaces(k, p, rd));
  std::set<BitVec> coarse{ch.side_vertices[0][0], ch.side_vertices[0][1]};
  CHECK(coarse.count(vertex_set(k, {2})));
  CHECK(coarse.count(vertex_set(k, {1, 3, 4})));
}

TEST_CASE("regions connect through vertices of disconnected links") {
  // two triangles sharing only vertex 1
  RawComplex raw;
  raw.vertices = {1, 2, 3, 4, 5};
  raw.edges = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}};
  raw.faces = {{1, 2, 3}, {1, 4, 5}};
  auto k = validate_complex(raw);
  Pattern p = corner_arc_pattern(k);
  auto rd = regions(k, p);
  REQUIRE(rd.n_regions() == 2);
  auto ch = coarse_halfspaces(k, p, rd, fine_halfspaces(k, p, rd));
  std::set<BitVec> coarse{ch.side_vertices[0][0], ch.side_vertices[0][1]};
  // the wedge vertex pulls the whole second triangle to its side
  CHECK(coarse.count(vertex_set(k, {1, 4, 5})));
  CHECK(coarse.count(vertex_set(k, {2, 3})));
}

TEST_CASE("disconnected complexes are not two-sided") {
  RawComplex raw;
  raw.vertices = {1, 2, 3, 11, 12, 13};
  raw.edges = {{1, 2}, {1, 3}, {2, 3}, {11, 12}, {11, 13}, {12, 13}};
  raw.faces = {{1, 2, 3}, {11, 12, 13}};
  auto k = validate_complex(raw);
  Pattern p = corner_arc_pattern(k);
  auto rd = regions(k, p);
  CHECK(rd.n_regions() == 3);
  bool not_two_sided = false;
  try {
    fine_halfspaces(k, p, rd);
  } catch (const Error& e) {
    not_two_sided = e.code() == errc::not_two_sided;
  }
  CHECK(not_two_sided);
}

TEST_CASE("user track lists must match the component split") {
  auto k = k1();
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 2}, {"1-3", 2}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1}),
                                arc(k, {1, 2, 3}, {{1, 2}, 2}, {{1, 3}, 2})});
  CHECK_NOTHROW(make_pattern(k, d, std::vector<std::vector<int>>{{0}, {1}}));
  CHECK_THROWS_AS(make_pattern(k, d, std::vector<std::vector<int>>{{0, 1}}), Error);
  CHECK_THROWS_AS(make_pattern(k, d, std::vector<std::vector<int>>{{0}}), Error);
}

TEST_CASE("principal ultrafilters are upward closed on generated patterns") {
  Rng rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto k = gen_disk(rng.range(1, 8), rng);
    Pattern p;
    try {
      p = gen_pattern_direct(k, {}, rng);
    } catch (const Error&) {
      continue;
    }
    auto rd = regions(k, p);
    auto fh = fine_halfspaces(k, p, rd);
    auto fp = pocset_from_fine(k, p, rd, fh);
    for (int r = 0; r < rd.n_regions(); ++r) {
      CHECK(is_ultrafilter(fp.pocset, principal_ultrafilter(fh, r)));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("crossing tracks can still share their coarse pair") {
  // An X over one corner: both tracks cut off vertex 1 and cross each other;
  // the two off-quadrants carry no vertices, so the coarse pairs coincide.
  auto k = k1();
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 2}, {"1-3", 2}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 2}),
                                arc(k, {1, 2, 3}, {{1, 2}, 2}, {{1, 3}, 1})});
  Pattern p = make_pattern(k, std::move(d));
  REQUIRE(p.n_tracks() == 2);
  auto g = track_crossing_graph(k, p);
  CHECK(g.get(0, 1));
  auto rd = regions(k, p);
  CHECK(rd.n_regions() == 4);
  auto ch = coarse_halfspaces(k, p, rd, fine_halfspaces(k, p, rd));
  CHECK(parallelism_classes(ch).size() == 1);
}

TEST_CASE("coarse crossing forces fine crossing on generated patterns") {
  Rng rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    auto k = gen_disk(rng.range(1, 8), rng);
    Pattern p;
    try {
      p = gen_pattern_direct(k, {}, rng);
    } catch (const Error&) {
      continue;
    }
    auto rd = regions(k, p);
    auto fh = fine_halfspaces(k, p, rd);
    auto ch = coarse_halfspaces(k, p, rd, fh);
    auto fp = pocset_from_fine(k, p, rd, fh);
    auto cp = pocset_from_coarse(k, p, rd, fh, ch);
    for (int c1 = 0; c1 < cp.classes(); ++c1)
      for (int c2 = c1 + 1; c2 < cp.classes(); ++c2) {
        if (!transverse(cp.pocset, c1, c2)) continue;
        // every pair of member tracks must cross at the fine level
        for (int t1 : cp.class_tracks[c1])
          for (int t2 : cp.class_tracks[c2]) CHECK(transverse(fp.pocset, t1, t2));
      }
  }
}
