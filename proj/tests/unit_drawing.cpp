#include <doctest.h>

#include <functional>

#include "test_fixtures.hpp"
#include "trackcube/arrangement.hpp"
#include "trackcube/generate.hpp"

using namespace trackcube;
using namespace trackcube::testing;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::internal;
}

// test-local chord oracle: proper segment intersection from scratch
int orient3(const Pt& a, const Pt& b, const Pt& c) {
  Frac v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v.sign();
}
bool chords_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  return orient3(a, b, c) * orient3(a, b, d) < 0 && orient3(c, d, a) * orient3(c, d, b) < 0;
}

} // namespace

TEST_CASE("single corner arc validates") {
  auto k = k1();
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 1}, {"1-3", 1}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1})});
  CHECK(d.arcs.size() == 1);
  CHECK(d.total_crossings() == 2);
}

TEST_CASE("axiom 4: shared endpoint rejected") {
  auto k = k1();
  auto c = counts(k, {{"1-2", 1}, {"1-3", 1}, {"2-3", 1}});
  std::vector<Arc> arcs{arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1}),
                        arc(k, {1, 2, 3}, {{1, 2}, 1}, {{2, 3}, 1})};
  CHECK(code_of([&] { validate_drawing(k, c, arcs); }) == errc::axiom_violation);
}

TEST_CASE("axiom 5: unmatched crossing point rejected") {
  auto k = k2();
  // face 123 touches (2-3,1) but face 234 does not
  auto c = counts(k, {{"1-2", 1}, {"2-3", 1}});
  std::vector<Arc> arcs{arc(k, {1, 2, 3}, {{1, 2}, 1}, {{2, 3}, 1})};
  CHECK(code_of([&] { validate_drawing(k, c, arcs); }) == errc::axiom_violation);
}

TEST_CASE("axiom 2: same-edge endpoints need the generalized mode") {
  auto k = k2();
  auto c = counts(k, {{"2-3", 2}});
  std::vector<Arc> arcs{arc(k, {1, 2, 3}, {{2, 3}, 1}, {{2, 3}, 2}),
                        arc(k, {2, 3, 4}, {{2, 3}, 1}, {{2, 3}, 2})};
  CHECK(code_of([&] { validate_drawing(k, c, arcs); }) == errc::axiom_violation);
  Drawing d = validate_drawing(k, c, arcs, {.generalized = true});
  CHECK(d.arcs[0].self_returning());
}

TEST_CASE("self-return to a boundary edge is inessential") {
  auto k = k1();
  auto c = counts(k, {{"1-2", 2}});
  std::vector<Arc> arcs{arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 2}, 2})};
  CHECK(code_of([&] { validate_drawing(k, c, arcs, {.generalized = true}); }) ==
        errc::boundary_return);
}

TEST_CASE("pretrack split: nested corner arcs stay separate") {
  auto k = k1();
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 2}, {"1-3", 2}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1}),
                                arc(k, {1, 2, 3}, {{1, 2}, 2}, {{1, 3}, 2})});
  auto comps = split_into_pretracks(k, d);
  CHECK(comps.size() == 2);
}

TEST_CASE("pretrack split: arcs joined through a shared edge") {
  auto k = k2();
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 1}, {"2-3", 1}, {"2-4", 1}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{2, 3}, 1}),
                                arc(k, {2, 3, 4}, {{2, 3}, 1}, {{2, 4}, 1})});
  auto comps = split_into_pretracks(k, d);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].size() == 2);
  CHECK(is_track(k, d, comps[0]));
}

TEST_CASE("empty drawing split is refused") {
  auto k = k1();
  Drawing d = validate_drawing(k, std::vector<int>(k.E(), 0), {}, {.allow_empty = true});
  CHECK(code_of([&] { split_into_pretracks(k, d); }) == errc::non_empty_required);
}

TEST_CASE("crossing predicate on the cited corner arcs") {
  auto k = k1();
  auto c = counts(k, {{"1-2", 2}, {"1-3", 1}, {"2-3", 1}});
  Arc corner1 = arc(k, {1, 2, 3}, {{1, 2}, 2}, {{1, 3}, 1});
  Arc corner2 = arc(k, {1, 2, 3}, {{1, 2}, 1}, {{2, 3}, 1});
  Drawing d = validate_drawing(k, c, {corner1, corner2});
  CHECK(arcs_cross(k, d, 0, corner1, corner2));

  // corner-1 arcs at indices (1,1) and (2,2) nest
  Drawing nested = validate_drawing(k, counts(k, {{"1-2", 2}, {"1-3", 2}}),
                                    {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1}),
                                     arc(k, {1, 2, 3}, {{1, 2}, 2}, {{1, 3}, 2})});
  CHECK_FALSE(arcs_cross(k, nested, 0, nested.arcs[0], nested.arcs[1]));

  Arc a1 = arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1});
  Arc a2 = arc(k, {1, 2, 3}, {{1, 2}, 2}, {{2, 3}, 1});
  Drawing d2 = validate_drawing(k, counts(k, {{"1-2", 2}, {"1-3", 1}, {"2-3", 1}}), {a1, a2});
  CHECK_FALSE(arcs_cross(k, d2, 0, a1, a2));
}

TEST_CASE("a hand-built crossing pair is not a track") {
  auto k = k1();
  auto c = counts(k, {{"1-2", 2}, {"1-3", 1}, {"2-3", 1}});
  Drawing d = validate_drawing(k, c,
                               {arc(k, {1, 2, 3}, {{1, 2}, 2}, {{1, 3}, 1}),
                                arc(k, {1, 2, 3}, {{1, 2}, 1}, {{2, 3}, 1})});
  CHECK_FALSE(is_track(k, d, {0, 1}));
  CHECK(is_track(k, d, {0}));
}

TEST_CASE("track check needs trivial cohomology") {
  auto k = torus7();
  Drawing d = validate_drawing(k, std::vector<int>(k.E(), 0), {}, {.allow_empty = true});
  CHECK(code_of([&] { is_track(k, d, {}); }) == errc::precondition_h1);
}

TEST_CASE("interleaving agrees with exact chord intersection") {
  Rng rng(1234);
  int pairs_checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto k = gen_disk(rng.range(1, 8), rng);
    GenPatternOptions opts;
    opts.max_width = 3; // wider drawings exercise more crossings
    opts.max_count = 3;
    Pattern p;
    try {
      p = gen_pattern_direct(k, opts, rng);
    } catch (const Error&) {
      continue;
    }
    const Drawing& d = p.drawing;
    for (int f = 0; f < k.T(); ++f) {
      auto& list = d.face_arcs[f];
      for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = i + 1; j < list.size(); ++j) {
          const Arc &a = d.arcs[list[i]], &b = d.arcs[list[j]];
          bool combinatorial = arcs_cross(k, d, f, a, b);
          bool geometric =
              chords_intersect(model_point(k, d, f, a.a), model_point(k, d, f, a.b),
                               model_point(k, d, f, b.a), model_point(k, d, f, b.b));
          CHECK(combinatorial == geometric);
          ++pairs_checked;
        }
    }
  }
  CHECK(pairs_checked > 100);
}

TEST_CASE("pretrack components inherit the matching axiom") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    auto k = gen_disk(rng.range(2, 8), rng);
    Pattern p;
    try {
      p = gen_pattern_direct(k, {}, rng);
    } catch (const Error&) {
      continue;
    }
    for (auto& comp : p.tracks) {
      std::set<std::pair<int, int>> points;
      for (int ai : comp) {
        points.insert({p.drawing.arcs[ai].a.edge, p.drawing.arcs[ai].a.index});
        points.insert({p.drawing.arcs[ai].b.edge, p.drawing.arcs[ai].b.index});
      }
      for (auto& [e, idx] : points) {
        for (int f : k.edge_faces[e]) {
          int ends = 0;
          for (int ai : comp) {
            const Arc& a = p.drawing.arcs[ai];
            if (a.face != f) continue;
            if (a.a.edge == e && a.a.index == idx) ++ends;
            if (a.b.edge == e && a.b.index == idx) ++ends;
          }
          CHECK(ends == 1);
        }
      }
    }
  }
}
