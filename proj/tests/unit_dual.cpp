#include <doctest.h>

#include <functional>

#include "test_fixtures.hpp"
#include "trackcube/dual.hpp"
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

Pocset square_pocset() {
  return make_pocset({"a", "a*", "b", "b*"}, {});
}

Pocset chain_pocset() {
  return make_pocset({"a", "a*", "b", "b*"}, {{0, 2}});
}

// fine pocset of three disjoint corner arcs on the triangle
struct Star {
  SimplicialComplex2 k;
  Pattern p;
  RegionDecomposition rd;
  FineHalfspaces fh;
  FinePocset fp;
  CubeComplex x;
};
Star star_dual() {
  Star s;
  s.k = k1();
  Drawing d = validate_drawing(s.k, counts(s.k, {{"1-2", 2}, {"1-3", 2}, {"2-3", 2}}),
                               {arc(s.k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1}),
                                arc(s.k, {1, 2, 3}, {{1, 2}, 2}, {{2, 3}, 1}),
                                arc(s.k, {1, 2, 3}, {{1, 3}, 2}, {{2, 3}, 2})});
  s.p = make_pattern(s.k, std::move(d));
  s.rd = regions(s.k, s.p);
  s.fh = fine_halfspaces(s.k, s.p, s.rd);
  s.fp = pocset_from_fine(s.k, s.p, s.rd, s.fh);
  s.x = dual_complex(s.fp.pocset, kDefaultVertexCap, principal_ultrafilter(s.fh, 0));
  return s;
}

} // namespace

TEST_CASE("square pocset dual is a 4-cycle") {
  auto x = dual_complex(square_pocset());
  CHECK(x.V() == 4);
  CHECK(x.edges.size() == 4);
  CHECK(crossing(x, 0, 1));
  CHECK_FALSE(adjacent(x, 0, 1));
  CHECK(dimension(x) == 2);
}

TEST_CASE("chain pocset dual is a path") {
  auto x = dual_complex(chain_pocset());
  CHECK(x.V() == 3);
  CHECK(x.edges.size() == 2);
  CHECK_FALSE(crossing(x, 0, 1));
  CHECK(adjacent(x, 0, 1));
  CHECK(dimension(x) == 1);
  // the bottom vertex holds sides a and b; a separates it from b's wall
  int bottom = x.index_of([&] {
    BitVec b(2);
    return b;
  }());
  REQUIRE(bottom >= 0);
  CHECK(less_from(x, bottom, 0, 1));
  CHECK_FALSE(less_from(x, bottom, 1, 0));
}

TEST_CASE("independent pairs give hypercubes") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::string> names;
    for (int p = 0; p < n; ++p) {
      names.push_back("h" + std::to_string(p) + "+");
      names.push_back("h" + std::to_string(p) + "-");
    }
    auto x = dual_complex(make_pocset(names, {}));
    CHECK(x.V() == (1 << n));
    CHECK((int)x.edges.size() == n * (1 << (n - 1)));
    CHECK(dimension(x) == n);
  }
}

TEST_CASE("vertex cap fires") {
  std::vector<std::string> names;
  for (int p = 0; p < 6; ++p) {
    names.push_back("h" + std::to_string(p) + "+");
    names.push_back("h" + std::to_string(p) + "-");
  }
  auto p = make_pocset(names, {});
  CHECK(code_of([&] { dual_complex(p, 5); }) == errc::cap_exceeded);
}

TEST_CASE("corrupted relation has no seed") {
  // bypass validation: b < a and a < b simultaneously
  Pocset p;
  p.names = {"a", "a*", "b", "b*"};
  p.lt = BitMatrix(4);
  p.lt.set(0, 2);
  p.lt.set(2, 0);
  CHECK(code_of([&] { greedy_seed(p); }) == errc::no_seed);
}

TEST_CASE("median basics") {
  auto x = dual_complex(square_pocset());
  for (int a = 0; a < x.V(); ++a)
    for (int b = 0; b < x.V(); ++b) CHECK(median(x, a, a, b) == a);
  // majority of three distinct corners of the square
  BitVec v00(2), v10(2), v01(2);
  v10.set(0);
  v01.set(1);
  int i00 = x.index_of(v00), i10 = x.index_of(v10), i01 = x.index_of(v01);
  REQUIRE(i00 >= 0);
  CHECK(median(x, i10, i00, i01) == i00);
}

TEST_CASE("median of the star leaves is the centre") {
  auto s = star_dual();
  CHECK(s.x.V() == 4);
  // region 0 holds vertex 1's corner piece; the centre is the all-far vertex
  std::vector<int> leaves;
  int centre = -1;
  for (int v = 0; v < s.x.V(); ++v) {
    if ((int)s.x.adj[v].size() == 3)
      centre = v;
    else
      leaves.push_back(v);
  }
  REQUIRE(centre >= 0);
  REQUIRE(leaves.size() == 3);
  CHECK(median(s.x, leaves[0], leaves[1], leaves[2]) == centre);

  CHECK(facing_triple(s.x, 0, 1, 2));
  CHECK(separated_by(s.x, centre, 0, 1));
  CHECK(separated_by(s.x, centre, 0, 2));
  CHECK(separated_by(s.x, centre, 1, 2));
}

TEST_CASE("median failure on a broken dual is fatal") {
  auto x = dual_complex(square_pocset());
  // damage the complex: remove one corner from the index
  BitVec v11(2);
  v11.set(0);
  v11.set(1);
  BitVec v10(2), v01(2);
  v10.set(0);
  v01.set(1);
  int i10 = x.index_of(v10), i01 = x.index_of(v01);
  int i11 = x.index_of(v11);
  x.vertex_index.erase(v11);
  CHECK(code_of([&] { median(x, i10, i01, i11); }) == errc::median_missing);
}

TEST_CASE("intervals") {
  auto x = dual_complex(square_pocset());
  auto self = interval(x, 2, 2);
  CHECK(self.members == std::vector<int>{2});
  CHECK(self.walls.none());

  BitVec v00(2), v11(2);
  v11.set(0);
  v11.set(1);
  auto diag = interval(x, x.index_of(v00), x.index_of(v11));
  CHECK(diag.members.size() == 4);
  CHECK(diag.walls.count() == 2);

  auto chain = dual_complex(chain_pocset());
  BitVec bottom(2), top(2);
  top.set(0);
  top.set(1);
  auto full = interval(chain, chain.index_of(bottom), chain.index_of(top));
  CHECK(full.members.size() == 3);
}

TEST_CASE("no facing triple meets a single interval") {
  auto s = star_dual();
  for (int a = 0; a < s.x.V(); ++a)
    for (int b = a + 1; b < s.x.V(); ++b) {
      auto iv = interval(s.x, a, b);
      std::vector<int> walls;
      iv.walls.for_each([&](int w) { walls.push_back(w); });
      for (size_t i = 0; i < walls.size(); ++i)
        for (size_t j = i + 1; j < walls.size(); ++j)
          for (size_t l = j + 1; l < walls.size(); ++l)
            CHECK_FALSE(facing_triple(s.x, walls[i], walls[j], walls[l]));
    }
}

TEST_CASE("halfspaces are median convex") {
  auto s = star_dual();
  for (int pr = 0; pr < s.x.n_pairs(); ++pr) {
    for (int side = 0; side < 2; ++side) {
      BitVec in = side ? ~s.x.side_vertices0[pr] : s.x.side_vertices0[pr];
      in.for_each([&](int v1) {
        in.for_each([&](int v2) {
          for (int w = 0; w < s.x.V(); ++w) CHECK(in.get(median(s.x, v1, v2, w)));
        });
      });
    }
  }
}

TEST_CASE("duality round trip on random pocsets") {
  Rng rng(808);
  for (int i = 0; i < 30; ++i) {
    int n = rng.range(1, 8);
    Pocset p = gen_pocset(n, rng.range(0, 3 * n), rng);
    auto x = dual_complex(p);
    CHECK(read_off_pocset(x).lt == p.lt);
    // every enumerated vertex is an ultrafilter and medians stay inside
    for (auto& bits : x.vertices) CHECK(is_ultrafilter(p, bits));
  }
}

TEST_CASE("pattern duals realize regions as vertices") {
  Rng rng(4711);
  for (int trial = 0; trial < 15; ++trial) {
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
    auto x = dual_complex(fp.pocset, kDefaultVertexCap, principal_ultrafilter(fh, 0));
    CHECK(x.V() == rd.n_regions());
    // crossing in the dual matches pocset transversality
    for (int s = 0; s < fp.pocset.pairs(); ++s)
      for (int t = s + 1; t < fp.pocset.pairs(); ++t)
        CHECK(crossing(x, s, t) == transverse(fp.pocset, s, t));
  }
}

TEST_CASE("triangle images collapse unseparated corners") {
  auto k = k1();
  Drawing d = validate_drawing(k, counts(k, {{"1-2", 1}, {"1-3", 1}}),
                               {arc(k, {1, 2, 3}, {{1, 2}, 1}, {{1, 3}, 1})});
  Pattern p = make_pattern(k, std::move(d));
  auto rd = regions(k, p);
  auto fh = fine_halfspaces(k, p, rd);
  auto ch = coarse_halfspaces(k, p, rd, fh);
  auto cp = pocset_from_coarse(k, p, rd, fh, ch);
  auto coarse = dual_complex(cp.pocset, kDefaultVertexCap, BitVec(cp.classes()));
  auto images = triangle_images(coarse, cp, k);
  REQUIRE(images.size() == 1);
  CHECK(images[0][0] != images[0][1]);
  CHECK(images[0][1] == images[0][2]);
}

TEST_CASE("exports are deterministic") {
  auto x = dual_complex(chain_pocset());
  auto j = export_json(x);
  CHECK(j == export_json(x));
  CHECK(j.find("\"hyperplanes\"") != std::string::npos);
  auto dot = export_dot(x);
  CHECK(dot.find("graph dual {") == 0);
}
