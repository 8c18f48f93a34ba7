#include "trackcube/normalize.hpp"

#include <algorithm>

namespace trackcube {

std::vector<std::pair<int, int>> find_self_returning(const SimplicialComplex2& k,
                                                     const Drawing& d) {
  (void)k;
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < d.arcs.size(); ++i)
    if (d.arcs[i].self_returning()) out.push_back({d.arcs[i].face, (int)i});
  return out;
}

namespace {

bool arc_is_innermost(const Drawing& d, int ai) {
  const Arc& a = d.arcs[ai];
  int e = a.a.edge, lo = a.a.index, hi = a.b.index;
  for (size_t j = 0; j < d.arcs.size(); ++j) {
    if ((int)j == ai || !d.arcs[j].self_returning() || d.arcs[j].a.edge != e) continue;
    if (lo < d.arcs[j].a.index && d.arcs[j].b.index < hi) return false;
  }
  return true;
}

} // namespace

int innermost(const SimplicialComplex2& k, const Drawing& d) {
  auto returning = find_self_returning(k, d);
  if (returning.empty()) return -1;
  std::sort(returning.begin(), returning.end(), [&](auto& l, auto& r) {
    const Arc &la = d.arcs[l.second], &ra = d.arcs[r.second];
    return std::tuple(la.a.edge, la.a.index, l.second) <
           std::tuple(ra.a.edge, ra.a.index, r.second);
  });
  for (auto& [face, ai] : returning)
    if (arc_is_innermost(d, ai)) return ai;
  fail(errc::internal, "no innermost self-returning arc"); // nesting is well-founded
}

Drawing push_move(const SimplicialComplex2& k, const Drawing& d, int arc_index, PushLog* log) {
  if (arc_index < 0 || arc_index >= (int)d.arcs.size())
    fail(errc::input_error, "bad arc index");
  const Arc a = d.arcs[arc_index];
  if (!a.self_returning()) fail(errc::input_error, "arc is not self-returning");
  if (!arc_is_innermost(d, arc_index))
    fail(errc::not_innermost, "another self-returning arc nests strictly inside");

  int e = a.a.edge;
  auto& faces = k.edge_faces[e];
  if (faces.size() == 1)
    fail(errc::boundary_return, "cannot push through boundary edge " + k.edge_name(e));
  if (faces.size() > 2)
    fail(errc::non_manifold_return,
         "push through edge " + k.edge_name(e) + " with " + std::to_string(faces.size()) +
             " faces is ambiguous");
  int to_face = faces[0] == a.face ? faces[1] : faces[0];
  int lo = a.a.index, hi = a.b.index;

  PushLog pl;
  pl.edge = e;
  pl.from_face = a.face;
  pl.to_face = to_face;
  pl.lo = lo;
  pl.hi = hi;

  // partner arcs in the opposite face at the two vanishing crossing points
  int bi = -1, bj = -1;
  auto end_matches = [&](const Arc& arc, int idx) {
    return (arc.a.edge == e && arc.a.index == idx) || (arc.b.edge == e && arc.b.index == idx);
  };
  for (size_t i = 0; i < d.arcs.size(); ++i) {
    if (d.arcs[i].face != to_face) continue;
    if (end_matches(d.arcs[i], lo)) bi = (int)i;
    if (end_matches(d.arcs[i], hi)) bj = (int)i;
  }
  if (bi < 0 || bj < 0) fail(errc::internal, "partner arcs missing");

  std::vector<Arc> arcs;
  arcs.reserve(d.arcs.size());
  if (bi == bj) {
    pl.closed_loop = true;
    for (size_t i = 0; i < d.arcs.size(); ++i)
      if ((int)i != arc_index && (int)i != bi) arcs.push_back(d.arcs[i]);
  } else {
    auto other_end = [&](const Arc& arc, int idx) {
      return (arc.a.edge == e && arc.a.index == idx) ? arc.b : arc.a;
    };
    Arc spliced;
    spliced.face = to_face;
    spliced.a = other_end(d.arcs[bi], lo);
    spliced.b = other_end(d.arcs[bj], hi);
    if (spliced.b < spliced.a) std::swap(spliced.a, spliced.b);
    pl.created_return = spliced.self_returning();
    for (size_t i = 0; i < d.arcs.size(); ++i)
      if ((int)i != arc_index && (int)i != bi && (int)i != bj) arcs.push_back(d.arcs[i]);
    arcs.push_back(spliced);
  }

  // delete the two crossing points of e and renumber the rest
  auto shift = [&](ArcEnd& end) {
    if (end.edge != e) return;
    if (end.index > hi)
      end.index -= 2;
    else if (end.index > lo)
      end.index -= 1;
  };
  for (Arc& arc : arcs) {
    shift(arc.a);
    shift(arc.b);
    if (arc.b < arc.a) std::swap(arc.a, arc.b);
  }
  std::vector<int> counts = d.crossing_counts;
  counts[e] -= 2;

  if (log) *log = pl;
  return validate_drawing(
      k, std::move(counts), std::move(arcs),
      {.allow_empty = true, .generalized = true, .allow_boundary_returns = true});
}

NormalizeResult normalize(const SimplicialComplex2& k, const Drawing& d, bool record_cliques) {
  NormalizeResult res;
  Drawing cur = d;

  auto clique_number = [&](const Drawing& dr) {
    if (dr.empty()) return 0;
    Pattern p = make_pattern(k, dr, std::nullopt, false);
    return max_pairwise_crossing(k, p);
  };

  for (;;) {
    if (record_cliques) res.clique_numbers.push_back(clique_number(cur));
    int ai = innermost(k, cur);
    if (ai < 0) break;
    PushLog pl;
    cur = push_move(k, cur, ai, &pl);
    res.log.push_back(pl);
    ++res.moves;
  }

  if (cur.empty()) {
    res.emptied = true;
    res.pattern.drawing = std::move(cur);
    return res;
  }
  // now strict: revalidate under the strict axioms and split into tracks
  Drawing strict = validate_drawing(k, cur.crossing_counts, cur.arcs, {});
  res.pattern = make_pattern(k, std::move(strict), std::nullopt, false);
  return res;
}

} // namespace trackcube
