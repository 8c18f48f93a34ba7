#include "trackcube/drawing.hpp"

#include <algorithm>
#include <set>

namespace trackcube {

long long Drawing::total_crossings() const {
  long long s = 0;
  for (int c : crossing_counts) s += c;
  return s;
}

namespace {

int parse_edge_name(const SimplicialComplex2& k, const std::string& name) {
  auto dash = name.find('-');
  if (dash == std::string::npos) fail(errc::input_error, "bad edge key '" + name + "'");
  long long u, v;
  try {
    u = std::stoll(name.substr(0, dash));
    v = std::stoll(name.substr(dash + 1));
  } catch (...) {
    fail(errc::input_error, "bad edge key '" + name + "'");
  }
  int ui = k.vertex_index(u), vi = k.vertex_index(v);
  if (ui < 0 || vi < 0) fail(errc::missing_simplex, "edge key '" + name + "' uses absent vertex");
  int e = k.edge_id(ui, vi);
  if (e < 0) fail(errc::missing_simplex, "edge '" + name + "' not in complex");
  return e;
}

int face_of(const SimplicialComplex2& k, const std::array<long long, 3>& ids) {
  std::array<int, 3> t;
  for (int j = 0; j < 3; ++j) {
    t[j] = k.vertex_index(ids[j]);
    if (t[j] < 0) fail(errc::missing_simplex, "arc face uses absent vertex");
  }
  std::sort(t.begin(), t.end());
  auto it = std::lower_bound(k.faces.begin(), k.faces.end(), t);
  if (it == k.faces.end() || *it != t) fail(errc::missing_simplex, "arc face not in complex");
  return int(it - k.faces.begin());
}

} // namespace

Drawing validate_drawing(const SimplicialComplex2& k, std::vector<int> crossing_counts,
                         std::vector<Arc> arcs, DrawingOptions opts) {
  if (!k.pure) fail(errc::dangling_edge, "drawings require a pure complex");
  Drawing d;
  d.generalized = opts.generalized;
  d.crossing_counts = std::move(crossing_counts);
  d.crossing_counts.resize(k.E(), 0);
  d.arcs = std::move(arcs);
  d.face_arcs.assign(k.T(), {});

  if (d.arcs.empty() && !opts.allow_empty)
    fail(errc::non_empty_required, "drawing has no arcs");

  auto face_has_edge = [&](int f, int e) {
    auto& fe = k.face_edge_ids[f];
    return fe[0] == e || fe[1] == e || fe[2] == e;
  };

  // endpoint usage per (face, edge, index); axiom 4 forbids repeats
  std::set<std::array<int, 3>> used;
  for (size_t i = 0; i < d.arcs.size(); ++i) {
    Arc& arc = d.arcs[i];
    if (arc.b < arc.a) std::swap(arc.a, arc.b);
    if (arc.face < 0 || arc.face >= k.T()) fail(errc::input_error, "arc with bad face id");
    for (const ArcEnd* end : {&arc.a, &arc.b}) {
      if (end->edge < 0 || end->edge >= k.E()) fail(errc::input_error, "arc with bad edge id");
      if (!face_has_edge(arc.face, end->edge))
        fail(errc::axiom_violation, "axiom 2: arc endpoint on edge " + k.edge_name(end->edge) +
                                        " outside face " + k.face_name(arc.face));
      if (end->index < 1 || end->index > d.crossing_counts[end->edge])
        fail(errc::axiom_violation,
             "axiom 5: index " + std::to_string(end->index) + " out of range on edge " +
                 k.edge_name(end->edge));
      if (!used.insert({arc.face, end->edge, end->index}).second)
        fail(errc::axiom_violation, "axiom 4: two arcs in face " + k.face_name(arc.face) +
                                        " share endpoint (" + k.edge_name(end->edge) + "," +
                                        std::to_string(end->index) + ")");
    }
    if (arc.a.edge == arc.b.edge) {
      if (!opts.generalized)
        fail(errc::axiom_violation,
             "axiom 2: arc endpoints on the same edge " + k.edge_name(arc.a.edge));
      if (arc.a.index == arc.b.index)
        fail(errc::input_error, "arc with identical endpoints");
      if (k.is_boundary_edge(arc.a.edge) && !opts.allow_boundary_returns)
        fail(errc::boundary_return,
             "self-returning arc on boundary edge " + k.edge_name(arc.a.edge) +
                 " is inessential");
    }
    d.face_arcs[arc.face].push_back((int)i);
  }

  // axiom 5: every face containing an edge realizes each of its crossing
  // points exactly once
  for (int e = 0; e < k.E(); ++e) {
    int c = d.crossing_counts[e];
    if (c == 0) continue;
    for (int f : k.edge_faces[e]) {
      for (int idx = 1; idx <= c; ++idx)
        if (!used.count({f, e, idx}))
          fail(errc::axiom_violation, "axiom 5: face " + k.face_name(f) +
                                          " has no arc endpoint at (" + k.edge_name(e) + "," +
                                          std::to_string(idx) + ")");
    }
  }

  return d;
}

Drawing validate_drawing(const SimplicialComplex2& k, const RawDrawing& raw,
                         DrawingOptions opts) {
  std::vector<int> counts(k.E(), 0);
  for (auto& [name, c] : raw.crossing_counts) {
    if (c < 0) fail(errc::input_error, "negative crossing count on " + name);
    counts[parse_edge_name(k, name)] = c;
  }
  std::vector<Arc> arcs;
  arcs.reserve(raw.arcs.size());
  for (auto& ra : raw.arcs) {
    Arc a;
    a.face = face_of(k, ra.face);
    a.a = {parse_edge_name(k, ra.a.edge), ra.a.index};
    a.b = {parse_edge_name(k, ra.b.edge), ra.b.index};
    arcs.push_back(a);
  }
  return validate_drawing(k, std::move(counts), std::move(arcs), opts);
}

std::vector<ArcEnd> boundary_cycle(const SimplicialComplex2& k, const Drawing& d, int face) {
  std::vector<ArcEnd> cycle;
  auto& fe = k.face_edge_ids[face];
  // v0->v1 and v1->v2 run along canonical direction, v2->v0 against it
  for (int j = 0; j < 3; ++j) {
    int e = fe[j];
    int c = d.crossing_counts[e];
    if (j < 2)
      for (int i = 1; i <= c; ++i) cycle.push_back({e, i});
    else
      for (int i = c; i >= 1; --i) cycle.push_back({e, i});
  }
  return cycle;
}

bool arcs_cross(const SimplicialComplex2& k, const Drawing& d, int face, const Arc& a1,
                const Arc& a2) {
  auto cycle = boundary_cycle(k, d, face);
  auto pos = [&](const ArcEnd& e) {
    for (size_t i = 0; i < cycle.size(); ++i)
      if (cycle[i] == e) return (int)i;
    fail(errc::internal, "arc endpoint not on face boundary");
  };
  int x1 = pos(a1.a), y1 = pos(a1.b);
  if (x1 > y1) std::swap(x1, y1);
  int x2 = pos(a2.a), y2 = pos(a2.b);
  bool in1 = x1 < x2 && x2 < y1;
  bool in2 = x1 < y2 && y2 < y1;
  return in1 != in2;
}

std::vector<std::vector<int>> split_into_pretracks(const SimplicialComplex2& k,
                                                   const Drawing& d) {
  (void)k;
  if (d.empty()) fail(errc::non_empty_required, "cannot split an empty drawing");

  int n = (int)d.arcs.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  // all arc-ends at one crossing point (one per incident face) meet there
  std::map<std::pair<int, int>, int> first_at;
  for (int i = 0; i < n; ++i) {
    for (const ArcEnd* end : {&d.arcs[i].a, &d.arcs[i].b}) {
      auto key = std::make_pair(end->edge, end->index);
      auto [it, fresh] = first_at.emplace(key, i);
      if (!fresh) join(it->second, i);
    }
  }

  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(comps.size());
  for (auto& [root, members] : comps) out.push_back(std::move(members));
  return out;
}

bool is_track(const SimplicialComplex2& k, const Drawing& d,
              const std::vector<int>& pretrack_arcs) {
  if (k.h1 != 0)
    fail(errc::precondition_h1,
         "track check needs H^1(K; Z/2) = 0, got dimension " + std::to_string(k.h1));
  std::map<int, std::vector<int>> by_face;
  for (int i : pretrack_arcs) by_face[d.arcs[i].face].push_back(i);
  for (auto& [face, list] : by_face)
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t j = i + 1; j < list.size(); ++j)
        if (arcs_cross(k, d, face, d.arcs[list[i]], d.arcs[list[j]])) return false;
  return true;
}

} // namespace trackcube
