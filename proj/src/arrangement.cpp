#include "trackcube/arrangement.hpp"

#include <algorithm>
#include <map>

namespace trackcube {

namespace {

// corner positions of the model triangle
const Pt kCorner[3] = {{Frac(0), Frac(0)}, {Frac(1), Frac(0)}, {Frac(0), Frac(1)}};

Pt side_point(int j, const Frac& t) {
  switch (j) {
    case 0: return {t, Frac(0)};                 // v0 -> v1
    case 1: return {Frac(1) - t, t};             // v1 -> v2
    default: return {Frac(0), t};                // v0 -> v2
  }
}

// CCW order of directions starting just above the positive x-axis
struct AngleLess {
  bool operator()(const Pt& a, const Pt& b) const {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b).sign() > 0;
  }
  static int half(const Pt& v) {
    if (v.y.sign() > 0 || (v.y.sign() == 0 && v.x.sign() > 0)) return 0;
    return 1;
  }
};

struct GraphEdge {
  int u, v;
  // label
  bool boundary;
  int j = -1;       // face-edge position for boundary segments
  int interval = -1; // canonical sub-segment index
  int arc = -1;     // global arc index for chord segments
};

} // namespace

Pt model_point(const SimplicialComplex2& k, const Drawing& d, int face, const ArcEnd& end) {
  auto& fe = k.face_edge_ids[face];
  int j = -1;
  for (int p = 0; p < 3; ++p)
    if (fe[p] == end.edge) j = p;
  if (j < 0) fail(errc::internal, "arc end not on face");
  Frac t(end.index, d.crossing_counts[end.edge] + 1);
  return side_point(j, t);
}

FaceArrangement arrange_face(const SimplicialComplex2& k, const Drawing& d, int face) {
  FaceArrangement out;
  out.face = face;

  std::map<Pt, int> node_of;
  std::vector<Pt> nodes;
  auto node = [&](const Pt& p) {
    auto [it, fresh] = node_of.emplace(p, (int)nodes.size());
    if (fresh) nodes.push_back(p);
    return it->second;
  };

  struct Chord {
    int arc;
    Pt a, b;
    std::vector<std::pair<Frac, Pt>> cuts; // param along a->b (by dot), interior crossings
  };
  std::vector<Chord> chords;
  for (int ai : d.face_arcs[face]) {
    const Arc& arc = d.arcs[ai];
    if (arc.self_returning())
      fail(errc::internal, "arrangement needs a strict drawing, arc returns to one edge");
    chords.push_back({ai, model_point(k, d, face, arc.a), model_point(k, d, face, arc.b), {}});
  }

  // pairwise chord crossings; a point hit by more than one pair means three
  // concurrent chords
  std::map<Pt, int> crossing_multiplicity;
  for (size_t i = 0; i < chords.size(); ++i)
    for (size_t j = i + 1; j < chords.size(); ++j) {
      if (!segments_cross(chords[i].a, chords[i].b, chords[j].a, chords[j].b)) continue;
      Pt p = line_intersection(chords[i].a, chords[i].b, chords[j].a, chords[j].b);
      if (++crossing_multiplicity[p] > 1)
        fail(errc::degenerate_arrangement,
             "three chords meet at one point in face " + k.face_name(face));
      Pt dir = chords[i].b - chords[i].a;
      chords[i].cuts.push_back({dot(p - chords[i].a, dir), p});
      dir = chords[j].b - chords[j].a;
      chords[j].cuts.push_back({dot(p - chords[j].a, dir), p});
      ++out.n_crossings;
    }

  std::vector<GraphEdge> gedges;

  // boundary sub-segments, walked in canonical edge direction
  auto& fe = k.face_edge_ids[face];
  const int side_corner[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  for (int j = 0; j < 3; ++j) {
    int c = d.crossing_counts[fe[j]];
    int prev = node(kCorner[side_corner[j][0]]);
    for (int i = 1; i <= c + 1; ++i) {
      int cur = i <= c ? node(side_point(j, Frac(i, c + 1)))
                       : node(kCorner[side_corner[j][1]]);
      gedges.push_back({prev, cur, true, j, i - 1, -1});
      prev = cur;
    }
  }

  // chord sub-segments
  for (auto& ch : chords) {
    std::sort(ch.cuts.begin(), ch.cuts.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    int prev = node(ch.a);
    for (auto& [t, p] : ch.cuts) {
      int cur = node(p);
      gedges.push_back({prev, cur, false, -1, -1, ch.arc});
      prev = cur;
    }
    gedges.push_back({prev, node(ch.b), false, -1, -1, ch.arc});
  }

  // half-edge structure: half-edge 2*e = u->v, 2*e+1 = v->u
  int H = 2 * (int)gedges.size();
  std::vector<std::vector<int>> out_of(nodes.size());
  for (int h = 0; h < H; ++h) {
    const GraphEdge& e = gedges[h / 2];
    out_of[h & 1 ? e.v : e.u].push_back(h);
  }
  auto target = [&](int h) {
    const GraphEdge& e = gedges[h / 2];
    return h & 1 ? e.u : e.v;
  };
  auto source = [&](int h) {
    const GraphEdge& e = gedges[h / 2];
    return h & 1 ? e.v : e.u;
  };
  AngleLess less;
  std::vector<int> pos_in_rotation(H);
  for (size_t v = 0; v < nodes.size(); ++v) {
    auto& rot = out_of[v];
    std::sort(rot.begin(), rot.end(), [&](int ha, int hb) {
      Pt da = nodes[target(ha)] - nodes[(int)v];
      Pt db = nodes[target(hb)] - nodes[(int)v];
      return less(da, db);
    });
    for (size_t i = 0; i < rot.size(); ++i) pos_in_rotation[rot[i]] = (int)i;
  }
  // next half-edge of a left-of-edge (counterclockwise) face walk: step to the
  // rotation predecessor of the reversed half-edge
  auto next_he = [&](int h) {
    int rev = h ^ 1;
    int v = source(rev);
    auto& rot = out_of[v];
    int p = pos_in_rotation[rev];
    return rot[(p + rot.size() - 1) % rot.size()];
  };

  std::vector<int> face_of_he(H, -1);
  std::vector<std::vector<int>> walks;
  for (int h0 = 0; h0 < H; ++h0) {
    if (face_of_he[h0] >= 0) continue;
    int id = (int)walks.size();
    walks.emplace_back();
    int h = h0;
    do {
      face_of_he[h] = id;
      walks.back().push_back(h);
      h = next_he(h);
    } while (h != h0);
  }

  // the unique clockwise walk is the outer face
  int outer = -1;
  for (size_t w = 0; w < walks.size(); ++w) {
    Frac area2(0);
    for (int h : walks[w]) area2 = area2 + cross(nodes[source(h)], nodes[target(h)]);
    if (area2.sign() < 0) {
      if (outer >= 0) fail(errc::internal, "two outer cells in face arrangement");
      outer = (int)w;
    }
  }
  if (outer < 0) fail(errc::internal, "no outer cell in face arrangement");

  std::vector<int> piece_of_walk(walks.size(), -1);
  for (size_t w = 0; w < walks.size(); ++w)
    if ((int)w != outer) piece_of_walk[w] = out.n_pieces++;

  int expect = 1 + (int)chords.size() + out.n_crossings;
  if (out.n_pieces != expect)
    fail(errc::internal, "piece count " + std::to_string(out.n_pieces) + " != 1+arcs+crossings " +
                             std::to_string(expect));

  for (int j = 0; j < 3; ++j)
    out.boundary_piece[j].assign(d.crossing_counts[fe[j]] + 1, -1);
  for (size_t ei = 0; ei < gedges.size(); ++ei) {
    const GraphEdge& e = gedges[ei];
    int f0 = piece_of_walk[face_of_he[2 * (int)ei]];
    int f1 = piece_of_walk[face_of_he[2 * (int)ei + 1]];
    if (e.boundary) {
      int inner = f0 >= 0 ? f0 : f1;
      if (f0 >= 0 && f1 >= 0) fail(errc::internal, "boundary segment with two inner pieces");
      out.boundary_piece[e.j][e.interval] = inner;
    } else {
      if (f0 < 0 || f1 < 0) fail(errc::internal, "chord segment touching the outer cell");
      out.chord_adjacencies.push_back({e.arc, f0, f1});
    }
  }

  for (int c = 0; c < 3; ++c) {
    auto it = node_of.find(kCorner[c]);
    if (it == node_of.end()) fail(errc::internal, "corner node missing");
    for (int h : out_of[it->second]) {
      int p = piece_of_walk[face_of_he[h]];
      if (p >= 0) {
        if (out.corner_piece[c] >= 0 && out.corner_piece[c] != p)
          fail(errc::internal, "corner touches two pieces");
        out.corner_piece[c] = p;
      }
    }
    if (out.corner_piece[c] < 0) fail(errc::internal, "corner piece not found");
  }

  return out;
}

} // namespace trackcube
