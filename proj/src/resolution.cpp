#include "trackcube/resolution.hpp"

#include <algorithm>

namespace trackcube {

namespace {

void check_vertex_map(const SimplicialComplex2& k, const CubeComplex& x, const VertexMap& f) {
  if ((int)f.image.size() != k.V())
    fail(errc::input_error, "vertex map must cover every K-vertex");
  for (int v : f.image)
    if (v < 0 || v >= x.V()) fail(errc::input_error, "vertex map target out of range");
  // side flips around a face must pair up; holds for any genuine vertex map
  // and guards corrupted input
  for (int fc = 0; fc < k.T(); ++fc) {
    auto& t = k.faces[fc];
    BitVec parity = (x.vertices[f.image[t[0]]] ^ x.vertices[f.image[t[1]]]) ^
                    (x.vertices[f.image[t[1]]] ^ x.vertices[f.image[t[2]]]) ^
                    (x.vertices[f.image[t[0]]] ^ x.vertices[f.image[t[2]]]);
    if (parity.any()) fail(errc::parity_violation, "odd flip count around face " + k.face_name(fc));
  }
}

} // namespace

BitVec edge_walls(const CubeComplex& x, const SimplicialComplex2& k, int edge,
                  const VertexMap& f) {
  return x.vertices[f.image[k.edges[edge][0]]] ^ x.vertices[f.image[k.edges[edge][1]]];
}

std::vector<int> edge_crossing_order(const CubeComplex& x, const SimplicialComplex2& k,
                                     int edge, const VertexMap& f) {
  BitVec walls = edge_walls(x, k, edge, f);
  int u = f.image[k.edges[edge][0]];
  std::vector<int> nodes;
  walls.for_each([&](int p) { nodes.push_back(p); });

  // Kahn's algorithm over "p crossed before q" (p separates u from q),
  // smallest available pair id first
  std::vector<int> order;
  std::vector<char> placed(nodes.size(), 0);
  while (order.size() < nodes.size()) {
    int pick = -1;
    for (size_t i = 0; i < nodes.size() && pick < 0; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (size_t j = 0; j < nodes.size() && ready; ++j)
        if (!placed[j] && j != i && less_from(x, u, nodes[j], nodes[i])) ready = false;
      if (ready) pick = (int)i;
    }
    if (pick < 0) fail(errc::internal, "cycle in edge crossing order");
    placed[pick] = 1;
    order.push_back(nodes[pick]);
  }
  return order;
}

Pullback pullback_pattern(const SimplicialComplex2& k, const CubeComplex& x,
                          const VertexMap& f) {
  if (k.h1 != 0) fail(errc::precondition_h1, "pullback needs H^1(K;Z/2)=0");
  check_vertex_map(k, x, f);

  Pullback pb;
  pb.edge_order.resize(k.E());
  std::vector<int> counts(k.E(), 0);
  std::vector<std::vector<int>> index_of_pair(k.E()); // edge -> pair -> 1-based index
  for (int e = 0; e < k.E(); ++e) {
    pb.edge_order[e] = edge_crossing_order(x, k, e, f);
    counts[e] = (int)pb.edge_order[e].size();
    index_of_pair[e].assign(x.n_pairs(), 0);
    for (int i = 0; i < counts[e]; ++i) index_of_pair[e][pb.edge_order[e][i]] = i + 1;
  }

  std::vector<Arc> arcs;
  for (int fc = 0; fc < k.T(); ++fc) {
    auto& fe = k.face_edge_ids[fc];
    for (int p = 0; p < x.n_pairs(); ++p) {
      int on[3], cnt = 0;
      for (int j = 0; j < 3; ++j)
        if (index_of_pair[fe[j]][p] > 0) on[cnt++] = j;
      if (cnt == 0) continue;
      if (cnt != 2) fail(errc::parity_violation, "hyperplane flips one edge of a face");
      Arc a;
      a.face = fc;
      a.a = {fe[on[0]], index_of_pair[fe[on[0]]][p]};
      a.b = {fe[on[1]], index_of_pair[fe[on[1]]][p]};
      arcs.push_back(a);
    }
  }

  Drawing d = validate_drawing(k, counts, std::move(arcs), {.allow_empty = true});
  pb.empty = d.empty();
  if (pb.empty) {
    pb.pattern.drawing = std::move(d);
    return pb;
  }
  pb.pattern = make_pattern(k, std::move(d), std::nullopt, true);
  pb.track_hyperplane.resize(pb.pattern.n_tracks());
  for (int t = 0; t < pb.pattern.n_tracks(); ++t) {
    const Arc& a = pb.pattern.drawing.arcs[pb.pattern.tracks[t][0]];
    pb.track_hyperplane[t] = pb.edge_order[a.a.edge][a.a.index - 1];
  }
  return pb;
}

Resolution resolve(const SimplicialComplex2& k, const CubeComplex& x, const VertexMap& f) {
  Resolution r;
  r.pull = pullback_pattern(k, x, f);
  const Pattern& p = r.pull.pattern;

  r.rd = regions(k, p);
  r.fh = fine_halfspaces(k, p, r.rd);
  r.ch = coarse_halfspaces(k, p, r.rd, r.fh);
  r.fine_pocset = pocset_from_fine(k, p, r.rd, r.fh);
  r.coarse_pocset = pocset_from_coarse(k, p, r.rd, r.fh, r.ch);
  r.fine_dual = dual_complex(r.fine_pocset.pocset, kDefaultVertexCap,
                             principal_ultrafilter(r.fh, 0));
  BitVec coarse_seed(r.coarse_pocset.classes()); // side 0 holds K-vertex 0
  r.coarse_dual = dual_complex(r.coarse_pocset.pocset, kDefaultVertexCap, coarse_seed);

  // halfspace images: walking over a crossing point of track t flips exactly
  // its hyperplane, so each crossed edge orients one side of t
  int nt = p.n_tracks();
  r.track_side_image.assign(nt, {-1, -1});
  for (int t = 0; t < nt; ++t) {
    int q = r.pull.track_hyperplane[t];
    for (int ai : p.tracks[t]) {
      const Arc& a = p.drawing.arcs[ai];
      for (const ArcEnd* end : {&a.a, &a.b}) {
        if (r.pull.edge_order[end->edge][end->index - 1] != q)
          fail(errc::internal, "track meets a crossing point of another hyperplane");
        for (int side_of_edge = 0; side_of_edge < 2; ++side_of_edge) {
          int kv = k.edges[end->edge][side_of_edge];
          int region = r.rd.vertex_region[kv];
          int side = r.fh.side_regions[t][0].get(region) ? 0 : 1;
          int value = 2 * q + (x.vertices[f.image[kv]].get(q) ? 1 : 0);
          int& slot = r.track_side_image[t][side];
          if (slot < 0)
            slot = value;
          else if (slot != value)
            r.failures.push_back("halfspace image of track " + std::to_string(t) +
                                 " is inconsistent");
        }
      }
    }
    if (r.track_side_image[t][0] < 0 || r.track_side_image[t][1] < 0)
      r.failures.push_back("track " + std::to_string(t) + " orients no side");
    else if (r.track_side_image[t][0] == r.track_side_image[t][1])
      r.failures.push_back("track " + std::to_string(t) + " maps both sides to one halfspace");
  }

  // constant orientation for hyperplanes missing from the image
  r.common_side.assign(x.n_pairs(), -1);
  std::vector<char> in_image(x.n_pairs(), 0);
  for (int q : r.pull.track_hyperplane) in_image[q] = 1;
  for (int q = 0; q < x.n_pairs(); ++q) {
    if (in_image[q]) continue;
    int bit = k.V() ? (x.vertices[f.image[0]].get(q) ? 1 : 0) : 0;
    for (int v = 1; v < k.V(); ++v)
      if ((x.vertices[f.image[v]].get(q) ? 1 : 0) != bit)
        r.failures.push_back("hyperplane outside the image separates two images");
    r.common_side[q] = 2 * q + bit;
  }

  // F on fine-dual vertices: minimal preimage evaluation
  std::vector<std::vector<int>> preimage(x.n_pairs());
  for (int t = 0; t < nt; ++t) preimage[r.pull.track_hyperplane[t]].push_back(t);
  r.F.assign(r.fine_dual.V(), -1);
  for (int xv = 0; xv < r.fine_dual.V(); ++xv) {
    const BitVec& bits = r.fine_dual.vertices[xv];
    BitVec img(x.n_pairs());
    for (int q = 0; q < x.n_pairs(); ++q) {
      if (!in_image[q]) {
        img.set(q, Pocset::side_of(r.common_side[q]));
        continue;
      }
      // minimal halfspaces at this vertex among the preimage tracks
      int chosen = -1;
      bool agree = true;
      for (int t : preimage[q]) {
        int el = 2 * t + (bits.get(t) ? 1 : 0);
        bool minimal = true;
        for (int s : preimage[q]) {
          if (s == t) continue;
          if (r.fine_pocset.pocset.less(2 * s + (bits.get(s) ? 1 : 0), el)) minimal = false;
        }
        if (!minimal) continue;
        int value = r.track_side_image[t][bits.get(t) ? 1 : 0];
        if (chosen < 0)
          chosen = value;
        else if (chosen != value)
          agree = false;
      }
      if (chosen < 0 || !agree) {
        r.failures.push_back("minimal preimage evaluation failed at fine vertex " +
                             std::to_string(xv));
        chosen = chosen < 0 ? 2 * q : chosen;
      }
      img.set(q, Pocset::side_of(chosen));
    }
    int target = x.index_of(img);
    if (target < 0)
      r.failures.push_back("NotAnUltrafilter: image of fine vertex " + std::to_string(xv));
    r.F[xv] = target;
  }

  // Phi: coarse vertices pull back along phi
  r.Phi.assign(r.coarse_dual.V(), -1);
  for (int cv = 0; cv < r.coarse_dual.V(); ++cv) {
    const BitVec& cb = r.coarse_dual.vertices[cv];
    BitVec fine(nt);
    bool ok = true;
    for (int t = 0; t < nt; ++t) {
      int c = r.coarse_pocset.track_class[t];
      if (c < 0) {
        r.failures.push_back("inessential track " + std::to_string(t) +
                             " outside the coarse pocset");
        ok = false;
        continue;
      }
      fine.set(t, cb.get(c) ^ r.coarse_pocset.track_flip[t]);
    }
    int idx = ok ? r.fine_dual.index_of(fine) : -1;
    if (idx < 0 && ok)
      r.failures.push_back("phi pullback of coarse vertex " + std::to_string(cv) +
                           " is not an ultrafilter");
    r.Phi[cv] = idx;
  }
  return r;
}

ResolutionCheck check_resolution(const SimplicialComplex2& k, const CubeComplex& x,
                                 const VertexMap& f, const Resolution& r, long long budget) {
  (void)f;
  ResolutionCheck out;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    out.items.push_back({name, pass, detail});
  };

  add("construction", r.failures.empty(),
      r.failures.empty() ? "" : r.failures.front());

  // (a) minimal-preimage independence is recorded during construction
  bool indep = true;
  for (auto& s : r.failures)
    if (s.find("minimal preimage") != std::string::npos) indep = false;
  add("minimal_preimage_independence", indep);

  // (b) F maps edges to edges across the flipped hyperplane
  bool edges_ok = true;
  std::string edge_detail;
  for (auto& e : r.fine_dual.edges) {
    int fu = r.F[e.u], fv = r.F[e.v];
    if (fu < 0 || fv < 0) {
      edges_ok = false;
      break;
    }
    BitVec diff = x.vertices[fu] ^ x.vertices[fv];
    int q = r.pull.track_hyperplane[e.pair];
    if (diff.count() != 1 || !diff.get(q)) {
      edges_ok = false;
      edge_detail = "fine edge on track " + std::to_string(e.pair);
      break;
    }
  }
  add("edges_to_edges", edges_ok, edge_detail);

  // (c) dimension does not grow
  int dim_fine = dimension(r.fine_dual, budget);
  int dim_x = dimension(x, budget);
  add("dimension", dim_fine <= dim_x,
      std::to_string(dim_fine) + " vs " + std::to_string(dim_x));

  // (d) principality at dimension <= 2
  if (dim_x <= 2) {
    bool principal = r.fine_dual.V() == r.rd.n_regions();
    for (int reg = 0; principal && reg < r.rd.n_regions(); ++reg)
      if (r.fine_dual.index_of(principal_ultrafilter(r.fh, reg)) < 0) principal = false;
    add("principal_vertices", principal,
        std::to_string(r.fine_dual.V()) + " vertices, " + std::to_string(r.rd.n_regions()) +
            " regions");
  }

  // (e) crossing tracks map to crossing hyperplanes
  bool cross_ok = true;
  if (r.pull.pattern.n_tracks() > 1) {
    BitMatrix g = track_crossing_graph(k, r.pull.pattern);
    for (int s = 0; s < g.size() && cross_ok; ++s)
      for (int t = s + 1; t < g.size() && cross_ok; ++t) {
        if (!g.get(s, t)) continue;
        int qs = r.pull.track_hyperplane[s], qt = r.pull.track_hyperplane[t];
        if (qs == qt || !x.crossing_pairs.get(qs, qt)) cross_ok = false;
      }
  }
  add("crossing_consistency", cross_ok);

  // composing Phi and F stays inside X
  bool comp_ok = true;
  for (int cv = 0; cv < r.coarse_dual.V(); ++cv)
    if (r.Phi[cv] < 0 || r.F[r.Phi[cv]] < 0) comp_ok = false;
  add("coarse_composition", comp_ok);

  return out;
}

} // namespace trackcube
