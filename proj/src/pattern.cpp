#include "trackcube/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trackcube {

Pattern make_pattern(const SimplicialComplex2& k, Drawing d,
                     const std::optional<std::vector<std::vector<int>>>& tracks,
                     bool check_tracks) {
  Pattern p;
  auto comps = split_into_pretracks(k, d);
  p.drawing = std::move(d);

  if (tracks) {
    // a legal grouping must equal the component partition
    std::vector<int> comp_of(p.drawing.arcs.size(), -1);
    for (size_t c = 0; c < comps.size(); ++c)
      for (int a : comps[c]) comp_of[a] = (int)c;
    std::vector<char> claimed(p.drawing.arcs.size(), 0);
    for (auto& tr : tracks.value()) {
      if (tr.empty()) fail(errc::input_error, "empty track in track list");
      std::set<int> want(tr.begin(), tr.end());
      for (int a : tr) {
        if (a < 0 || a >= (int)p.drawing.arcs.size())
          fail(errc::input_error, "track references arc " + std::to_string(a));
        if (claimed[a]) fail(errc::input_error, "arc " + std::to_string(a) + " in two tracks");
        claimed[a] = 1;
      }
      auto& comp = comps[comp_of[tr[0]]];
      if (std::set<int>(comp.begin(), comp.end()) != want)
        fail(errc::input_error,
             "track is not a connected component of the crossing-point graph");
    }
    for (size_t a = 0; a < p.drawing.arcs.size(); ++a)
      if (!claimed[a]) fail(errc::input_error, "arc " + std::to_string(a) + " not in any track");
  }

  p.tracks = std::move(comps);
  p.arc_track.assign(p.drawing.arcs.size(), -1);
  for (size_t t = 0; t < p.tracks.size(); ++t)
    for (int a : p.tracks[t]) p.arc_track[a] = (int)t;

  if (check_tracks)
    for (size_t t = 0; t < p.tracks.size(); ++t)
      if (!is_track(k, p.drawing, p.tracks[t]))
        fail(errc::input_error, "component " + std::to_string(t) + " is self-crossing");
  return p;
}

BitMatrix track_crossing_graph(const SimplicialComplex2& k, const Pattern& p) {
  BitMatrix g(p.n_tracks());
  for (int f = 0; f < k.T(); ++f) {
    auto& list = p.drawing.face_arcs[f];
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t j = i + 1; j < list.size(); ++j) {
        int s = p.arc_track[list[i]], t = p.arc_track[list[j]];
        if (s == t || g.get(s, t)) continue;
        if (arcs_cross(k, p.drawing, f, p.drawing.arcs[list[i]], p.drawing.arcs[list[j]])) {
          g.set(s, t);
          g.set(t, s);
        }
      }
  }
  return g;
}

int max_pairwise_crossing(const SimplicialComplex2& k, const Pattern& p, long long budget) {
  if (p.n_tracks() == 0) return 0;
  return max_clique(track_crossing_graph(k, p), budget);
}

bool is_d_pattern(const SimplicialComplex2& k, const Pattern& p, int d, long long budget) {
  return max_pairwise_crossing(k, p, budget) <= d;
}

RegionDecomposition regions(const SimplicialComplex2& k, const Pattern& p) {
  if (!k.pure) fail(errc::dangling_edge, "regions require a pure complex");
  RegionDecomposition rd;
  rd.face_arr.reserve(k.T());
  rd.piece_base.assign(k.T(), 0);
  int total_pieces = 0;
  for (int f = 0; f < k.T(); ++f) {
    rd.face_arr.push_back(arrange_face(k, p.drawing, f));
    rd.piece_base[f] = total_pieces;
    total_pieces += rd.face_arr[f].n_pieces;
  }

  // union-find over pieces plus one node per K-vertex
  int n_nodes = total_pieces + k.V();
  std::vector<int> parent(n_nodes);
  for (int i = 0; i < n_nodes; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  // interior-edge sub-segments lie in the complement and glue their pieces
  for (int e = 0; e < k.E(); ++e) {
    auto& fs = k.edge_faces[e];
    if (fs.size() < 2) continue;
    int c = p.drawing.crossing_counts[e];
    for (int m = 0; m <= c; ++m) {
      int first = -1;
      for (int f : fs) {
        int j = 0;
        while (k.face_edge_ids[f][j] != e) ++j;
        int piece = rd.piece_base[f] + rd.face_arr[f].boundary_piece[j][m];
        if (first < 0)
          first = piece;
        else
          join(first, piece);
      }
    }
  }
  // vertices lie in the complement and glue their corner pieces
  for (int f = 0; f < k.T(); ++f)
    for (int c = 0; c < 3; ++c)
      join(total_pieces + k.faces[f][c], rd.piece_base[f] + rd.face_arr[f].corner_piece[c]);

  // region ids by first occurrence, pieces before vertex nodes
  std::vector<int> region_of_node(n_nodes, -1);
  int next_region = 0;
  for (int i = 0; i < n_nodes; ++i) {
    int r = find(i);
    if (region_of_node[r] < 0) region_of_node[r] = next_region++;
    region_of_node[i] = region_of_node[r];
  }

  rd.regions.assign(next_region, Region{});
  for (auto& r : rd.regions) r.vertices = BitVec(k.V());
  rd.piece_region.resize(total_pieces);
  for (int f = 0; f < k.T(); ++f)
    for (int piece = 0; piece < rd.face_arr[f].n_pieces; ++piece) {
      int g = rd.piece_base[f] + piece;
      rd.piece_region[g] = region_of_node[g];
      rd.regions[region_of_node[g]].pieces.push_back({f, piece});
    }
  rd.vertex_region.resize(k.V());
  for (int v = 0; v < k.V(); ++v) {
    int r = region_of_node[total_pieces + v];
    rd.vertex_region[v] = r;
    rd.regions[r].vertices.set(v);
  }

  std::set<RegionAdjacency> adj;
  for (int f = 0; f < k.T(); ++f)
    for (auto& ca : rd.face_arr[f].chord_adjacencies) {
      int r1 = rd.region_of_piece(f, ca.p1);
      int r2 = rd.region_of_piece(f, ca.p2);
      if (r1 > r2) std::swap(r1, r2);
      adj.insert({r1, r2, p.arc_track[ca.arc]});
    }
  rd.adjacencies.assign(adj.begin(), adj.end());
  return rd;
}

FineHalfspaces fine_halfspaces(const SimplicialComplex2& k, const Pattern& p,
                               const RegionDecomposition& rd) {
  if (k.h1 != 0)
    fail(errc::precondition_h1,
         "fine halfspaces need H^1(K;Z/2)=0, got dimension " + std::to_string(k.h1));
  int R = rd.n_regions();
  FineHalfspaces fh;
  fh.side_regions.resize(p.n_tracks());

  std::vector<int> comp(R);
  std::vector<int> stack;
  for (int t = 0; t < p.n_tracks(); ++t) {
    std::fill(comp.begin(), comp.end(), -1);
    // flood over all adjacencies except those dual to track t
    std::vector<std::vector<int>> nbr(R);
    for (auto& a : rd.adjacencies) {
      if (a.track == t) continue;
      nbr[a.r1].push_back(a.r2);
      nbr[a.r2].push_back(a.r1);
    }
    int n_comp = 0;
    for (int r0 = 0; r0 < R; ++r0) {
      if (comp[r0] >= 0) continue;
      comp[r0] = n_comp;
      stack.assign(1, r0);
      while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int s : nbr[r])
          if (comp[s] < 0) {
            comp[s] = n_comp;
            stack.push_back(s);
          }
      }
      ++n_comp;
    }
    if (n_comp != 2)
      fail(errc::not_two_sided, "complement of track " + std::to_string(t) + " has " +
                                    std::to_string(n_comp) + " components");
    // region 0 defines side 0
    std::array<BitVec, 2> sides{BitVec(R), BitVec(R)};
    for (int r = 0; r < R; ++r) sides[comp[r] == comp[0] ? 0 : 1].set(r);
    fh.side_regions[t] = std::move(sides);
  }
  return fh;
}

CoarseHalfspaces coarse_halfspaces(const SimplicialComplex2& k, const Pattern& p,
                                   const RegionDecomposition& rd, const FineHalfspaces& fh) {
  CoarseHalfspaces ch;
  ch.side_vertices.resize(p.n_tracks());
  ch.essential.resize(p.n_tracks());
  for (int t = 0; t < p.n_tracks(); ++t) {
    for (int s = 0; s < 2; ++s) {
      BitVec verts(k.V());
      fh.side_regions[t][s].for_each(
          [&](int r) { verts = verts | rd.regions[r].vertices; });
      ch.side_vertices[t][s] = std::move(verts);
    }
    ch.essential[t] = ch.side_vertices[t][0].any() && ch.side_vertices[t][1].any();
    if (!ch.essential[t]) ch.inessential_tracks.push_back(t);
  }
  return ch;
}

std::vector<std::vector<int>> parallelism_classes(const CoarseHalfspaces& ch) {
  std::vector<std::vector<int>> classes;
  std::map<std::pair<BitVec, BitVec>, int> index; // unordered pair, min side first
  for (int t = 0; t < (int)ch.essential.size(); ++t) {
    if (!ch.essential[t]) continue;
    BitVec a = ch.side_vertices[t][0], b = ch.side_vertices[t][1];
    if (b < a) std::swap(a, b);
    auto key = std::make_pair(std::move(a), std::move(b));
    auto [it, fresh] = index.emplace(std::move(key), (int)classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(t);
  }
  return classes;
}

BitVec principal_ultrafilter(const FineHalfspaces& fh, int region) {
  int n = (int)fh.side_regions.size();
  BitVec u(n);
  for (int t = 0; t < n; ++t)
    if (fh.side_regions[t][1].get(region)) u.set(t);
  return u;
}

} // namespace trackcube
