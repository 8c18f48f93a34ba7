#include "trackcube/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "trackcube/gf2.hpp"

namespace trackcube {

namespace {

// gappy ascending ids assigned to positions by a random permutation
RawComplex relabel(int n_vertices, const std::vector<std::array<int, 3>>& faces, Rng& rng) {
  std::vector<long long> ids(n_vertices);
  long long cur = (long long)rng.below(5);
  for (int i = 0; i < n_vertices; ++i) {
    ids[i] = cur;
    cur += 1 + (long long)rng.below(3);
  }
  std::vector<int> perm(n_vertices);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n_vertices - 1; i > 0; --i)
    std::swap(perm[i], perm[(int)rng.below((uint64_t)i + 1)]);

  RawComplex raw;
  raw.vertices.assign(ids.begin(), ids.end());
  std::set<std::array<long long, 2>> edges;
  for (auto& f : faces) {
    std::array<long long, 3> t{ids[perm[f[0]]], ids[perm[f[1]]], ids[perm[f[2]]]};
    raw.faces.push_back(t);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        edges.insert({std::min(t[a], t[b]), std::max(t[a], t[b])});
  }
  for (auto& e : edges) raw.edges.push_back(e);
  return raw;
}

void triangulate(int lo, int hi, std::vector<std::array<int, 3>>& faces, Rng& rng) {
  if (hi - lo < 2) return;
  int k = lo + 1 + (int)rng.below((uint64_t)(hi - lo - 1));
  faces.push_back({lo, k, hi});
  triangulate(lo, k, faces, rng);
  triangulate(k, hi, faces, rng);
}

} // namespace

SimplicialComplex2 gen_disk(int n_faces, Rng& rng) {
  if (n_faces < 1) fail(errc::input_error, "disk needs at least one face");
  int m = n_faces + 2;
  std::vector<std::array<int, 3>> faces;
  triangulate(0, m - 1, faces, rng);
  return validate_complex(relabel(m, faces, rng));
}

SimplicialComplex2 gen_sphere(int rim, Rng& rng) {
  if (rim < 3) fail(errc::input_error, "sphere rim needs length >= 3");
  std::vector<std::array<int, 3>> faces;
  int north = rim, south = rim + 1;
  for (int i = 0; i < rim; ++i) {
    faces.push_back({north, i, (i + 1) % rim});
    faces.push_back({south, i, (i + 1) % rim});
  }
  return validate_complex(relabel(rim + 2, faces, rng));
}

Pocset gen_pocset(int n_pairs, int relation_attempts, Rng& rng) {
  std::vector<std::string> names;
  for (int p = 0; p < n_pairs; ++p) {
    names.push_back("h" + std::to_string(p) + "+");
    names.push_back("h" + std::to_string(p) + "-");
  }
  std::vector<std::pair<int, int>> rels;
  Pocset current = make_pocset(names, rels);
  for (int i = 0; i < relation_attempts; ++i) {
    int a = (int)rng.below((uint64_t)(2 * n_pairs));
    int b = (int)rng.below((uint64_t)(2 * n_pairs));
    if (Pocset::pair_of(a) == Pocset::pair_of(b)) continue;
    rels.push_back({a, b});
    try {
      current = make_pocset(names, rels);
    } catch (const Error&) {
      rels.pop_back();
    }
  }
  return current;
}

Pocset gen_width2_pocset(Rng& rng) {
  switch (rng.below(5)) {
    case 0: { // nested chain
      int n = rng.range(1, 4);
      std::vector<std::string> names;
      std::vector<std::pair<int, int>> rels;
      for (int p = 0; p < n; ++p) {
        names.push_back("h" + std::to_string(p) + "+");
        names.push_back("h" + std::to_string(p) + "-");
        if (p) rels.push_back({2 * (p - 1), 2 * p});
      }
      return make_pocset(names, rels);
    }
    case 1: { // independent square
      std::vector<std::string> names{"h0+", "h0-", "h1+", "h1-"};
      return make_pocset(names, {});
    }
    default: {
      // fine pocset of a random 2-pattern
      for (int attempt = 0; attempt < 50; ++attempt) {
        auto k = gen_disk(rng.range(2, 6), rng);
        GenPatternOptions opts;
        opts.max_tracks = rng.range(2, 5);
        opts.attempts = 50;
        try {
          Pattern p = gen_pattern_direct(k, opts, rng);
          auto rd = regions(k, p);
          auto fh = fine_halfspaces(k, p, rd);
          return pocset_from_fine(k, p, rd, fh).pocset;
        } catch (const Error&) {
          continue;
        }
      }
      // fall back to a chain
      return make_pocset({"h0+", "h0-", "h1+", "h1-"}, {{0, 2}});
    }
  }
}

Pattern gen_pattern_direct(const SimplicialComplex2& k, const GenPatternOptions& opts,
                           Rng& rng) {
  for (int attempt = 0; attempt < opts.attempts; ++attempt) {
    std::vector<int> counts(k.E(), 0);
    for (int e = 0; e < k.E(); ++e)
      counts[e] = rng.chance(1, 2) ? 0 : rng.range(1, opts.max_count);

    // face parity repair: find a 0/1 increment per edge so every face has an
    // even number of crossing points (solvable: no mod-2 2-cycles on our
    // complexes' face-edge incidence)
    std::vector<BitVec> rows;
    BitVec rhs(k.T());
    for (int f = 0; f < k.T(); ++f) {
      BitVec row(k.E());
      int sum = 0;
      for (int e : k.face_edge_ids[f]) {
        row.set(e);
        sum += counts[e];
      }
      rows.push_back(row);
      rhs.set(f, sum & 1);
    }
    auto inc = gf2_solve(rows, rhs, k.E());
    if (!inc) continue;
    for (int e = 0; e < k.E(); ++e)
      if (inc->get(e)) ++counts[e];

    // matching feasibility: no edge of a face may hold more points than the
    // other two combined; decrementing by 2 preserves all parities
    for (bool changed = true; changed;) {
      changed = false;
      for (int f = 0; f < k.T(); ++f) {
        auto& fe = k.face_edge_ids[f];
        for (int j = 0; j < 3; ++j) {
          int others = counts[fe[(j + 1) % 3]] + counts[fe[(j + 2) % 3]];
          while (counts[fe[j]] > others) {
            counts[fe[j]] -= 2;
            changed = true;
          }
        }
      }
    }

    long long total = 0;
    for (int e = 0; e < k.E(); ++e) total += counts[e];
    if (total == 0) continue;

    // per-face random matching of boundary points, never pairing one edge
    // with itself: draw from the largest pile and a random other pile
    std::vector<Arc> arcs;
    bool matching_ok = true;
    for (int f = 0; f < k.T() && matching_ok; ++f) {
      auto& fe = k.face_edge_ids[f];
      std::array<std::vector<int>, 3> pile;
      for (int j = 0; j < 3; ++j) {
        pile[j].resize(counts[fe[j]]);
        std::iota(pile[j].begin(), pile[j].end(), 1);
        for (int i = (int)pile[j].size() - 1; i > 0; --i)
          std::swap(pile[j][i], pile[j][(int)rng.below((uint64_t)i + 1)]);
      }
      while (true) {
        int order[3] = {0, 1, 2};
        std::sort(order, order + 3,
                  [&](int a, int b) { return pile[a].size() > pile[b].size(); });
        if (pile[order[0]].empty()) break;
        int second;
        if (!pile[order[2]].empty() && pile[order[0]].size() == pile[order[1]].size() &&
            rng.chance(1, 2))
          second = order[2];
        else
          second = order[1];
        if (pile[second].empty()) {
          matching_ok = false; // should not happen after the repair
          break;
        }
        Arc a;
        a.face = f;
        a.a = {fe[order[0]], pile[order[0]].back()};
        a.b = {fe[second], pile[second].back()};
        pile[order[0]].pop_back();
        pile[second].pop_back();
        if (a.b < a.a) std::swap(a.a, a.b);
        arcs.push_back(a);
      }
    }
    if (!matching_ok) continue;

    try {
      Drawing d = validate_drawing(k, counts, std::move(arcs), {});
      Pattern p = make_pattern(k, std::move(d), std::nullopt, true);
      if (p.n_tracks() > opts.max_tracks) continue;
      if (max_pairwise_crossing(k, p) > opts.max_width) continue;
      return p;
    } catch (const Error&) {
      continue;
    }
  }
  fail(errc::rejection_budget_exceeded, "no valid pattern found within the attempt budget");
}

Drawing gen_generalized_drawing(const SimplicialComplex2& k, int max_count, Rng& rng) {
  if (!k.boundary_edges.empty())
    fail(errc::input_error, "generalized drawings are generated on closed complexes");
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> counts(k.E(), 0);
    for (int e = 0; e < k.E(); ++e)
      counts[e] = rng.chance(1, 2) ? 0 : rng.range(1, max_count);
    std::vector<BitVec> rows;
    BitVec rhs(k.T());
    for (int f = 0; f < k.T(); ++f) {
      BitVec row(k.E());
      int sum = 0;
      for (int e : k.face_edge_ids[f]) {
        row.set(e);
        sum += counts[e];
      }
      rows.push_back(row);
      rhs.set(f, sum & 1);
    }
    auto inc = gf2_solve(rows, rhs, k.E());
    if (!inc) continue;
    for (int e = 0; e < k.E(); ++e)
      if (inc->get(e)) ++counts[e];

    std::vector<Arc> arcs;
    for (int f = 0; f < k.T(); ++f) {
      auto& fe = k.face_edge_ids[f];
      std::vector<ArcEnd> points;
      for (int j = 0; j < 3; ++j)
        for (int i = 1; i <= counts[fe[j]]; ++i) points.push_back({fe[j], i});
      for (int i = (int)points.size() - 1; i > 0; --i)
        std::swap(points[i], points[(int)rng.below((uint64_t)i + 1)]);
      // favour same-edge partners a little so pushes happen
      while (!points.empty()) {
        ArcEnd first = points.back();
        points.pop_back();
        int partner = -1;
        if (rng.chance(2, 5)) {
          for (size_t i = 0; i < points.size(); ++i)
            if (points[i].edge == first.edge) {
              partner = (int)i;
              break;
            }
        }
        if (partner < 0) partner = (int)rng.below((uint64_t)points.size());
        Arc a;
        a.face = f;
        a.a = first;
        a.b = points[partner];
        points.erase(points.begin() + partner);
        if (a.b < a.a) std::swap(a.a, a.b);
        arcs.push_back(a);
      }
    }
    long long total = 0;
    for (int e = 0; e < k.E(); ++e) total += counts[e];
    if (total == 0) continue;
    return validate_drawing(k, counts, std::move(arcs), {.generalized = true});
  }
  fail(errc::rejection_budget_exceeded, "no generalized drawing found");
}

VertexMap gen_vertex_map(const SimplicialComplex2& k, const CubeComplex& x, Rng& rng) {
  VertexMap f;
  f.image.resize(k.V());
  for (int v = 0; v < k.V(); ++v) f.image[v] = (int)rng.below((uint64_t)x.V());
  return f;
}

RawComplex to_raw(const SimplicialComplex2& k) {
  RawComplex raw;
  raw.vertices = k.vertex_ids;
  for (auto& e : k.edges) raw.edges.push_back({k.vertex_ids[e[0]], k.vertex_ids[e[1]]});
  for (auto& f : k.faces)
    raw.faces.push_back({k.vertex_ids[f[0]], k.vertex_ids[f[1]], k.vertex_ids[f[2]]});
  return raw;
}

} // namespace trackcube
