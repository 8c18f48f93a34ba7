#include "trackcube/pocset.hpp"

#include <algorithm>
#include <map>

namespace trackcube {

namespace {

void check_axioms(const Pocset& p) {
  int n = p.elements();
  for (int a = 0; a < n; ++a) {
    if (p.lt.get(a, a)) fail(errc::not_antisymmetric, "cycle through " + p.names[a]);
    if (p.lt.get(a, Pocset::star(a)) || p.lt.get(Pocset::star(a), a))
      fail(errc::complement_comparable, p.names[a] + " comparable with its complement");
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (p.lt.get(a, b) && p.lt.get(b, a))
        fail(errc::not_antisymmetric, p.names[a] + " and " + p.names[b] + " in a cycle");
      if (p.lt.get(a, b) != p.lt.get(Pocset::star(b), Pocset::star(a)))
        fail(errc::involution_not_reversing,
             "relation " + p.names[a] + " <= " + p.names[b] + " has no mirror");
    }
  }
}

} // namespace

Pocset make_pocset(std::vector<std::string> names,
                   const std::vector<std::pair<int, int>>& strict_relations) {
  Pocset p;
  p.names = std::move(names);
  int n = p.elements();
  if (n % 2) fail(errc::input_error, "odd number of pocset elements");
  p.lt = BitMatrix(n);
  for (auto& [a, b] : strict_relations) {
    if (a < 0 || a >= n || b < 0 || b >= n) fail(errc::input_error, "relation out of range");
    if (a == b) continue;
    p.lt.set(a, b);
    p.lt.set(Pocset::star(b), Pocset::star(a));
  }
  p.lt.transitive_close();
  check_axioms(p);
  return p;
}

Pocset validate_pocset(const RawPocset& raw) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (auto& pr : raw.pairs) {
    for (auto& name : pr) {
      if (index.count(name)) fail(errc::input_error, "element '" + name + "' listed twice");
      index[name] = (int)names.size();
      names.push_back(name);
    }
    if (pr[0] == pr[1]) fail(errc::input_error, "pair with equal sides '" + pr[0] + "'");
  }
  std::vector<std::pair<int, int>> rels;
  for (auto& r : raw.relations) {
    auto ia = index.find(r[0]), ib = index.find(r[1]);
    if (ia == index.end() || ib == index.end())
      fail(errc::input_error, "relation uses unknown element");
    rels.push_back({ia->second, ib->second});
  }
  return make_pocset(std::move(names), rels);
}

bool transverse(const Pocset& p, int pair_p, int pair_q) {
  if (pair_p == pair_q) fail(errc::same_pair, "transversality needs distinct pairs");
  int h = 2 * pair_p, k = 2 * pair_q;
  return !p.comparable(h, k) && !p.comparable(h, Pocset::star(k)) &&
         !p.comparable(Pocset::star(h), k) &&
         !p.comparable(Pocset::star(h), Pocset::star(k));
}

int width(const Pocset& p, long long budget) {
  int n = p.pairs();
  if (n == 0) return 0;
  BitMatrix g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (transverse(p, i, j)) {
        g.set(i, j);
        g.set(j, i);
      }
  return max_clique(g, budget);
}

FinePocset pocset_from_fine(const SimplicialComplex2& k, const Pattern& p,
                            const RegionDecomposition& rd, const FineHalfspaces& fh) {
  (void)k;
  FinePocset fp;
  fp.side_regions = fh.side_regions;
  fp.n_regions = rd.n_regions();
  int n = p.n_tracks();
  std::vector<std::string> names(2 * n);
  for (int t = 0; t < n; ++t) {
    names[2 * t] = "t" + std::to_string(t) + "+";
    names[2 * t + 1] = "t" + std::to_string(t) + "-";
  }
  fp.pocset.names = std::move(names);
  fp.pocset.lt = BitMatrix(2 * n);
  // region-set inclusion is already transitive; sets of distinct tracks are
  // never equal, so proper inclusion is plain subset here
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) {
      if (Pocset::pair_of(a) == Pocset::pair_of(b)) continue;
      auto& ra = fh.side_regions[Pocset::pair_of(a)][Pocset::side_of(a)];
      auto& rb = fh.side_regions[Pocset::pair_of(b)][Pocset::side_of(b)];
      if (ra.subset_of(rb)) fp.pocset.lt.set(a, b);
    }
  check_axioms(fp.pocset);
  return fp;
}

CoarsePocset pocset_from_coarse(const SimplicialComplex2& k, const Pattern& p,
                                const RegionDecomposition& rd, const FineHalfspaces& fh,
                                const CoarseHalfspaces& ch) {
  (void)rd;
  (void)fh;
  CoarsePocset cp;
  cp.inessential_tracks = ch.inessential_tracks;
  cp.class_tracks = parallelism_classes(ch);
  cp.track_class.assign(p.n_tracks(), -1);
  cp.track_flip.assign(p.n_tracks(), 0);

  int nc = (int)cp.class_tracks.size();
  cp.side_vertices.resize(nc);
  for (int c = 0; c < nc; ++c) {
    int t0 = cp.class_tracks[c][0];
    // class side 0 contains the smallest K-vertex
    int flip0 = ch.side_vertices[t0][0].get(0) ? 0 : 1;
    cp.side_vertices[c][0] = ch.side_vertices[t0][flip0];
    cp.side_vertices[c][1] = ch.side_vertices[t0][flip0 ^ 1];
    for (int t : cp.class_tracks[c]) {
      cp.track_class[t] = c;
      cp.track_flip[t] = ch.side_vertices[t][0] == cp.side_vertices[c][0] ? 0 : 1;
    }
  }

  std::vector<std::string> names(2 * nc);
  for (int c = 0; c < nc; ++c) {
    names[2 * c] = "c" + std::to_string(c) + "+";
    names[2 * c + 1] = "c" + std::to_string(c) + "-";
  }
  cp.pocset.names = std::move(names);
  cp.pocset.lt = BitMatrix(2 * nc);
  for (int a = 0; a < 2 * nc; ++a)
    for (int b = 0; b < 2 * nc; ++b) {
      if (a == b || Pocset::pair_of(a) == Pocset::pair_of(b)) continue;
      auto& va = cp.side_vertices[Pocset::pair_of(a)][Pocset::side_of(a)];
      auto& vb = cp.side_vertices[Pocset::pair_of(b)][Pocset::side_of(b)];
      if (va.subset_of(vb) && va != vb) cp.pocset.lt.set(a, b);
    }
  check_axioms(cp.pocset);
  (void)k;
  return cp;
}

} // namespace trackcube
