#include "trackcube/dual.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace trackcube {

bool is_ultrafilter(const Pocset& p, const BitVec& bits) {
  int n = p.pairs();
  for (int a = 0; a < n; ++a) {
    int ea = 2 * a + (bits.get(a) ? 1 : 0);
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int eb = 2 * b + (bits.get(b) ? 1 : 0);
      // an element of U below the complement of another breaks upward closure
      if (p.less(ea, Pocset::star(eb))) return false;
    }
  }
  return true;
}

BitVec greedy_seed(const Pocset& p) {
  int n = p.pairs();
  BitVec bits(n);
  std::vector<char> remaining(n, 1);
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int e = 0; e < 2 * n && pick < 0; ++e) {
      if (!remaining[Pocset::pair_of(e)]) continue;
      bool minimal = true;
      for (int f = 0; f < 2 * n && minimal; ++f)
        if (remaining[Pocset::pair_of(f)] && p.less(f, e)) minimal = false;
      if (minimal) pick = e;
    }
    if (pick < 0) fail(errc::no_seed, "no minimal element; relation has a cycle");
    // orient the pair away from the minimal element
    bits.set(Pocset::pair_of(pick), Pocset::side_of(Pocset::star(pick)));
    remaining[Pocset::pair_of(pick)] = 0;
  }
  if (!is_ultrafilter(p, bits)) fail(errc::no_seed, "greedy completion is inconsistent");
  return bits;
}

CubeComplex dual_complex(const Pocset& p, int vertex_cap, std::optional<BitVec> seed) {
  CubeComplex x;
  x.pocset = p;
  int n = p.pairs();

  BitVec start = seed ? *seed : greedy_seed(p);
  if ((int)start.size() != n) fail(errc::input_error, "seed width mismatch");
  if (!is_ultrafilter(p, start)) fail(errc::no_seed, "seed is not an ultrafilter");

  x.vertices.push_back(start);
  x.vertex_index[start] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    BitVec bits = x.vertices[u];
    for (int pr = 0; pr < n; ++pr) {
      int e = 2 * pr + (bits.get(pr) ? 1 : 0);
      bool minimal = true;
      for (int q = 0; q < n && minimal; ++q) {
        if (q == pr) continue;
        if (p.less(2 * q + (bits.get(q) ? 1 : 0), e)) minimal = false;
      }
      if (!minimal) continue;
      BitVec nb = bits;
      nb.flip(pr);
      auto it = x.vertex_index.find(nb);
      int v;
      if (it == x.vertex_index.end()) {
        if ((int)x.vertices.size() >= vertex_cap)
          fail(errc::cap_exceeded,
               "dual complex exceeds vertex cap " + std::to_string(vertex_cap));
        v = (int)x.vertices.size();
        x.vertices.push_back(nb);
        x.vertex_index[nb] = v;
        queue.push_back(v);
      } else {
        v = it->second;
      }
      if (u < v) x.edges.push_back({u, v, pr});
    }
  }

  x.adj.assign(x.V(), {});
  x.carrier.assign(n, BitVec(x.V()));
  for (auto& e : x.edges) {
    x.adj[e.u].push_back({e.v, e.pair});
    x.adj[e.v].push_back({e.u, e.pair});
    x.carrier[e.pair].set(e.u);
    x.carrier[e.pair].set(e.v);
  }
  x.side_vertices0.assign(n, BitVec(x.V()));
  for (int v = 0; v < x.V(); ++v)
    for (int pr = 0; pr < n; ++pr)
      if (!x.vertices[v].get(pr)) x.side_vertices0[pr].set(v);

  x.crossing_pairs = BitMatrix(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const BitVec& a0 = x.side_vertices0[a];
      const BitVec& b0 = x.side_vertices0[b];
      BitVec a1 = ~a0, b1 = ~b0;
      if (a0.intersects(b0) && a0.intersects(b1) && a1.intersects(b0) && a1.intersects(b1)) {
        x.crossing_pairs.set(a, b);
        x.crossing_pairs.set(b, a);
      }
    }
  return x;
}

int median(const CubeComplex& x, int a, int b, int c) {
  const BitVec &va = x.vertices[a], &vb = x.vertices[b], &vc = x.vertices[c];
  BitVec m = (va & vb) | ((va ^ vb) & vc);
  int idx = x.index_of(m);
  if (idx < 0) fail(errc::median_missing, "majority assignment is not a vertex");
  return idx;
}

Interval interval(const CubeComplex& x, int a, int b) {
  Interval iv;
  iv.x = a;
  iv.y = b;
  iv.walls = x.vertices[a] ^ x.vertices[b];
  for (int v = 0; v < x.V(); ++v) {
    BitVec d = (x.vertices[v] ^ x.vertices[a]) & (x.vertices[v] ^ x.vertices[b]);
    if (d.none()) iv.members.push_back(v);
  }
  return iv;
}

bool crossing(const CubeComplex& x, int p, int q) {
  if (p == q) fail(errc::same_pair, "crossing needs distinct hyperplanes");
  return x.crossing_pairs.get(p, q);
}

bool adjacent(const CubeComplex& x, int p, int q) {
  if (p == q) fail(errc::same_pair, "adjacency needs distinct hyperplanes");
  if (x.crossing_pairs.get(p, q)) return false;
  return x.carrier[p].intersects(x.carrier[q]);
}

bool separated_by(const CubeComplex& x, int v, int p, int q) {
  if (p == q) fail(errc::same_pair, "separation needs distinct hyperplanes");
  int a = x.element_at(v, p), b = x.element_at(v, q);
  return !x.pocset.comparable(a, b);
}

bool less_from(const CubeComplex& x, int v, int p, int q) {
  if (p == q) fail(errc::same_pair, "separation needs distinct hyperplanes");
  return x.pocset.less(x.element_at(v, p), x.element_at(v, q));
}

namespace {
// hyperplane g lies inside halfspace h (one of g's sides is below h)
bool hyperplane_in(const Pocset& p, int g_pair, int h_elem) {
  return p.less(2 * g_pair, h_elem) || p.less(2 * g_pair + 1, h_elem);
}
} // namespace

bool less_from_hyperplane(const CubeComplex& x, int g, int p, int q) {
  if (g == p || g == q || p == q) fail(errc::same_pair, "separation needs distinct hyperplanes");
  for (int s = 0; s < 2; ++s) {
    int h = 2 * p + s;
    if (hyperplane_in(x.pocset, g, h) && hyperplane_in(x.pocset, q, Pocset::star(h))) return true;
  }
  return false;
}

bool facing_triple(const CubeComplex& x, int p, int q, int r) {
  if (p == q || q == r || p == r) fail(errc::same_pair, "facing triple needs distinct hyperplanes");
  if (x.crossing_pairs.get(p, q) || x.crossing_pairs.get(q, r) || x.crossing_pairs.get(p, r))
    return false;
  return !less_from_hyperplane(x, q, p, r) && !less_from_hyperplane(x, p, q, r) &&
         !less_from_hyperplane(x, p, r, q);
}

int dimension(const CubeComplex& x, long long budget) {
  if (x.n_pairs() == 0) return 0;
  return max_clique(x.crossing_pairs, budget);
}

Pocset read_off_pocset(const CubeComplex& x) {
  int n = x.n_pairs();
  Pocset p;
  p.names = x.pocset.names;
  p.lt = BitMatrix(2 * n);
  auto side = [&](int e) {
    return Pocset::side_of(e) ? ~x.side_vertices0[Pocset::pair_of(e)]
                              : x.side_vertices0[Pocset::pair_of(e)];
  };
  for (int a = 0; a < 2 * n; ++a) {
    BitVec va = side(a);
    for (int b = 0; b < 2 * n; ++b) {
      if (a == b || Pocset::pair_of(a) == Pocset::pair_of(b)) continue;
      BitVec vb = side(b);
      if (va.subset_of(vb) && va != vb) p.lt.set(a, b);
    }
  }
  return p;
}

std::vector<int> coarse_vertex_images(const CubeComplex& coarse, const CoarsePocset& cp,
                                      const SimplicialComplex2& k) {
  std::vector<int> img(k.V(), -1);
  int nc = cp.classes();
  for (int v = 0; v < k.V(); ++v) {
    BitVec bits(nc);
    for (int c = 0; c < nc; ++c)
      if (cp.side_vertices[c][1].get(v)) bits.set(c);
    int idx = coarse.index_of(bits);
    if (idx < 0) fail(errc::internal, "vertex image missing from coarse dual");
    img[v] = idx;
  }
  return img;
}

std::vector<std::array<int, 3>> triangle_images(const CubeComplex& coarse,
                                                const CoarsePocset& cp,
                                                const SimplicialComplex2& k) {
  auto img = coarse_vertex_images(coarse, cp, k);
  std::vector<std::array<int, 3>> out(k.T());
  for (int f = 0; f < k.T(); ++f)
    out[f] = {img[k.faces[f][0]], img[k.faces[f][1]], img[k.faces[f][2]]};
  return out;
}

std::string export_json(const CubeComplex& x) {
  std::ostringstream os;
  os << "{\n  \"hyperplanes\": [";
  for (int p = 0; p < x.n_pairs(); ++p) {
    if (p) os << ", ";
    os << "[\"" << x.pocset.names[2 * p] << "\", \"" << x.pocset.names[2 * p + 1] << "\"]";
  }
  os << "],\n  \"vertices\": [";
  for (int v = 0; v < x.V(); ++v) {
    if (v) os << ", ";
    os << '"';
    for (int p = 0; p < x.n_pairs(); ++p) os << (x.vertices[v].get(p) ? '1' : '0');
    os << '"';
  }
  os << "],\n  \"edges\": [";
  for (size_t e = 0; e < x.edges.size(); ++e) {
    if (e) os << ", ";
    os << '[' << x.edges[e].u << ", " << x.edges[e].v << ']';
  }
  os << "]\n}\n";
  return os.str();
}

std::string export_dot(const CubeComplex& x) {
  std::ostringstream os;
  os << "graph dual {\n";
  for (int v = 0; v < x.V(); ++v) {
    os << "  v" << v << " [label=\"";
    for (int p = 0; p < x.n_pairs(); ++p) os << (x.vertices[v].get(p) ? '1' : '0');
    os << "\"];\n";
  }
  for (auto& e : x.edges)
    os << "  v" << e.u << " -- v" << e.v << " [label=\"" << x.pocset.names[2 * e.pair]
       << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace trackcube
