#include "trackcube/clique.hpp"

#include "trackcube/error.hpp"

namespace trackcube {

namespace {

struct Search {
  const BitMatrix& adj;
  long long budget;
  int best = 0;

  void expand(const BitVec& cand, int depth) {
    if (--budget < 0) fail(errc::instance_too_large, "clique search exceeded node budget");
    if (depth + cand.count() <= best) return;
    if (cand.none()) {
      if (depth > best) best = depth;
      return;
    }
    // pivot: candidate with most candidate-neighbours
    int pivot = -1, pivot_deg = -1;
    cand.for_each([&](int v) {
      int deg = (cand & adj.row(v)).count();
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    });
    // every maximum clique here uses the pivot or one of its non-neighbours
    BitVec rest = cand & ~adj.row(pivot);
    BitVec remaining = cand;
    rest.for_each([&](int v) {
      remaining.set(v, false);
      expand(remaining & adj.row(v), depth + 1);
    });
  }
};

} // namespace

int max_clique(const BitMatrix& adj, long long node_budget) {
  int n = adj.size();
  if (n == 0) return 0;
  BitVec all(n);
  for (int i = 0; i < n; ++i) all.set(i);
  Search s{adj, node_budget};
  s.expand(all, 0);
  return s.best;
}

} // namespace trackcube
