#include "trackcube/campaign.hpp"

#include <chrono>

#include "trackcube/analysis.hpp"

namespace trackcube {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

Pattern generated_pattern(uint64_t seed, uint64_t index, int max_faces, int max_tracks,
                          SimplicialComplex2& k_out) {
  Rng rng = Rng::instance(seed, index);
  for (int round = 0; round < 50; ++round) {
    k_out = gen_disk(rng.range(1, max_faces), rng);
    GenPatternOptions opts;
    opts.max_tracks = max_tracks;
    try {
      return gen_pattern_direct(k_out, opts, rng);
    } catch (const Error& e) {
      if (e.code() != errc::rejection_budget_exceeded) throw;
    }
  }
  fail(errc::rejection_budget_exceeded, "no pattern after 50 complexes");
}

} // namespace

CampaignResult run_duality_campaign(uint64_t seed, int random_pocsets) {
  Timer timer;
  CampaignResult res;
  res.name = "duality";

  // n independent pairs -> n-cube
  for (int n = 1; n <= 10; ++n) {
    ++res.instances;
    std::vector<std::string> names;
    for (int p = 0; p < n; ++p) {
      names.push_back("h" + std::to_string(p) + "+");
      names.push_back("h" + std::to_string(p) + "-");
    }
    auto x = dual_complex(make_pocset(names, {}));
    long long want_v = 1LL << n;
    long long want_e = (long long)n << (n - 1);
    if (x.V() != want_v || (long long)x.edges.size() != want_e)
      res.record_failure(n, "cube of " + std::to_string(n) + " pairs has " +
                                std::to_string(x.V()) + " vertices");
  }
  // chain of n nested pairs -> path with n+1 vertices
  for (int n = 1; n <= 10; ++n) {
    ++res.instances;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> rels;
    for (int p = 0; p < n; ++p) {
      names.push_back("h" + std::to_string(p) + "+");
      names.push_back("h" + std::to_string(p) + "-");
      if (p) rels.push_back({2 * (p - 1), 2 * p});
    }
    auto x = dual_complex(make_pocset(names, rels));
    if (x.V() != n + 1 || (int)x.edges.size() != n)
      res.record_failure(n, "chain dual is not a path");
  }
  // read-off pocset equals the input pocset
  for (int i = 0; i < random_pocsets; ++i) {
    ++res.instances;
    Rng rng = Rng::instance(seed, 1000 + i);
    int n = rng.range(1, 12);
    Pocset p = gen_pocset(n, rng.range(0, 3 * n), rng);
    auto x = dual_complex(p);
    Pocset back = read_off_pocset(x);
    if (!(back.lt == p.lt)) res.record_failure(i, "read-off pocset differs");
    res.max_a = std::max(res.max_a, (long long)x.V());
  }
  res.seconds = timer.seconds();
  return res;
}

CampaignResult run_median_campaign(uint64_t seed, int patterns, int max_faces,
                                   int vertex_limit) {
  Timer timer;
  CampaignResult res;
  res.name = "median";
  for (int i = 0; i < patterns; ++i) {
    ++res.instances;
    SimplicialComplex2 k;
    Pattern p = generated_pattern(seed, i, max_faces, 10, k);
    try {
      auto rd = regions(k, p);
      auto fh = fine_halfspaces(k, p, rd);
      auto ch = coarse_halfspaces(k, p, rd, fh);
      auto fp = pocset_from_fine(k, p, rd, fh);
      auto cp = pocset_from_coarse(k, p, rd, fh, ch);
      for (const Pocset* ps : {&fp.pocset, &cp.pocset}) {
        auto x = dual_complex(*ps);
        if (x.V() > vertex_limit) continue;
        res.max_a = std::max(res.max_a, (long long)x.V());
        for (int a = 0; a < x.V(); ++a)
          for (int b = a; b < x.V(); ++b)
            for (int c = b; c < x.V(); ++c) (void)median(x, a, b, c);
      }
    } catch (const Error& e) {
      res.record_failure(i, e.what());
    }
  }
  res.seconds = timer.seconds();
  return res;
}

CampaignResult run_principality_campaign(uint64_t seed, int patterns, int max_faces,
                                         int max_tracks) {
  Timer timer;
  CampaignResult res;
  res.name = "principality";
  for (int i = 0; i < patterns; ++i) {
    ++res.instances;
    SimplicialComplex2 k;
    Pattern p = generated_pattern(seed, i, max_faces, max_tracks, k);
    try {
      auto rd = regions(k, p);
      auto fh = fine_halfspaces(k, p, rd);
      auto fp = pocset_from_fine(k, p, rd, fh);
      auto x = dual_complex(fp.pocset, kDefaultVertexCap, principal_ultrafilter(fh, 0));
      if (x.V() != rd.n_regions()) {
        res.record_failure(i, std::to_string(x.V()) + " vertices vs " +
                                  std::to_string(rd.n_regions()) + " regions");
        continue;
      }
      for (int r = 0; r < rd.n_regions(); ++r)
        if (x.index_of(principal_ultrafilter(fh, r)) < 0) {
          res.record_failure(i, "region " + std::to_string(r) + " not realized");
          break;
        }
      res.max_a = std::max(res.max_a, (long long)x.V());
    } catch (const Error& e) {
      res.record_failure(i, e.what());
    }
  }
  res.seconds = timer.seconds();
  return res;
}

CampaignResult run_interval_bounds_campaign(uint64_t seed, int patterns, int max_faces,
                                            int max_tracks) {
  Timer timer;
  CampaignResult res;
  res.name = "interval_bounds";
  for (int i = 0; i < patterns; ++i) {
    ++res.instances;
    SimplicialComplex2 k;
    Pattern p = generated_pattern(seed, i, max_faces, max_tracks, k);
    try {
      auto rep = check_parallelism_bound(k, p);
      res.max_a = std::max(res.max_a, (long long)rep.lemma1_max);
      res.max_b = std::max(res.max_b, (long long)rep.lemma2_max);
      for (auto& v : rep.violations) res.record_failure(i, v);
      if (!rep.trichotomy_gaps.empty())
        res.record_failure(i, "TrichotomyGap on hyperplane " +
                                  std::to_string(rep.trichotomy_gaps.front()));
      if (rep.lemma1_max > adjp_separation_bound(2))
        res.record_failure(i, "separation count above C(2)");
      if (rep.lemma2_max > 4) res.record_failure(i, "transfer count above 4");
    } catch (const Error& e) {
      res.record_failure(i, e.what());
    }
  }
  res.seconds = timer.seconds();
  return res;
}

CampaignResult run_resolution_campaign(uint64_t seed, int triples) {
  Timer timer;
  CampaignResult res;
  res.name = "resolution";
  for (int i = 0; i < triples; ++i) {
    ++res.instances;
    Rng rng = Rng::instance(seed, i);
    try {
      auto k = gen_disk(rng.range(1, 8), rng);
      auto x = dual_complex(gen_width2_pocset(rng));
      auto f = gen_vertex_map(k, x, rng);
      auto r = resolve(k, x, f);
      int dim_x = dimension(x);
      if (!r.pull.empty && max_pairwise_crossing(k, r.pull.pattern) > dim_x) {
        res.record_failure(i, "pullback exceeds target dimension");
        continue;
      }
      auto check = check_resolution(k, x, f, r);
      for (auto& item : check.items)
        if (!item.pass) res.record_failure(i, item.name + " " + item.detail);
      res.max_a = std::max(res.max_a, (long long)r.fine_dual.V());
    } catch (const Error& e) {
      res.record_failure(i, e.what());
    }
  }
  res.seconds = timer.seconds();
  return res;
}

CampaignResult run_normalize_campaign(uint64_t seed, int drawings) {
  Timer timer;
  CampaignResult res;
  res.name = "normalize";
  for (int i = 0; i < drawings; ++i) {
    ++res.instances;
    Rng rng = Rng::instance(seed, i);
    try {
      auto k = gen_sphere(rng.range(3, 8), rng);
      Drawing d = gen_generalized_drawing(k, 4, rng);
      long long before = d.total_crossings();

      // step manually to watch every move, then compare with the driver
      Drawing cur = d;
      int steps = 0;
      while (true) {
        int ai = innermost(k, cur);
        if (ai < 0) break;
        long long prev = cur.total_crossings();
        cur = push_move(k, cur, ai);
        if (cur.total_crossings() != prev - 2) {
          res.record_failure(i, "move changed crossing count by " +
                                    std::to_string(prev - cur.total_crossings()));
          break;
        }
        ++steps;
      }

      auto nr = normalize(k, d, true);
      if (nr.moves != steps) {
        res.record_failure(i, "driver took a different number of moves");
        continue;
      }
      long long after = nr.pattern.drawing.total_crossings();
      if ((before - after) != 2LL * nr.moves) {
        res.record_failure(i, "move count does not match crossing-count drop");
        continue;
      }
      if (!nr.emptied) {
        // the output must satisfy the strict axioms
        validate_drawing(k, nr.pattern.drawing.crossing_counts, nr.pattern.drawing.arcs, {});
      }
      for (size_t m = 1; m < nr.clique_numbers.size(); ++m)
        if (nr.clique_numbers[m] > nr.clique_numbers[m - 1]) {
          res.record_failure(i, "crossing clique number grew across a move");
          break;
        }
      res.max_a = std::max(res.max_a, (long long)nr.moves);
    } catch (const Error& e) {
      res.record_failure(i, e.what());
    }
  }
  res.seconds = timer.seconds();
  return res;
}

} // namespace trackcube
