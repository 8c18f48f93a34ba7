#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trackcube/generate.hpp"

namespace trackcube {

// Deterministic stress campaigns over generated instances. Every instance is
// reproducible from (seed, index); the first failure witness is kept.
struct CampaignResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::vector<std::string> witnesses; // "index <i>: <what>" for first few
  // observed maxima, campaign specific
  long long max_a = 0, max_b = 0;
  double seconds = 0;

  bool pass() const { return failures == 0; }
  void record_failure(uint64_t index, const std::string& what) {
    ++failures;
    if (witnesses.size() < 5)
      witnesses.push_back("index " + std::to_string(index) + ": " + what);
  }
};

// cube duals: 2^n vertices for independent pairs, paths for chains, read-off
// pocset identity on random pocsets
CampaignResult run_duality_campaign(uint64_t seed, int random_pocsets);

// exhaustive majority-vertex membership on fine and coarse duals
CampaignResult run_median_campaign(uint64_t seed, int patterns, int max_faces,
                                   int vertex_limit);

// #vertices(fine dual) == #regions and all principal ultrafilters realized
CampaignResult run_principality_campaign(uint64_t seed, int patterns, int max_faces,
                                         int max_tracks);

// full interval bound report per pattern; max_a/max_b carry the observed
// separation/transfer maxima
CampaignResult run_interval_bounds_campaign(uint64_t seed, int patterns, int max_faces,
                                            int max_tracks);

// random (disk, width<=2 dual, vertex map) resolutions
CampaignResult run_resolution_campaign(uint64_t seed, int triples);

// push-move normalization on random generalized drawings over spheres
CampaignResult run_normalize_campaign(uint64_t seed, int drawings);

} // namespace trackcube
