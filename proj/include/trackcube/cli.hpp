#pragma once

#include <string>
#include <vector>

#include "trackcube/campaign.hpp"
#include "trackcube/io.hpp"

namespace trackcube {

// Command report: deterministic for fixed seed and inputs. Exit code 0 when
// every check passes (warnings allowed), 1 on any failed check, 2 on input
// errors (raised as exceptions before a report exists).
struct Report {
  std::string command;
  json inputs = json::object();
  struct Check {
    std::string name;
    std::string status; // pass | fail | warning
    json detail;
  };
  std::vector<Check> checks;
  json maxima = json::object();
  json extra = json::object();

  void check(const std::string& name, bool pass, json detail = {});
  void warn(const std::string& name, json detail = {});
  int exit_code() const;
  json to_json() const;
};

struct CommonOptions {
  uint64_t seed = 1;
  int cap = kDefaultVertexCap;
  long long budget = kDefaultCliqueBudget;
  std::string out_dir; // empty: no files written
  std::string format = "json"; // json | dot
};

Report cmd_validate(const std::string& complex_path, const std::string& drawing_path,
                    const CommonOptions& opts);
Report cmd_dual(const std::string& pocset_path, const CommonOptions& opts);
Report cmd_classes(const std::string& complex_path, const std::string& pattern_path,
                   const CommonOptions& opts);
Report cmd_bound_check(const std::string& complex_path, const std::string& pattern_path,
                       const CommonOptions& opts);
Report cmd_resolve(const std::string& complex_path, const std::string& pocset_path,
                   const std::string& map_path, const CommonOptions& opts);
Report cmd_normalize(const std::string& complex_path, const std::string& drawing_path,
                     const CommonOptions& opts);
Report cmd_gen_random(const std::string& kind, int size, const CommonOptions& opts);
Report cmd_stress(int count, const CommonOptions& opts);

} // namespace trackcube
