#include <iostream>

#include <CLI11.hpp>

#include "trackcube/cli.hpp"

using namespace trackcube;

int main(int argc, char** argv) {
  CLI::App app{"tracks on 2-complexes and their dual cube complexes"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string complex_path, drawing_path, pattern_path, pocset_path, map_path;
  std::string kind = "complex-disk";
  int size = 5, count = 50;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opts.seed, "campaign seed");
    cmd->add_option("--cap", opts.cap, "dual-complex vertex cap");
    cmd->add_option("--budget", opts.budget, "clique search node budget");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--format", opts.format)->check(CLI::IsMember({"json", "dot"}));
  };

  auto* validate = app.add_subcommand("validate", "validate a complex and optional drawing");
  validate->add_option("--complex", complex_path)->required();
  validate->add_option("--drawing", drawing_path);
  add_common(validate);

  auto* dual = app.add_subcommand("dual", "build the dual cube complex of a pocset");
  dual->add_option("--pocset", pocset_path)->required();
  add_common(dual);

  auto* classes = app.add_subcommand("classes", "parallelism classes of a pattern");
  classes->add_option("--complex", complex_path)->required();
  classes->add_option("--pattern", pattern_path)->required();
  add_common(classes);

  auto* bound = app.add_subcommand("bound-check", "interval bounds and the class bound");
  bound->add_option("--complex", complex_path)->required();
  bound->add_option("--pattern", pattern_path)->required();
  add_common(bound);

  auto* res = app.add_subcommand("resolve", "pull back a vertex map and build resolutions");
  res->add_option("--complex", complex_path)->required();
  res->add_option("--pocset", pocset_path)->required();
  res->add_option("--map", map_path)->required();
  add_common(res);

  auto* norm = app.add_subcommand("normalize", "eliminate self-returning segments");
  norm->add_option("--complex", complex_path)->required();
  norm->add_option("--drawing", drawing_path)->required();
  add_common(norm);

  auto* gen = app.add_subcommand("gen-random", "generate a random instance");
  gen->add_option("--kind", kind)
      ->check(CLI::IsMember({"complex-disk", "pattern-direct", "pattern-pullback", "pocset"}));
  gen->add_option("--size", size);
  add_common(gen);

  auto* stress = app.add_subcommand("stress", "run the generated-instance campaigns");
  stress->add_option("--count", count, "instances per campaign");
  add_common(stress);

  CLI11_PARSE(app, argc, argv);

  try {
    Report rep;
    if (validate->parsed())
      rep = cmd_validate(complex_path, drawing_path, opts);
    else if (dual->parsed())
      rep = cmd_dual(pocset_path, opts);
    else if (classes->parsed())
      rep = cmd_classes(complex_path, pattern_path, opts);
    else if (bound->parsed())
      rep = cmd_bound_check(complex_path, pattern_path, opts);
    else if (res->parsed())
      rep = cmd_resolve(complex_path, pocset_path, map_path, opts);
    else if (norm->parsed())
      rep = cmd_normalize(complex_path, drawing_path, opts);
    else if (gen->parsed())
      rep = cmd_gen_random(kind, size, opts);
    else
      rep = cmd_stress(count, opts);
    std::cout << rep.to_json().dump(2) << std::endl;
    return rep.exit_code();
  } catch (const Error& e) {
    std::cerr << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
