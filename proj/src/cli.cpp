#include "trackcube/cli.hpp"

#include <filesystem>

#include "trackcube/analysis.hpp"

namespace trackcube {

void Report::check(const std::string& name, bool pass, json detail) {
  checks.push_back({name, pass ? "pass" : "fail", std::move(detail)});
}

void Report::warn(const std::string& name, json detail) {
  checks.push_back({name, "warning", std::move(detail)});
}

int Report::exit_code() const {
  for (auto& c : checks)
    if (c.status == "fail") return 1;
  return 0;
}

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = inputs;
  auto& cs = j["checks"] = json::array();
  for (auto& c : checks) {
    json jc;
    jc["name"] = c.name;
    jc["status"] = c.status;
    if (!c.detail.is_null()) jc["detail"] = c.detail;
    cs.push_back(jc);
  }
  if (!maxima.empty()) j["maxima"] = maxima;
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  j["exit"] = exit_code();
  return j;
}

namespace {

SimplicialComplex2 load_complex(const std::string& path, Report& rep) {
  std::vector<std::string> warnings;
  auto raw = complex_from_json(load_json_file(path), &warnings);
  for (auto& w : warnings) rep.warn("input", w);
  auto k = validate_complex(raw);
  rep.inputs["complex"] = {{"path", path}, {"V", k.V()}, {"E", k.E()}, {"T", k.T()}};
  return k;
}

std::pair<Drawing, std::optional<std::vector<std::vector<int>>>> load_drawing(
    const std::string& path, const SimplicialComplex2& k, Report& rep, DrawingOptions opts) {
  std::vector<std::string> warnings;
  auto raw = drawing_from_json(load_json_file(path), &warnings);
  for (auto& w : warnings) rep.warn("input", w);
  Drawing d = validate_drawing(k, raw, opts);
  rep.inputs["drawing"] = {{"path", path},
                           {"arcs", d.arcs.size()},
                           {"crossings", d.total_crossings()}};
  return {std::move(d), raw.tracks};
}

void write_out(const CommonOptions& opts, const std::string& name, const std::string& text) {
  if (opts.out_dir.empty()) return;
  std::filesystem::create_directories(opts.out_dir);
  save_text_file(opts.out_dir + "/" + name, text);
}

} // namespace

Report cmd_validate(const std::string& complex_path, const std::string& drawing_path,
                    const CommonOptions& opts) {
  Report rep;
  rep.command = "validate";
  auto k = load_complex(complex_path, rep);
  rep.check("complex", true,
            {{"V", k.V()},
             {"E", k.E()},
             {"T", k.T()},
             {"euler", k.euler()},
             {"h1_z2", k.h1},
             {"boundary_edges", k.boundary_edges.size()}});
  if (!drawing_path.empty()) {
    auto [d, tracks] = load_drawing(drawing_path, k, rep, {});
    Pattern p = make_pattern(k, std::move(d), tracks, k.h1 == 0);
    rep.check("drawing", true,
              {{"arcs", p.drawing.arcs.size()}, {"tracks", p.n_tracks()}});
    if (k.h1 == 0) {
      int w = max_pairwise_crossing(k, p, opts.budget);
      rep.extra["max_pairwise_crossing"] = w;
    }
  }
  return rep;
}

Report cmd_dual(const std::string& pocset_path, const CommonOptions& opts) {
  Report rep;
  rep.command = "dual";
  std::vector<std::string> warnings;
  auto raw = pocset_from_json(load_json_file(pocset_path), &warnings);
  for (auto& w : warnings) rep.warn("input", w);
  Pocset p = validate_pocset(raw);
  rep.inputs["pocset"] = {{"path", pocset_path}, {"pairs", p.pairs()}};
  auto x = dual_complex(p, opts.cap);
  rep.check("dual", true,
            {{"vertices", x.V()},
             {"edges", x.edges.size()},
             {"dimension", dimension(x, opts.budget)},
             {"width", width(p, opts.budget)}});
  if (opts.format == "dot")
    write_out(opts, "dual.dot", export_dot(x));
  else
    write_out(opts, "dual.json", export_json(x));
  return rep;
}

namespace {

struct PatternData {
  SimplicialComplex2 k;
  Pattern p;
  RegionDecomposition rd;
  FineHalfspaces fh;
  CoarseHalfspaces ch;
};

PatternData load_pattern_data(const std::string& complex_path, const std::string& pattern_path,
                              Report& rep) {
  PatternData out;
  out.k = load_complex(complex_path, rep);
  auto [d, tracks] = load_drawing(pattern_path, out.k, rep, {});
  out.p = make_pattern(out.k, std::move(d), tracks, true);
  out.rd = regions(out.k, out.p);
  out.fh = fine_halfspaces(out.k, out.p, out.rd);
  out.ch = coarse_halfspaces(out.k, out.p, out.rd, out.fh);
  return out;
}

} // namespace

Report cmd_classes(const std::string& complex_path, const std::string& pattern_path,
                   const CommonOptions& opts) {
  (void)opts;
  Report rep;
  rep.command = "classes";
  auto data = load_pattern_data(complex_path, pattern_path, rep);
  auto classes = parallelism_classes(data.ch);
  rep.extra["tracks"] = data.p.n_tracks();
  rep.extra["regions"] = data.rd.n_regions();
  rep.extra["classes"] = classes;
  for (int t : data.ch.inessential_tracks)
    rep.warn("VertexInessentialTrack", {{"track", t}});
  rep.check("classes", true, {{"count", classes.size()}});
  return rep;
}

Report cmd_bound_check(const std::string& complex_path, const std::string& pattern_path,
                       const CommonOptions& opts) {
  Report rep;
  rep.command = "bound-check";
  auto data = load_pattern_data(complex_path, pattern_path, rep);
  auto bc = check_parallelism_bound(data.k, data.p, opts.budget);
  rep.extra["classes"] = bc.classes;
  rep.extra["bound"] = bc.bound;
  rep.extra["slack"] = bc.slack;
  rep.extra["lemma1_max"] = bc.lemma1_max;
  rep.extra["lemma1_strict_max"] = bc.lemma1_strict_max;
  rep.extra["lemma2_max"] = bc.lemma2_max;
  rep.extra["trichotomy_gaps"] = bc.trichotomy_gaps;
  if (bc.lemma1_interpretations_differ)
    rep.warn("separation_interpretations_differ",
             {{"strict_max", bc.lemma1_strict_max}, {"max", bc.lemma1_max}});
  for (int t : bc.inessential_tracks) rep.warn("VertexInessentialTrack", {{"track", t}});
  rep.check("class_bound", bc.classes <= bc.bound);
  rep.check("separation_bound", bc.lemma1_max <= adjp_separation_bound(bc.dim));
  rep.check("transfer_bound", bc.dim > 2 || bc.lemma2_max <= 4);
  rep.check("trichotomy", bc.trichotomy_gaps.empty());
  rep.check("violations", bc.violations.empty(), bc.violations);
  return rep;
}

Report cmd_resolve(const std::string& complex_path, const std::string& pocset_path,
                   const std::string& map_path, const CommonOptions& opts) {
  Report rep;
  rep.command = "resolve";
  auto k = load_complex(complex_path, rep);
  std::vector<std::string> warnings;
  auto rawp = pocset_from_json(load_json_file(pocset_path), &warnings);
  for (auto& w : warnings) rep.warn("input", w);
  Pocset p = validate_pocset(rawp);
  auto x = dual_complex(p, opts.cap);
  rep.inputs["pocset"] = {{"path", pocset_path}, {"pairs", p.pairs()}};
  VertexMap f = vertex_map_from_json(load_json_file(map_path), k, x);

  auto r = resolve(k, x, f);
  if (r.pull.empty) rep.warn("empty_pullback", "vertex map separates no edge");
  auto check = check_resolution(k, x, f, r, opts.budget);
  for (auto& item : check.items) rep.check(item.name, item.pass, item.detail);
  rep.extra["tracks"] = r.pull.pattern.n_tracks();
  rep.extra["regions"] = r.rd.n_regions();
  rep.extra["fine_vertices"] = r.fine_dual.V();
  rep.extra["coarse_vertices"] = r.coarse_dual.V();

  write_out(opts, "pullback.json", pattern_to_json(k, r.pull.pattern).dump(2) + "\n");
  write_out(opts, "fine_dual.json", export_json(r.fine_dual));
  write_out(opts, "coarse_dual.json", export_json(r.coarse_dual));
  return rep;
}

Report cmd_normalize(const std::string& complex_path, const std::string& drawing_path,
                     const CommonOptions& opts) {
  Report rep;
  rep.command = "normalize";
  auto k = load_complex(complex_path, rep);
  auto [d, tracks] = load_drawing(drawing_path, k, rep, {.allow_empty = false, .generalized = true});
  long long before = d.total_crossings();
  auto nr = normalize(k, d, true);
  rep.extra["moves"] = nr.moves;
  rep.extra["crossings_before"] = before;
  rep.extra["crossings_after"] = nr.pattern.drawing.total_crossings();
  auto& moves = rep.extra["move_log"] = json::array();
  for (auto& m : nr.log)
    moves.push_back({{"edge", k.edge_name(m.edge)},
                     {"from_face", k.face_name(m.from_face)},
                     {"to_face", k.face_name(m.to_face)},
                     {"indices", {m.lo, m.hi}},
                     {"closed_loop", m.closed_loop}});
  if (nr.emptied) rep.warn("empty_pattern", "every component cancelled");
  rep.check("terminates", true, {{"moves", nr.moves}});
  rep.check("strict_output", true);
  write_out(opts, "normalized.json", pattern_to_json(k, nr.pattern).dump(2) + "\n");
  return rep;
}

Report cmd_gen_random(const std::string& kind, int size, const CommonOptions& opts) {
  Report rep;
  rep.command = "gen-random";
  rep.inputs["kind"] = kind;
  rep.inputs["size"] = size;
  rep.inputs["seed"] = opts.seed;
  Rng rng(opts.seed);

  if (kind == "complex-disk") {
    auto k = gen_disk(size, rng);
    write_out(opts, "complex.json", complex_to_json(k).dump(2) + "\n");
    rep.check("generated", true, {{"V", k.V()}, {"E", k.E()}, {"T", k.T()}, {"h1", k.h1}});
  } else if (kind == "pattern-direct") {
    SimplicialComplex2 k = gen_disk(std::max(1, size / 2), rng);
    GenPatternOptions gopts;
    gopts.max_tracks = std::max(2, size);
    Pattern p = gen_pattern_direct(k, gopts, rng);
    write_out(opts, "complex.json", complex_to_json(k).dump(2) + "\n");
    write_out(opts, "pattern.json", pattern_to_json(k, p).dump(2) + "\n");
    rep.check("generated", true, {{"tracks", p.n_tracks()}});
  } else if (kind == "pattern-pullback") {
    auto k = gen_disk(std::max(1, size), rng);
    auto x = dual_complex(gen_width2_pocset(rng));
    auto f = gen_vertex_map(k, x, rng);
    auto r = resolve(k, x, f);
    write_out(opts, "complex.json", complex_to_json(k).dump(2) + "\n");
    write_out(opts, "pocset.json", pocset_to_json(x.pocset).dump(2) + "\n");
    json jf;
    for (int v = 0; v < k.V(); ++v)
      jf[std::to_string(k.vertex_ids[v])] = f.image[v];
    write_out(opts, "vertex_map.json", jf.dump(2) + "\n");
    write_out(opts, "pattern.json", pattern_to_json(k, r.pull.pattern).dump(2) + "\n");
    rep.check("generated", true, {{"tracks", r.pull.pattern.n_tracks()}});
  } else if (kind == "pocset") {
    Pocset p = gen_pocset(std::max(1, size), 3 * size, rng);
    write_out(opts, "pocset.json", pocset_to_json(p).dump(2) + "\n");
    rep.check("generated", true, {{"pairs", p.pairs()}});
  } else {
    fail(errc::input_error, "unknown kind '" + kind + "'");
  }
  return rep;
}

Report cmd_stress(int count, const CommonOptions& opts) {
  Report rep;
  rep.command = "stress";
  rep.inputs["seed"] = opts.seed;
  rep.inputs["count"] = count;

  std::vector<CampaignResult> results;
  results.push_back(run_duality_campaign(opts.seed, count));
  results.push_back(run_median_campaign(opts.seed, count, 8, 200));
  results.push_back(run_principality_campaign(opts.seed, count, 12, 12));
  results.push_back(run_interval_bounds_campaign(opts.seed, count, 10, 8));
  results.push_back(run_resolution_campaign(opts.seed, count));
  results.push_back(run_normalize_campaign(opts.seed, count));

  for (auto& r : results) {
    json detail{{"instances", r.instances},
                {"failures", r.failures},
                {"seconds", r.seconds}};
    if (r.name == "interval_bounds") {
      detail["lemma1_max"] = r.max_a;
      detail["lemma2_max"] = r.max_b;
      rep.maxima["lemma1_max"] = r.max_a;
      rep.maxima["lemma2_max"] = r.max_b;
    }
    if (!r.witnesses.empty()) detail["witnesses"] = r.witnesses;
    rep.check(r.name, r.pass(), detail);
  }
  return rep;
}

} // namespace trackcube
