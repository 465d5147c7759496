#include "app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>

#include "commands.hpp"

namespace entkit::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  for (char c : text + ",") {
    if (c == ',') {
      std::size_t used = 0;
      const int v = token.empty() ? 0 : std::stoi(token, &used);
      if (token.empty() || used != token.size()) throw std::invalid_argument("malformed integer list '" + text + "'");
      out.push_back(v);
      token.clear();
    } else if (c != ' ' && c != '{' && c != '}') {
      token.push_back(c);
    }
  }
  return out;
}

RoofGrid parse_grid(const std::string& text, bool refine, int jobs) {
  const std::vector<int> g = parse_int_list(text);
  if (g.size() != 2 || g[0] < 2 || g[1] < 1) throw std::invalid_argument("--grid expects n_theta,n_chi with n_theta >= 2");
  return RoofGrid{g[0], g[1], refine, 1e-6, jobs};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"entkit: qudit entanglement measures, maximally entangled level sets and convex roofs"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string out_path;
  bool csv_flag = false, json_flag = false;
  app.add_option("--seed", cfg.seed, "Seed for every randomized output");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--csv", csv_flag, "Shorthand for --format csv");
  app.add_flag("--json", json_flag, "Shorthand for --format json");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_option("--fuzz-tolerance", cfg.fuzz_tolerance, "Allowed excess of ent above 1 in fuzz");

  std::string modes, state_path, grid_text = "30,30", measure = "ent", levels_text;
  int start = 1, which = 2, points = 300, count = 1000, max_n = 18, figure = 5, cutoff = 200, ensemble = 200;
  std::optional<int> lstar, index;
  std::size_t limit = 1000;
  bool trace = false, expand = false, no_refine = false, normalize = false;
  double r_max = 4.0;

  auto add_modes = [&](CLI::App* sub) { sub->add_option("--modes", modes, "Mode sizes, e.g. 2,2,3")->required(); };
  auto add_state = [&](CLI::App* sub) { sub->add_option("--state", state_path, "State file (JSON)")->required(); };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", grid_text, "Roof grid n_theta,n_chi");
    sub->add_flag("--no-refine", no_refine, "Skip the golden-section refinement of the grid minimum");
  };

  auto* compute = app.add_subcommand("compute", "Ent of a state file (convex roof for rank-2 density input)");
  add_state(compute);
  add_grid(compute);

  auto* lstar_cmd = app.add_subcommand("lstar", "L* set and the 1-M(L) table");
  add_modes(lstar_cmd);

  auto* a13_cmd = app.add_subcommand("a13", "Maximally entangled TGX level sets from one starting level");
  add_modes(a13_cmd);
  a13_cmd->add_option("--start", start, "Starting level (1-based)");
  a13_cmd->add_option("--lstar", lstar, "Number of levels (default: smallest L*)");
  a13_cmd->add_flag("--trace", trace, "Include intermediate candidate tables");

  auto* tables = app.add_subcommand("tables", "Regenerate the L*, canonical-row or full level-set tables");
  tables->add_option("--which", which, "2: L* sets, 3: canonical rows, 4: all level sets")->check(CLI::IsMember({2, 3, 4}));

  auto* meb = app.add_subcommand("meb", "Generating sets of maximally entangled bases");
  add_modes(meb);
  meb->add_option("--lstar", lstar, "Row length (default: every L* dividing n)");
  meb->add_option("--index", index, "Select one generating set (0-based)");
  meb->add_flag("--expand", expand, "Emit the full basis of the selected set");
  meb->add_option("--limit", limit, "Stop after this many sets per L* (0: no limit)");

  auto* theta = app.add_subcommand("theta-sweep", "Ent along the single-parameter theta family");
  add_modes(theta);
  theta->add_option("--points", points, "Number of theta values")->check(CLI::Range(2, 1000000));
  theta->add_option("--levels", levels_text, "Level set (default: canonical row)");

  auto* squeezed = app.add_subcommand("squeezed", "Ent of the two-mode squeezed vacuum against r");
  squeezed->add_option("--rmax", r_max, "Largest squeezing parameter");
  squeezed->add_option("--points", points, "Number of r values")->check(CLI::Range(2, 1000000));
  squeezed->add_option("--cutoff", cutoff, "Fock cutoff for the truncated purity");

  auto* entarray = app.add_subcommand("entarray", "Ent vector and ent array of a pure state");
  add_state(entarray);
  add_grid(entarray);
  entarray->add_flag("--normalize", normalize, "Also report net and absolute ent against an ensemble maximum");
  entarray->add_option("--ensemble", ensemble, "Random states in the normalizing ensemble");

  auto* gm = app.add_subcommand("gm", "Genuine multipartite ent and its minimizing bipartition");
  add_state(gm);
  add_grid(gm);

  auto* roof = app.add_subcommand("roof", "Rank-2 convex roof surface over (theta, chi)");
  add_state(roof);
  add_grid(roof);
  roof->add_option("--measure", measure, "Pure-state measure")->check(CLI::IsMember({"ent", "gm"}));

  auto* fuzz = app.add_subcommand("fuzz", "Haar-random normalization check");
  fuzz->add_option("--count", count, "States per structure");
  fuzz->add_option("--max-n", max_n, "Largest total dimension");

  auto* figdata = app.add_subcommand("figdata", "Sweep and surface data for plotting");
  figdata->add_option("--figure", figure, "2: squeezed sweep, 5: theta sweeps, 6: roof surface")
      ->check(CLI::IsMember({2, 5, 6}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  if (csv_flag) cfg.format = "csv";
  if (json_flag) cfg.format = "json";

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cannot open " << out_path << " for writing\n";
      return 2;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    const RoofGrid grid = parse_grid(grid_text, !no_refine, cfg.jobs);
    CommandResult r;
    if (name == "compute") r = cmd_compute(read_state_file(state_path), grid);
    else if (name == "lstar") r = cmd_lstar(ModeStructure::parse(modes));
    else if (name == "a13") r = cmd_a13(ModeStructure::parse(modes), start, lstar, trace);
    else if (name == "tables") r = cmd_tables(which, cfg);
    else if (name == "meb") r = cmd_meb(ModeStructure::parse(modes), lstar, index, expand, limit);
    else if (name == "theta-sweep")
      r = cmd_theta_sweep(ModeStructure::parse(modes), points,
                          levels_text.empty() ? std::nullopt : std::optional<LevelSet>(parse_int_list(levels_text)));
    else if (name == "squeezed") r = cmd_squeezed(r_max, sub->count("--points") ? points : 200, cutoff);
    else if (name == "entarray") r = cmd_entarray(read_state_file(state_path), grid, {normalize, ensemble}, cfg);
    else if (name == "gm") r = cmd_gm(read_state_file(state_path), grid);
    else if (name == "roof") r = cmd_roof(read_state_file(state_path), measure, grid);
    else if (name == "fuzz") r = cmd_fuzz(count, max_n, cfg);
    else if (name == "figdata") r = cmd_figdata(figure, cfg);
    sink << render(name, cfg, r);
    if (r.exit_code != 0) err << name << ": checks failed\n";
    return r.exit_code;
  } catch (const std::exception& e) {
    sink << render_error(name, cfg, e.what());
    err << name << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace entkit::cli
