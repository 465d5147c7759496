#include "commands.hpp"

#include <entkit/convex_roof.hpp>
#include <entkit/ent_measure.hpp>
#include <entkit/errors.hpp>
#include <entkit/meb.hpp>
#include <entkit/multi_ent.hpp>
#include <entkit/parallel.hpp>
#include <entkit/param_states.hpp>
#include <entkit/tgx_construct.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "catalog.hpp"

namespace entkit::cli {

using nlohmann::json;

namespace {

std::string num(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string braces(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

json config_json(const RunConfig& cfg) {
  return {{"seed", cfg.seed}, {"format", cfg.format}, {"jobs", cfg.jobs}, {"fuzz_tolerance", cfg.fuzz_tolerance}};
}

json context_json(const EntContext& ctx) {
  return {{"lstar_set", ctx.lstar_set}, {"lstar", ctx.lstar}, {"M", ctx.M}, {"pmp_per_mode", ctx.pmp_per_mode}};
}

json pure_report(const StateVector& psi) {
  const EntReport rep = ent(psi);
  return {{"structure", psi.structure().str()},
          {"ent", rep.ent},
          {"display", rep.display()},
          {"reduction_purities", rep.reduction_purities},
          {"unitized_purities", rep.unitized_purities},
          {"context", context_json(rep.context)}};
}

json roof_json(const RoofResult& r, bool with_surface) {
  json out = {{"rank", r.rank},          {"value", r.value},
              {"theta", r.theta},        {"chi", r.chi},
              {"grid_value", r.grid_value}, {"grid_theta_index", r.grid_theta_index},
              {"grid_chi_index", r.grid_chi_index}, {"n_theta", r.thetas.size()},
              {"n_chi", r.chis.size()}};
  if (with_surface) {
    json surface = json::array();
    for (int i = 0; i < r.surface.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < r.surface.cols(); ++j) row.push_back(r.surface(i, j));
      surface.push_back(row);
    }
    out["thetas"] = r.thetas;
    out["chis"] = r.chis;
    out["surface"] = surface;
  }
  return out;
}

std::string roof_csv(const RoofResult& r) {
  std::ostringstream os;
  os << "theta,chi,average,kind\n";
  for (std::size_t i = 0; i < r.thetas.size(); ++i)
    for (std::size_t j = 0; j < r.chis.size(); ++j)
      os << num(r.thetas[i]) << "," << num(r.chis[j]) << "," << num(r.surface(i, j)) << ",grid\n";
  os << num(r.thetas.empty() ? 0.0 : r.thetas[r.grid_theta_index]) << ","
     << num(r.chis.empty() ? 0.0 : r.chis[r.grid_chi_index]) << "," << num(r.grid_value) << ",grid_min\n";
  os << num(r.theta) << "," << num(r.chi) << "," << num(r.value) << ",refined_min\n";
  return os.str();
}

json cell_json(const EntCell& c) {
  json out = {{"value", c.value ? json(*c.value) : json(nullptr)}, {"formation", c.formation}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

std::string cell_csv(const std::string& kind, const std::string& group, const std::string& partition, const EntCell& c) {
  return kind + "," + quoted(group) + "," + quoted(partition) + "," + (c.value ? num(*c.value) : std::string()) + "," +
         (c.formation ? "1" : "0") + "," + quoted(c.note) + "\n";
}

template <typename T>
json optional_norm(const T& x) {
  try {
    return one_norm(x);
  } catch (const std::invalid_argument&) {
    return nullptr;
  }
}

const StateVector& require_pure(const StateInput& in, const char* what) {
  if (!in.pure) throw std::invalid_argument(std::string(what) + " needs a pure state file");
  return *in.pure;
}

std::vector<std::pair<double, double>> sweep(const ModeStructure& s, const LevelSet& levels, int points) {
  if (points < 2) throw std::invalid_argument("need at least two sweep points");
  const ThetaFamily fam{s, levels};
  const double tmax = fam.theta_max();
  std::vector<std::pair<double, double>> out;
  for (int k = 0; k < points; ++k) {
    const double th = k == points - 1 ? tmax : k * tmax / (points - 1);
    out.emplace_back(th, ent_value(theta_state(fam, th)));
  }
  return out;
}

}  // namespace

std::string render(const std::string& command, const RunConfig& cfg, const CommandResult& r) {
  if (cfg.format == "csv" && !r.csv.empty()) return r.csv;
  const json envelope = {{"schema", REPORT_SCHEMA},
                         {"command", command},
                         {"config", config_json(cfg)},
                         {"ok", r.exit_code == 0},
                         {"result", r.result}};
  return envelope.dump(2) + "\n";
}

std::string render_error(const std::string& command, const RunConfig& cfg, const std::string& message) {
  const json envelope = {{"schema", REPORT_SCHEMA}, {"command", command}, {"config", config_json(cfg)},
                         {"ok", false},             {"error", message}};
  return envelope.dump(2) + "\n";
}

CommandResult cmd_compute(const StateInput& in, const RoofGrid& grid) {
  CommandResult out;
  if (in.pure) {
    out.result = pure_report(*in.pure);
    out.result["kind"] = "pure";
  } else {
    const DensityMatrix& rho = *in.density;
    const Eigensystem eig = ranked_eigensystem(rho);
    if (purity(rho) >= 1.0 - PURE_REDUCTION_TOL) {
      out.result = pure_report(StateVector::normalized(rho.structure(), eig.vectors.col(0)));
      out.result["kind"] = "density";
      out.result["pure_input"] = true;
    } else {
      const RoofResult r = roof_rank2(rho, [](const StateVector& w) { return ent_value(w); }, grid);
      out.result = {{"structure", rho.structure().str()},
                    {"kind", "density"},
                    {"pure_input", false},
                    {"ent", r.value},
                    {"formation", true},
                    {"roof", roof_json(r, false)}};
    }
  }
  std::ostringstream os;
  os << "structure,ent\n" << out.result["structure"].get<std::string>() << "," << num(out.result["ent"].get<double>())
     << "\n";
  out.csv = os.str();
  return out;
}

CommandResult cmd_lstar(const ModeStructure& s) {
  CommandResult out;
  const std::vector<int> lstars = lstar_set(s);
  json table = json::array();
  std::ostringstream os;
  os << "L,one_minus_M,one_minus_M_exact,in_lstar_set\n";
  for (int L = 2; L <= s.nbar_max(); ++L) {
    const Rational exact = one_minus_M_exact(L, s);
    const double value = 1.0 - normalization_M(L, s);
    const std::string frac = std::to_string(exact.numerator()) + "/" + std::to_string(exact.denominator());
    const bool in_set = std::find(lstars.begin(), lstars.end(), L) != lstars.end();
    table.push_back({{"L", L}, {"one_minus_M", value}, {"one_minus_M_exact", frac}, {"in_lstar_set", in_set}});
    os << L << "," << num(value) << "," << frac << "," << (in_set ? 1 : 0) << "\n";
  }
  out.result = {{"structure", s.str()},
                {"lstar_set", lstars},
                {"lstar_set_exact", lstar_set_exact(s)},
                {"M", make_ent_context(s).M},
                {"table", table}};
  out.csv = os.str();
  return out;
}

CommandResult cmd_a13(const ModeStructure& s, int start, std::optional<int> lstar, bool trace) {
  CommandResult out;
  const int L = lstar ? *lstar : lstar_set(s).front();
  A13Trace tr;
  const LevelSetTable rows = a13(s, start, L, trace ? &tr : nullptr);
  out.result = {{"structure", s.str()}, {"start", start}, {"lstar", L}, {"rows", rows}};
  if (trace) {
    out.result["trace"] = {{"compatible_levels", tr.compatible_levels},
                           {"combination_count", tr.combination_count},
                           {"candidates", tr.candidates},
                           {"pairwise_compatible", tr.pairwise_compatible},
                           {"maximally_entangled", tr.maximally_entangled}};
    const GoalsMatrix g = goals_matrix(s, L);
    out.result["goals"] = {{"m_max", g.m_max}, {"rows", g.rows}};
  }
  std::ostringstream os;
  os << "structure,start,lstar,levels\n";
  for (const auto& r : rows) os << s.str() << "," << start << "," << L << "," << quoted(braces(r)) << "\n";
  out.csv = os.str();
  return out;
}

CommandResult cmd_tables(int which, const RunConfig& cfg) {
  CommandResult out;
  std::ostringstream os;
  json rows = json::array();
  if (which == 2) {
    os << "structure,n,lstar_set\n";
    for (const auto& s : structures_up_to(28)) {
      const auto set = lstar_set(s);
      rows.push_back({{"structure", s.str()}, {"n", s.n()}, {"lstar_set", set}});
      os << s.str() << "," << s.n() << "," << quoted(braces(set)) << "\n";
    }
  } else if (which == 3) {
    os << "structure,n,lstar,levels\n";
    const auto structures = structures_up_to(28);
    std::vector<LevelSet> canon(structures.size());
    parallel_for(structures.size(), cfg.jobs, [&](std::size_t i) { canon[i] = canonical_row(structures[i]); });
    for (std::size_t i = 0; i < structures.size(); ++i) {
      const ModeStructure& s = structures[i];
      const int L = lstar_set(s).front();
      rows.push_back({{"structure", s.str()}, {"n", s.n()}, {"lstar", L}, {"levels", canon[i]}});
      os << s.str() << "," << s.n() << "," << L << "," << quoted(braces(canon[i])) << "\n";
    }
  } else if (which == 4) {
    os << "structure,index,levels\n";
    for (const auto& s : all_sets_structures()) {
      const LevelSetTable sets = a13_all(s, std::nullopt, cfg.jobs);
      rows.push_back({{"structure", s.str()}, {"count", sets.size()}, {"sets", sets}});
      for (std::size_t i = 0; i < sets.size(); ++i)
        os << s.str() << "," << i + 1 << "," << quoted(braces(sets[i])) << "\n";
    }
  } else {
    throw std::invalid_argument("tables: --which must be 2, 3 or 4");
  }
  out.result = {{"which", which}, {"rows", rows}};
  out.csv = os.str();
  return out;
}

CommandResult cmd_meb(const ModeStructure& s, std::optional<int> lstar, std::optional<int> index, bool expand,
                      std::size_t limit) {
  CommandResult out;
  std::vector<int> Ls;
  if (lstar) {
    Ls.push_back(*lstar);
  } else {
    for (int L : lstar_set(s))
      if (s.n() % L == 0) Ls.push_back(L);
  }
  if (Ls.empty()) throw std::invalid_argument("meb: no L* value divides n = " + std::to_string(s.n()));

  json per_l = json::array();
  std::ostringstream os;
  os << "lstar,index,rows\n";
  std::vector<GeneratingSet> first_sets;
  for (std::size_t li = 0; li < Ls.size(); ++li) {
    const auto sets = generating_sets(s, Ls[li], limit);
    if (li == 0) first_sets = sets;
    per_l.push_back({{"lstar", Ls[li]},
                     {"count", sets.size()},
                     {"truncated", limit > 0 && sets.size() >= limit},
                     {"sets", sets}});
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::string text;
      for (std::size_t r = 0; r < sets[i].size(); ++r) text += (r ? ";" : "") + braces(sets[i][r]);
      os << Ls[li] << "," << i << "," << quoted(text) << "\n";
    }
  }
  out.result = {{"structure", s.str()}, {"generating_sets", per_l}};
  out.csv = os.str();

  if (expand || index) {
    const std::size_t k = index ? static_cast<std::size_t>(*index) : 0;
    if (k >= first_sets.size())
      throw std::invalid_argument("meb: --index " + std::to_string(k) + " out of range (" +
                                  std::to_string(first_sets.size()) + " sets at L* = " + std::to_string(Ls.front()) + ")");
    out.result["selected"] = {{"lstar", Ls.front()}, {"index", k}, {"rows", first_sets[k]}};
    if (expand) {
      const MebBasis basis = meb_expand(s, first_sets[k]);
      json states = json::array();
      std::ostringstream es;
      es << "generator,phase_index,level,re,im\n";
      for (const auto& st : basis.states) {
        json j = state_to_json(st.state);
        j["generator"] = st.generator;
        j["phase_index"] = st.phase_index;
        states.push_back(j);
        for (int v = 0; v < st.state.dim(); ++v) {
          const Cx a = st.state.amplitudes()(v);
          if (std::abs(a) < 1e-15) continue;
          es << st.generator << "," << st.phase_index << "," << v + 1 << "," << num(a.real()) << "," << num(a.imag())
             << "\n";
        }
      }
      out.result["basis"] = states;
      out.csv = es.str();
    }
  }
  return out;
}

CommandResult cmd_theta_sweep(const ModeStructure& s, int points, std::optional<LevelSet> levels) {
  CommandResult out;
  const LevelSet row = levels ? *levels : canonical_row(s);
  if (row.empty()) throw std::invalid_argument("theta-sweep: no maximally entangled row found");
  const auto pts = sweep(s, row, points);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  json arr = json::array();
  std::ostringstream os;
  os << "theta,ent\n";
  for (const auto& [th, e] : pts) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
    arr.push_back({th, e});
    os << num(th) << "," << num(e) << "\n";
  }
  out.result = {{"structure", s.str()}, {"levels", row},   {"theta_max", ThetaFamily{s, row}.theta_max()},
                {"min", lo},            {"max", hi},       {"points", arr}};
  out.csv = os.str();
  return out;
}

CommandResult cmd_squeezed(double r_max, int points, int cutoff) {
  if (points < 2) throw std::invalid_argument("squeezed: need at least two points");
  if (!(r_max >= 0.0)) throw std::invalid_argument("squeezed: --rmax must be >= 0");
  CommandResult out;
  json arr = json::array();
  std::ostringstream os;
  os << "r,ent,purity,purity_truncated\n";
  for (int k = 0; k < points; ++k) {
    const double r = k * r_max / (points - 1);
    const double e = ent_two_mode_squeezed(r), p = squeezed_reduction_purity(r);
    const double pt = squeezed_reduction_purity_truncated(r, cutoff);
    arr.push_back({{"r", r}, {"ent", e}, {"purity", p}, {"purity_truncated", pt}});
    os << num(r) << "," << num(e) << "," << num(p) << "," << num(pt) << "\n";
  }
  out.result = {{"r_max", r_max}, {"fock_cutoff", cutoff}, {"points", arr}};
  out.csv = os.str();
  return out;
}

CommandResult cmd_entarray(const StateInput& in, const RoofGrid& grid, const EnsembleRequest& ens, const RunConfig& cfg) {
  const StateVector& psi = require_pure(in, "entarray");
  CommandResult out;
  std::ostringstream os;
  os << "kind,group,partition,value,formation,note\n";

  const EntVector v = ent_vector(psi, grid);
  json vec = json::array();
  for (std::size_t k = 0; k < v.rows.size(); ++k) {
    json cells = json::array();
    for (std::size_t i = 0; i < v.rows[k].size(); ++i) {
      json c = cell_json(v.rows[k][i]);
      c["group"] = v.groups[k][i];
      cells.push_back(c);
      os << cell_csv("vector", braces(v.groups[k][i]), "", v.rows[k][i]);
    }
    vec.push_back({{"k", k + 2}, {"cells", cells}});
  }

  const EntArray a = ent_array(psi, grid, cfg.jobs);
  json arr = json::array();
  for (const auto& row : a.rows)
    for (const auto& xi : row) {
      json rows = json::array();
      for (std::size_t t = 0; t < xi.rows.size(); ++t) {
        json cells = json::array();
        for (std::size_t i = 0; i < xi.rows[t].size(); ++i) {
          json c = cell_json(xi.rows[t][i]);
          c["partition"] = xi.partitions[t][i].str();
          cells.push_back(c);
          os << cell_csv("array", braces(xi.group), xi.partitions[t][i].str(), xi.rows[t][i]);
        }
        rows.push_back({{"T", t + 2}, {"cells", cells}});
      }
      arr.push_back({{"group", xi.group}, {"rows", rows}});
    }

  out.result = {{"structure", psi.structure().str()},
                {"ent_vector", vec},
                {"ent_vector_one_norm", optional_norm(v)},
                {"ent_array", arr},
                {"ent_array_cell_count", a.cell_count()},
                {"ent_array_one_norm", optional_norm(a)}};

  if (ens.normalize) {
    EnsembleOptions opts;
    opts.random_states = ens.random_states;
    opts.seed = cfg.seed;
    opts.grid = grid;
    opts.jobs = cfg.jobs;
    json norm = json::object();
    for (const bool net : {true, false}) {
      const char* key = net ? "net_ent" : "abs_ent";
      try {
        const Normalizer n = net ? net_ent_normalizer(psi.structure(), opts) : abs_ent_normalizer(psi.structure(), opts);
        const json value = net ? optional_norm(v) : optional_norm(a);
        norm[key] = {{"value", value.is_null() ? json(nullptr) : json(value.get<double>() / n.value)},
                     {"normalizer", n.value},
                     {"descriptor", n.descriptor},
                     {"members", n.members},
                     {"skipped", n.skipped}};
      } catch (const std::invalid_argument& e) {
        norm[key] = {{"value", nullptr}, {"note", e.what()}};
      }
    }
    out.result["normalized"] = norm;
  }
  out.csv = os.str();
  return out;
}

CommandResult cmd_gm(const StateInput& in, const RoofGrid& grid) {
  CommandResult out;
  std::ostringstream os;
  os << "measure,value,argmin\n";
  if (in.pure) {
    const StateVector& psi = *in.pure;
    const GmResult gm = gm_ent(psi);
    const GmResult conc = gm_concurrence_pure(psi);
    ModeList all(psi.structure().N());
    for (int i = 0; i < psi.structure().N(); ++i) all[i] = i + 1;
    json bip = json::array();
    for (const auto& p : set_partitions(all, 2)) bip.push_back({{"partition", p.str()}, {"ent", partitional_ent(psi, p)}});
    out.result = {{"structure", psi.structure().str()},
                  {"kind", "pure"},
                  {"gm_ent", gm.value},
                  {"argmin", gm.argmin.str()},
                  {"gm_concurrence", conc.value},
                  {"gm_concurrence_argmin", conc.argmin.str()},
                  {"bipartitions", bip}};
    os << "gm_ent," << num(gm.value) << "," << quoted(gm.argmin.str()) << "\n";
    os << "gm_concurrence," << num(conc.value) << "," << quoted(conc.argmin.str()) << "\n";
  } else {
    const RoofResult r = gm_roof(*in.density, grid);
    out.result = {{"structure", in.structure.str()}, {"kind", "density"}, {"gm_ent", r.value}, {"roof", roof_json(r, false)}};
    os << "gm_ent," << num(r.value) << ",\n";
  }
  out.csv = os.str();
  return out;
}

CommandResult cmd_roof(const StateInput& in, const std::string& measure, const RoofGrid& grid) {
  const DensityMatrix rho = in.as_density();
  RoofResult r;
  if (measure == "ent") r = roof_rank2(rho, [](const StateVector& w) { return ent_value(w); }, grid);
  else if (measure == "gm") r = gm_roof(rho, grid);
  else throw std::invalid_argument("roof: --measure must be ent or gm");
  CommandResult out;
  out.result = roof_json(r, true);
  out.result["structure"] = rho.structure().str();
  out.result["measure"] = measure;
  out.csv = roof_csv(r);
  return out;
}

CommandResult cmd_fuzz(int count, int max_n, const RunConfig& cfg) {
  if (count < 1) throw std::invalid_argument("fuzz: --count must be positive");
  const auto structures = structures_up_to(max_n);
  constexpr int kBins = 20;
  struct PerStructure {
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    std::vector<int> histogram = std::vector<int>(kBins, 0);
    json violations = json::array();
  };
  std::vector<PerStructure> stats(structures.size());
  parallel_for(structures.size(), cfg.jobs, [&](std::size_t i) {
    const ModeStructure& s = structures[i];
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    PerStructure& st = stats[i];
    for (int k = 0; k < count; ++k) {
      const StateVector psi = random_pure_state(s, rng);
      const double e = ent_value(psi);
      st.min = std::min(st.min, e);
      st.max = std::max(st.max, e);
      const int bin = std::clamp(static_cast<int>(std::floor(e * kBins)), 0, kBins - 1);
      ++st.histogram[bin];
      if (!std::isfinite(e) || e < -cfg.fuzz_tolerance || e > 1.0 + cfg.fuzz_tolerance)
        st.violations.push_back({{"structure", s.str()}, {"structure_index", i}, {"sample", k}, {"seed", cfg.seed},
                                 {"ent", e}, {"state", state_to_json(psi)}});
    }
  });

  CommandResult out;
  json per = json::array();
  json violations = json::array();
  std::ostringstream os;
  os << "structure,count,min,max,violations\n";
  for (std::size_t i = 0; i < structures.size(); ++i) {
    const auto& st = stats[i];
    per.push_back({{"structure", structures[i].str()},
                   {"count", count},
                   {"min", st.min},
                   {"max", st.max},
                   {"histogram", st.histogram},
                   {"violations", st.violations.size()}});
    for (const auto& v : st.violations) violations.push_back(v);
    os << structures[i].str() << "," << count << "," << num(st.min) << "," << num(st.max) << ","
       << st.violations.size() << "\n";
  }
  out.result = {{"count_per_structure", count},
                {"max_n", max_n},
                {"structures", per},
                {"histogram_bins", kBins},
                {"total_states", count * static_cast<long long>(structures.size())},
                {"violation_count", violations.size()},
                {"violations", violations}};
  out.exit_code = violations.empty() ? 0 : 1;
  out.csv = os.str();
  return out;
}

CommandResult cmd_figdata(int figure, const RunConfig& cfg) {
  if (figure == 2) return cmd_squeezed(4.0, 200, 200);
  if (figure == 5) {
    const auto structures = structures_up_to(18);
    std::vector<LevelSet> rows(structures.size());
    std::vector<std::vector<std::pair<double, double>>> curves(structures.size());
    parallel_for(structures.size(), cfg.jobs, [&](std::size_t i) {
      rows[i] = canonical_row(structures[i]);
      curves[i] = sweep(structures[i], rows[i], 300);
    });
    CommandResult out;
    json per = json::array();
    std::ostringstream os;
    os << "structure,theta,ent\n";
    for (std::size_t i = 0; i < structures.size(); ++i) {
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      json pts = json::array();
      for (const auto& [th, e] : curves[i]) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
        pts.push_back({th, e});
        os << structures[i].str() << "," << num(th) << "," << num(e) << "\n";
      }
      per.push_back({{"structure", structures[i].str()}, {"levels", rows[i]}, {"min", lo}, {"max", hi}, {"points", pts}});
    }
    out.result = {{"figure", 5}, {"curves", per}};
    out.csv = os.str();
    return out;
  }
  if (figure == 6) {
    const ModeStructure s({2, 2, 2});
    const DensityMatrix rho = seeded_rank2_mixture(s, cfg.seed);
    StateInput in;
    in.structure = s;
    in.density = rho;
    CommandResult out = cmd_roof(in, "ent", RoofGrid{30, 30, true, 1e-6, cfg.jobs});
    out.result["figure"] = 6;
    out.result["state"] = density_to_json(rho);
    return out;
  }
  throw std::invalid_argument("figdata: --figure must be 2, 5 or 6");
}

}  // namespace entkit::cli
