#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "arcmetric/asymptotics.hpp"
#include "arcmetric/errors.hpp"
#include "arcmetric/geometry.hpp"
#include "arcmetric/io.hpp"
#include "arcmetric/lamination.hpp"
#include "arcmetric/metric.hpp"
#include "arcmetric/topology.hpp"

namespace arcmetric::cli {

namespace {

using io::json;

std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::vector<double> numbers(const std::string& text, std::size_t count, const std::string& flag) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double x = 0.0;
    const auto r = std::from_chars(item.data(), item.data() + item.size(), x);
    if (r.ec != std::errc() || r.ptr != item.data() + item.size())
      throw SchemaError(flag, "'" + item + "' is not a number");
    v.push_back(x);
  }
  if (v.size() != count)
    throw SchemaError(flag, "expected " + std::to_string(count) + " comma-separated numbers");
  return v;
}

SurfaceSignature signature_from_flag(const std::string& text) {
  const auto v = numbers(text, 3, "--surface");
  for (double x : v)
    if (x != std::floor(x) || x < 0) throw SchemaError("--surface", "expected g,n,p as integers");
  return {static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])};
}

/// How points are given on the command line.
enum class Mode { pants, torus, file };

struct Model {
  Surface surface;
  Mode mode;
};

Model model_for(bool pants, bool torus, const std::string& surface) {
  const int chosen = (pants ? 1 : 0) + (torus ? 1 : 0) + (surface.empty() ? 0 : 1);
  if (chosen != 1) throw SchemaError("surface", "give exactly one of --pants, --torus, --surface");
  if (pants) return {Surface::build(0, 0, 3), Mode::pants};
  if (torus) return {Surface::build(1, 0, 1), Mode::torus};
  return {Surface::build(signature_from_flag(surface)), Mode::file};
}

FNPoint point_for(const Model& m, const std::string& value, const std::string& flag) {
  switch (m.mode) {
    case Mode::pants: {
      const auto v = numbers(value, 3, flag);
      return pants_point(v[0], v[1], v[2]);
    }
    case Mode::torus: {
      const auto v = numbers(value, 3, flag);
      return torus_point(v[0], v[1], v[2]);
    }
    case Mode::file: return io::fn_from_json(m.surface, io::read_file(value), flag);
  }
  throw std::logic_error("unreachable mode");
}

/// --pants a,b,c | --torus l,tau,b | --surface g,n,p --fn FILE
struct PointOptions {
  std::string pants, torus, surface, fn;

  void attach(CLI::App* app) {
    app->add_option("--pants", pants, "pair of pants with boundary lengths b1,b2,b3");
    app->add_option("--torus", torus, "one-holed torus with length,twist,boundary");
    app->add_option("--surface", surface, "signature g,n,p; needs --fn");
    app->add_option("--fn", fn, "FN coordinates as JSON");
  }

  std::pair<Model, FNPoint> resolve() const {
    if (!surface.empty() && fn.empty()) throw SchemaError("--fn", "--surface needs --fn");
    if (surface.empty() && !fn.empty()) throw SchemaError("--fn", "--fn needs --surface");
    const Model m = model_for(!pants.empty(), !torus.empty(), surface);
    const std::string& value = !pants.empty() ? pants : !torus.empty() ? torus : fn;
    const char* flag = !pants.empty() ? "--pants" : !torus.empty() ? "--torus" : "--fn";
    return {m, point_for(m, value, flag)};
  }
};

/// --pants | --torus | --surface g,n,p, with points given per option.
struct ModelOptions {
  bool pants = false, torus = false;
  std::string surface;

  void attach(CLI::App* app) {
    app->add_flag("--pants", pants, "points are b1,b2,b3 on the pair of pants");
    app->add_flag("--torus", torus, "points are length,twist,boundary on the one-holed torus");
    app->add_option("--surface", surface, "signature g,n,p; points are FN JSON files");
  }

  Model resolve() const { return model_for(pants, torus, surface); }
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw SchemaError(path, "cannot write file");
  f << text;
}

// Experiment configs.

struct PathConfig {
  Surface surface = Surface::build(0, 0, 3);
  int panel_complexity = 2;
  PathSpec spec;
  std::string csv, summary;
};

Regime regime_from(const json& j, const std::string& field) {
  if (j == "grow") return Regime::grow;
  if (j == "decay") return Regime::decay;
  if (j == "hold") return Regime::hold;
  throw SchemaError(field, "expected one of grow, decay, hold");
}

int panel_from(const json& cfg) {
  if (!cfg.contains("panel_n")) return 2;
  const int n = io::integer_at(cfg["panel_n"], "panel_n");
  if (n < 0) throw SchemaError("panel_n", "must be >= 0");
  return n;
}

void read_outputs(const json& cfg, std::string& csv, std::string& summary) {
  if (!cfg.contains("output")) return;
  const json& o = cfg["output"];
  if (!o.is_object()) throw SchemaError("output", "expected an object");
  if (o.contains("csv")) {
    if (!o["csv"].is_string()) throw SchemaError("output.csv", "expected a path");
    csv = o["csv"].get<std::string>();
  }
  if (o.contains("summary")) {
    if (!o["summary"].is_string()) throw SchemaError("output.summary", "expected a path");
    summary = o["summary"].get<std::string>();
  }
}

PathConfig load_path_config(const json& cfg) {
  PathConfig c;
  c.surface = Surface::build(io::signature_from_json(io::member(cfg, "surface", "config")));
  c.panel_complexity = panel_from(cfg);
  FNPoint initial = io::fn_from_json(c.surface, io::member(cfg, "point", "config"), "point");
  RationalLamination mu =
      io::lamination_from_json(c.surface, io::member(cfg, "lamination", "config"), "lamination");
  const auto grid = cfg.contains("grid") ? io::grid_from_json(cfg["grid"]) : default_grid();
  if (grid.empty()) throw SchemaError("grid", "grid is empty");
  c.spec = PathSpec::from_lamination(c.surface, std::move(mu), std::move(initial), grid);
  if (cfg.contains("regimes")) {
    const json& r = cfg["regimes"];
    if (!r.is_object()) throw SchemaError("regimes", "expected {label: regime}");
    const auto& d = c.surface.decomposition();
    for (const auto& [label, value] : r.items()) {
      const std::string f = "regimes." + label;
      auto in = std::find(d.interior_labels.begin(), d.interior_labels.end(), label);
      auto bd = std::find(d.boundary_labels.begin(), d.boundary_labels.end(), label);
      if (in != d.interior_labels.end())
        c.spec.interior[in - d.interior_labels.begin()] = regime_from(value, f);
      else if (bd != d.boundary_labels.end())
        c.spec.boundary[bd - d.boundary_labels.begin()] = regime_from(value, f);
      else
        throw SchemaError(f, "unknown curve label");
    }
    c.spec.validate(c.surface);
  }
  read_outputs(cfg, c.csv, c.summary);
  return c;
}

json regimes_json(const Surface& s, const PathSpec& spec) {
  json r = json::object();
  const auto& d = s.decomposition();
  for (std::size_t k = 0; k < spec.interior.size(); ++k)
    r[d.interior_labels[k]] = regime_name(spec.interior[k]);
  for (std::size_t j = 0; j < spec.boundary.size(); ++j)
    r[d.boundary_labels[j]] = regime_name(spec.boundary[j]);
  return r;
}

json summary_head(const char* experiment, const PathConfig& c) {
  return {{"experiment", experiment},
          {"surface", io::surface_json(c.surface, c.panel_complexity)},
          {"lamination", io::lamination_json(c.spec.mu)},
          {"regimes", regimes_json(c.surface, c.spec)},
          {"panel_N", c.panel_complexity}};
}

std::string sweep_csv(const std::vector<std::string>& columns, const std::vector<double>& grid,
                      int panel_complexity, const std::vector<std::vector<double>>& values) {
  std::string text = "t,panel_n";
  for (const auto& c : columns) text += "," + c;
  text += "\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    text += io::csv_number(grid[k]) + "," + std::to_string(panel_complexity);
    for (const auto& col : values) text += "," + io::csv_number(col[k]);
    text += "\n";
  }
  return text;
}

struct ExperimentFiles {
  std::string config, csv, summary;

  void attach(CLI::App* app, bool with_csv) {
    app->add_option("config", config, "experiment config (JSON)")->required();
    if (with_csv) app->add_option("--csv", csv, "write the sweep here instead of stdout");
    app->add_option("--summary", summary, "write the JSON summary here");
  }
};

void emit(const ExperimentFiles& files, PathConfig& c, const std::string& csv, const json& summary,
          std::ostream& out) {
  const std::string csv_path = files.csv.empty() ? c.csv : files.csv;
  const std::string summary_path = files.summary.empty() ? c.summary : files.summary;
  write_output(csv_path, csv, out);
  if (!summary_path.empty()) write_output(summary_path, summary.dump(2) + "\n", out);
}

int cmd_inequality(const ExperimentFiles& files, std::ostream& out, std::ostream& err) {
  const json cfg = io::read_file(files.config);
  PathConfig c = load_path_config(cfg);
  std::vector<HomotopyClass> targets;
  if (cfg.contains("targets")) {
    const json& t = cfg["targets"];
    if (!t.is_array()) throw SchemaError("targets", "expected a list of class ids");
    for (std::size_t k = 0; k < t.size(); ++k) {
      const std::string f = "targets[" + std::to_string(k) + "]";
      if (!t[k].is_string()) throw SchemaError(f, "expected a class id");
      try {
        targets.push_back(c.surface.find(t[k].get<std::string>()));
      } catch (const UnsupportedError& e) {
        throw SchemaError(f, e.what());
      }
    }
  } else {
    targets = c.surface.panel(c.panel_complexity).entries;
  }
  const double cap = cfg.contains("cap") ? io::number_at(cfg["cap"], "cap") : 10.0;
  const auto report = verify_key_inequality(c.surface, c.spec, targets, cap);

  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;
  json rows = json::array();
  for (const auto& d : report.targets) {
    columns.push_back(d.id);
    values.push_back(d.upper);
    rows.push_back({{"class", d.id},
                    {"intersection", d.intersection},
                    {"max_lower", d.max_lower},
                    {"max_upper", d.max_upper},
                    {"final_deviation", d.upper.back()},
                    {"flagged", d.flagged},
                    {"exploratory", d.exploratory}});
  }
  for (const auto& s : report.skipped) err << "skipped " << s << "\n";
  json summary = summary_head("inequality", c);
  summary["cap"] = cap;
  summary["targets"] = rows;
  summary["skipped"] = report.skipped;
  summary["note"] =
      "deviation is l(X_t) - e^t i(mu, target); twists are held at their initial values";
  emit(files, c, sweep_csv(columns, report.grid, c.panel_complexity, values), summary, out);
  return kOk;
}

int cmd_boundary_limit(const ExperimentFiles& files, std::ostream& out) {
  const json cfg = io::read_file(files.config);
  PathConfig c = load_path_config(cfg);
  const auto dist = boundary_convergence(c.surface, c.spec, c.surface.panel(c.panel_complexity));
  json summary = summary_head("boundary-limit", c);
  summary["final_t"] = c.spec.grid.back();
  summary["final_distance"] = dist.back();
  emit(files, c, sweep_csv({"distance"}, c.spec.grid, c.panel_complexity, {dist}), summary, out);
  return kOk;
}

int cmd_horo_converge(const ExperimentFiles& files, std::ostream& out) {
  const json cfg = io::read_file(files.config);
  PathConfig c = load_path_config(cfg);
  const FNPoint x0 =
      cfg.contains("base") ? io::fn_from_json(c.surface, cfg["base"], "base") : c.spec.initial;
  std::vector<FNPoint> probes;
  if (cfg.contains("probes")) {
    const json& p = cfg["probes"];
    if (!p.is_array() || p.empty()) throw SchemaError("probes", "expected a nonempty list of points");
    for (std::size_t k = 0; k < p.size(); ++k)
      probes.push_back(io::fn_from_json(c.surface, p[k], "probes[" + std::to_string(k) + "]"));
  } else {
    const int count = cfg.contains("probe_count") ? io::integer_at(cfg["probe_count"], "probe_count") : 5;
    const int seed = cfg.contains("seed") ? io::integer_at(cfg["seed"], "seed") : 1;
    if (count < 1) throw SchemaError("probe_count", "must be >= 1");
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    for (int k = 0; k < count; ++k) probes.push_back(random_point(c.surface, rng));
  }
  const auto dev =
      horo_convergence(c.surface, c.spec, x0, probes, c.surface.panel(c.panel_complexity));
  json summary = summary_head("horo-converge", c);
  summary["probes"] = probes.size();
  summary["final_t"] = c.spec.grid.back();
  summary["final_deviation"] = dev.back();
  emit(files, c, sweep_csv({"max_deviation"}, c.spec.grid, c.panel_complexity, {dev}), summary,
       out);
  return kOk;
}

int cmd_separate(const ExperimentFiles& files, std::ostream& out) {
  const json cfg = io::read_file(files.config);
  const Surface s = Surface::build(io::signature_from_json(io::member(cfg, "surface", "config")));
  const FNPoint x0 = io::fn_from_json(s, io::member(cfg, "point", "config"), "point");
  RationalLamination mu = io::lamination_from_json(s, io::member(cfg, "mu", "config"), "mu");
  RationalLamination nu = io::lamination_from_json(s, io::member(cfg, "nu", "config"), "nu");
  const bool norm = !cfg.contains("normalize") || cfg["normalize"] == true;
  if (norm) {
    mu = normalize(s, mu, x0);
    nu = normalize(s, nu, x0);
  }
  SeparationOptions opt;
  opt.panel_complexity = panel_from(cfg);
  if (cfg.contains("grid")) opt.grid = io::grid_from_json(cfg["grid"]);
  if (cfg.contains("min_gap")) opt.min_gap = io::number_at(cfg["min_gap"], "min_gap");
  if (cfg.contains("epsilons")) {
    const json& e = cfg["epsilons"];
    if (!e.is_array() || e.empty()) throw SchemaError("epsilons", "expected a nonempty list");
    opt.epsilons.clear();
    for (std::size_t k = 0; k < e.size(); ++k)
      opt.epsilons.push_back(io::number_at(e[k], "epsilons[" + std::to_string(k) + "]"));
  }
  std::string csv_unused, summary_path;
  read_outputs(cfg, csv_unused, summary_path);
  if (!files.summary.empty()) summary_path = files.summary;

  const auto w = separation_experiment(s, mu, nu, x0, opt);
  const Panel panel = s.panel(opt.panel_complexity);
  const double lhs = log_ratio_sup(s, nu, w.y, panel);
  const double rhs = log_ratio_sup(s, mu, w.y, panel);
  json summary = {{"experiment", "separate"},
                  {"panel_N", opt.panel_complexity},
                  {"mu", io::lamination_json(mu)},
                  {"nu", io::lamination_json(nu)},
                  {"epsilon", w.epsilon},
                  {"t", w.t},
                  {"target", io::lamination_json(w.target)},
                  {"witness", io::fn_json(s, w.y)},
                  {"lhs", w.lhs},
                  {"rhs", w.rhs},
                  {"gap", w.lhs - w.rhs},
                  {"reverified", lhs - rhs >= opt.min_gap}};
  write_output(summary_path, summary.dump(2) + "\n", out);
  return kOk;
}

int cmd_dt_sphere(const std::string& surface, int samples, int seed, std::ostream& out) {
  const SurfaceSignature sig = signature_from_flag(surface);
  const Surface s = Surface::build(sig);
  const auto dim = sphere_dimension(sig);
  json summary = {{"surface", {sig.genus, sig.punctures, sig.boundaries}},
                  {"coordinate_dimension", dim.coordinate},
                  {"sphere_dimension", dim.sphere}};
  if (!s.tier_one()) {
    summary["round_trip"] = nullptr;
    summary["note"] = "round trip needs a registered Tier-1 surface";
  } else {
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    int passed = 0, symmetric = 0;
    for (int k = 0; k < samples; ++k) {
      const auto mu = sample_adapted_lamination(s, rng);
      const auto c = dt_encode(s, mu);
      if (approx_equal(dt_decode(s, c), mu, 1e-12)) ++passed;
      const auto d = dt_encode_double(s, mu);
      const std::size_t n = c.interior.size(), b = c.theta_hat.size();
      bool ok = d.size() == 2 * n + b;
      for (std::size_t i = 0; ok && i < n; ++i)
        ok = d[i] == c.interior[i] && d[n + b + i].first == c.interior[i].first &&
             d[n + b + i].second == -c.interior[i].second;
      for (std::size_t j = 0; ok && j < b; ++j)
        ok = d[n + j].first == std::max(c.theta_hat[j], 0.0) &&
             d[n + j].second == std::max(-c.theta_hat[j], 0.0);
      if (ok) ++symmetric;
    }
    summary["round_trip"] = {{"passed", passed}, {"total", samples}};
    summary["doubled_symmetry"] = {{"passed", symmetric}, {"total", samples}};
  }
  out << summary.dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lengths, arc metric, laminations and horofunctions on bordered hyperbolic surfaces",
               "arcmetric"};
  app.require_subcommand(1);

  auto* arc = app.add_subcommand("arc-length", "orthogeodesic length of an arc class");
  PointOptions arc_point;
  std::string arc_id;
  arc_point.attach(arc);
  arc->add_option("--arc", arc_id, "arc class id, e.g. a12 or a(1,1)")->required();

  auto* curve = app.add_subcommand("curve-length", "geodesic length of a closed curve class");
  PointOptions curve_point;
  std::string curve_id;
  curve_point.attach(curve);
  curve->add_option("--curve", curve_id, "curve class id, e.g. B1, C1 or c(1,1)")->required();

  auto* dbl = app.add_subcommand("double", "FN coordinates of the double, or a doubled length");
  PointOptions dbl_point;
  std::string dbl_id;
  dbl_point.attach(dbl);
  dbl->add_option("--class", dbl_id, "report l and the doubled length of this class");

  auto* dist = app.add_subcommand("distance", "arc metric d(X,Y) and d(Y,X) over a panel");
  ModelOptions dist_model;
  std::string dist_x, dist_y;
  int dist_n = 2;
  dist_model.attach(dist);
  dist->add_option("--x", dist_x, "point X")->required();
  dist->add_option("--y", dist_y, "point Y")->required();
  dist->add_option("--panel-n", dist_n, "panel complexity")->check(CLI::NonNegativeNumber);

  auto* horo = app.add_subcommand("horofn", "interior or boundary horofunction at Y");
  ModelOptions horo_model;
  std::string horo_base, horo_x, horo_y, horo_mu;
  int horo_n = 2;
  horo_model.attach(horo);
  horo->add_option("--base", horo_base, "base point X0")->required();
  horo->add_option("--y", horo_y, "evaluation point Y")->required();
  auto* hx = horo->add_option("--x", horo_x, "interior point X");
  auto* hl = horo->add_option("--lamination", horo_mu, "lamination JSON file [{class, weight}]");
  hx->excludes(hl);
  horo->add_option("--panel-n", horo_n, "panel complexity")->check(CLI::NonNegativeNumber);

  auto* exp = app.add_subcommand("experiment", "run a shipped experiment");
  exp->require_subcommand(1);
  ExperimentFiles ineq_files, blim_files, horo_files, sep_files;
  auto* ineq = exp->add_subcommand("inequality", "deviation of l(X_t) from e^t i(mu, .)");
  ineq_files.attach(ineq, true);
  auto* blim = exp->add_subcommand("boundary-limit", "projective distance to i(mu, .)");
  blim_files.attach(blim, true);
  auto* hconv = exp->add_subcommand("horo-converge", "interior horofunctions along the path");
  horo_files.attach(hconv, true);
  auto* sep = exp->add_subcommand("separate", "witness separating two laminations");
  sep_files.attach(sep, false);
  auto* sphere = exp->add_subcommand("dt-sphere", "DT coordinate dimensions and round trip");
  std::string sphere_surface;
  int sphere_samples = 50, sphere_seed = 1;
  sphere->add_option("--surface", sphere_surface, "signature g,n,p")->required();
  sphere->add_option("--samples", sphere_samples, "laminations to round-trip")
      ->check(CLI::NonNegativeNumber);
  sphere->add_option("--seed", sphere_seed, "sampler seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*arc) {
      const auto [m, x] = arc_point.resolve();
      const auto cls = m.surface.find(arc_id);
      if (!cls.is_arc()) throw UnsupportedError("'" + arc_id + "' is not an arc");
      out << shortest(arc_length(m.surface, x, cls)) << "\n";
    } else if (*curve) {
      const auto [m, x] = curve_point.resolve();
      out << shortest(curve_length(m.surface, x, m.surface.find(curve_id))) << "\n";
    } else if (*dbl) {
      const auto [m, x] = dbl_point.resolve();
      if (dbl_id.empty()) {
        out << io::fn_json(m.surface, double_point(m.surface, x)).dump(2) << "\n";
      } else {
        const auto cls = m.surface.find(dbl_id);
        const json j = {{"class", cls.id},
                        {"length", class_length(m.surface, x, cls)},
                        {"doubled_length", doubled_length(m.surface, x, cls)}};
        out << j.dump(2) << "\n";
      }
    } else if (*dist) {
      const Model m = dist_model.resolve();
      const FNPoint x = point_for(m, dist_x, "--x"), y = point_for(m, dist_y, "--y");
      const Panel panel = m.surface.panel(dist_n);
      const json j = {{"d_xy", io::metric_json(arc_metric(m.surface, x, y, panel))},
                      {"d_yx", io::metric_json(arc_metric(m.surface, y, x, panel))}};
      out << j.dump(2) << "\n";
    } else if (*horo) {
      const Model m = horo_model.resolve();
      if (horo_x.empty() == horo_mu.empty())
        throw SchemaError("horofn", "give exactly one of --x, --lamination");
      const FNPoint base = point_for(m, horo_base, "--base"), y = point_for(m, horo_y, "--y");
      const Panel panel = m.surface.panel(horo_n);
      const auto h =
          horo_x.empty()
              ? Horofunction::boundary(
                    m.surface, io::lamination_from_json(m.surface, io::read_file(horo_mu)), base,
                    panel)
              : Horofunction::interior(m.surface, point_for(m, horo_x, "--x"), base, panel);
      const json j = {{"kind", h.kind() == Horofunction::Kind::interior ? "interior" : "boundary"},
                      {"value", h(y)},
                      {"offset", h.offset()},
                      {"panel_N", horo_n}};
      out << j.dump(2) << "\n";
    } else if (*ineq) {
      return cmd_inequality(ineq_files, out, err);
    } else if (*blim) {
      return cmd_boundary_limit(blim_files, out);
    } else if (*hconv) {
      return cmd_horo_converge(horo_files, out);
    } else if (*sep) {
      return cmd_separate(sep_files, out);
    } else if (*sphere) {
      return cmd_dt_sphere(sphere_surface, sphere_samples, sphere_seed, out);
    }
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}

}  // namespace arcmetric::cli
