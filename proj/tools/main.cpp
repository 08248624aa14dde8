// Command-line front end. Exit codes: 0 success, 1 failed check or numerical
// error, 2 bad configuration.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>

#include "csv.hpp"
#include "curvrad/acceptance.hpp"
#include "curvrad/bracket_checks.hpp"
#include "curvrad/config.hpp"
#include "curvrad/controls.hpp"
#include "curvrad/curvature_lift.hpp"
#include "curvrad/distance.hpp"
#include "curvrad/errors.hpp"
#include "curvrad/frame_flow.hpp"
#include "curvrad/geodesic.hpp"
#include "curvrad/sampling.hpp"
#include "curvrad/sim2.hpp"

namespace {

using namespace curvrad;
using cli::CsvWriter;

constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

// Either the configured output file or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) fail(ErrorKind::Config, "cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Vec to_vec(const std::vector<double>& v) {
  return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

void require_size(const char* flag, const std::vector<double>& v, int n) {
  if (static_cast<int>(v.size()) != n)
    fail(ErrorKind::Config, std::string("option ") + flag + " needs " + std::to_string(n) +
                                " comma-separated values for this model");
}

std::vector<std::string> indexed(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void append(std::vector<double>& row, const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v[i]);
}

std::vector<std::string> state_header(int n) {
  std::vector<std::string> h{"t"};
  for (const char* p : {"x", "V", "R"}) {
    auto cols = indexed(p, n);
    h.insert(h.end(), cols.begin(), cols.end());
  }
  return h;
}

std::vector<double> state_row(double t, const RadiusPoint& q) {
  std::vector<double> row{t};
  append(row, q.x);
  append(row, q.V);
  append(row, q.R);
  return row;
}

// ---- lift ------------------------------------------------------------------

struct LiftArgs {
  std::string input;
  int sign = 1;
  double kappa_min = 1e-8;
  double speed_tol = 1e-10;
};

int run_lift(const RunConfig& cfg, const LiftArgs& a) {
  const MetricModel model = build_model(cfg);
  const int n = model.dim();
  const cli::Table table = cli::read_csv(a.input);
  if (static_cast<int>(table.header.size()) != n + 1)
    fail(ErrorKind::Config, "lift input needs columns t,x1..x" + std::to_string(n));
  std::vector<double> times;
  Mat pts(static_cast<Eigen::Index>(table.rows.size()), n);
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    times.push_back(table.rows[k][0]);
    for (int i = 0; i < n; ++i) pts(static_cast<Eigen::Index>(k), i) = table.rows[k][i + 1];
  }
  const SampledCurve curve(std::move(times), std::move(pts));
  curve.check_domain(model);
  LiftOptions lo;
  lo.kappa_min = a.kappa_min;
  lo.speed_tol = a.speed_tol;
  lo.constraint_tol = cfg.constraint_tol;
  const LiftedCurve lifted = lift(model, curve, a.sign, lo);

  Output out(cfg.output);
  CsvWriter w(out.stream());
  auto h = state_header(n);
  h.push_back("radius");
  h.push_back("kappa");
  w.header(h);
  for (int k = 0; k < lifted.size(); ++k) {
    const auto& q = lifted.states[static_cast<std::size_t>(k)];
    auto row = state_row(lifted.times[static_cast<std::size_t>(k)], q);
    row.push_back(model.norm(q.x, q.R));
    row.push_back(lifted.kappa[static_cast<std::size_t>(k)]);
    w.row(row);
  }
  return 0;
}

// ---- flow ------------------------------------------------------------------

struct PointArgs {
  std::vector<double> x, R, V;
};

RadiusPoint start_point(const MetricModel& model, const RunConfig& cfg, const PointArgs& p) {
  const int n = model.dim();
  if (p.x.empty() && p.R.empty() && p.V.empty()) {
    Rng rng(cfg.seed);
    return random_radius_point(model, rng);
  }
  require_size("--x", p.x, n);
  require_size("--R", p.R, n);
  require_size("--V", p.V, n);
  RadiusPoint q{to_vec(p.x), to_vec(p.V), to_vec(p.R)};
  require_valid(model, q, cfg.constraint_tol);
  return q;
}

struct FlowArgs {
  PointArgs point;
  std::string field = "f1";
  double time = 1.0;
  int record_every = 1;
  bool no_project = false;
};

int run_flow(const RunConfig& cfg, const FlowArgs& a) {
  const MetricModel model = build_model(cfg);
  const int n = model.dim();
  const FieldSpec spec = FieldSpec::parse(a.field);
  for (int i : spec.indices())
    if (i > n) fail(ErrorKind::Config, "field index " + std::to_string(i) + " exceeds dimension");
  const RadiusPoint q0 = start_point(model, cfg, a.point);
  FlowOptions fo;
  fo.step = cfg.rk_step;
  fo.project = !a.no_project;
  fo.record_every = a.record_every;
  const FlowResult res = flow(model, spec, q0, a.time, fo);

  Output out(cfg.output);
  CsvWriter w(out.stream());
  auto h = state_header(n);
  h.push_back("orthogonality");
  h.push_back("norm_gap");
  w.header(h);
  for (std::size_t k = 0; k < res.states.size(); ++k) {
    auto row = state_row(res.times[k], res.states[k]);
    const auto c = constraint_residual(model, res.states[k]);
    row.push_back(c.orthogonality);
    row.push_back(c.norm_gap);
    w.row(row);
  }
  std::cerr << "max drift before projection " << cli::format_number(res.max_drift)
            << ", max projection distance " << cli::format_number(res.max_projection) << '\n';
  return 0;
}

// ---- brackets --------------------------------------------------------------

struct BracketArgs {
  int points = 10;
  std::string format = "csv";
};

int run_brackets(const RunConfig& cfg, const BracketArgs& a) {
  const MetricModel model = build_model(cfg);
  const int n = model.dim();
  Rng rng(cfg.seed);
  const std::vector<std::string> h{"point", "g1", "g2", "g3", "f21_residual", "x12_residual",
                                   "f1121_residual", "c1", "c1_expected", "commutation_residual"};
  Output out(cfg.output);
  std::ostream& os = out.stream();
  CsvWriter w(os);
  const bool csv = a.format == "csv";
  if (csv) {
    w.header(h);
  } else {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-6s %-10s %-11s %-11s %-11s %-12s %-12s %-11s\n", "point",
                  "growth", "f21", "x12", "f1121", "c1", "expected", "commute");
    os << buf;
  }
  bool ok = true;
  for (int p = 0; p < a.points; ++p) {
    const RadiusPoint q = random_radius_point(model, rng);
    const auto g = growth_vector(model, q, cfg.rank_tol);
    const StructureC1 c1 = structure_c1(model, q);
    const double comm = n >= 3 ? frame_commutation_residual(model, q) : 0.0;
    const std::vector<double> row{static_cast<double>(p), static_cast<double>(g[0]),
                                  static_cast<double>(g[1]), static_cast<double>(g[2]),
                                  f21_formula_residual(model, q), x12_residual(model, q),
                                  f1121_residual(model, q), c1.c1, c1.expected, comm};
    ok = ok && g == std::array<int, 3>{n, 2 * n - 1, 3 * n - 2};
    if (csv) {
      w.row(row);
    } else {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%-6d (%d,%d,%d)%-3s %-11.3e %-11.3e %-11.3e %-12.5e %-12.5e %-11.3e\n",
                    p, g[0], g[1], g[2], "", row[4], row[5], row[6], row[7], row[8], row[9]);
      os << buf;
    }
  }
  return ok ? 0 : kExitCheckFailed;
}

// ---- geodesic --------------------------------------------------------------

struct GeodesicArgs {
  std::vector<double> x, v;
  double time = 1.0;
};

int run_geodesic(const RunConfig& cfg, const GeodesicArgs& a) {
  const MetricModel model = build_model(cfg);
  const int n = model.dim();
  require_size("--x", a.x, n);
  require_size("--v", a.v, n);
  const Mat path = geodesic_path(model, {to_vec(a.x), to_vec(a.v)}, a.time, cfg.rk_step);
  Output out(cfg.output);
  CsvWriter w(out.stream());
  std::vector<std::string> h{"t"};
  auto xs = indexed("x", n);
  h.insert(h.end(), xs.begin(), xs.end());
  h.push_back("speed");
  w.header(h);
  const double dt = a.time / static_cast<double>(path.rows() - 1);
  // Speed along the path from the metric at each node, by central differences.
  for (Eigen::Index k = 0; k < path.rows(); ++k) {
    std::vector<double> row{static_cast<double>(k) * dt};
    const Vec x = path.row(k).transpose();
    append(row, x);
    const Eigen::Index lo = std::max<Eigen::Index>(0, k - 1);
    const Eigen::Index hi = std::min<Eigen::Index>(path.rows() - 1, k + 1);
    const Vec d = (path.row(hi) - path.row(lo)).transpose() / (static_cast<double>(hi - lo) * dt);
    row.push_back(model.norm(x, d));
    w.row(row);
  }
  return 0;
}

// ---- length ----------------------------------------------------------------

struct LengthArgs {
  std::string input;
  std::string profile = "const:a=0,b=1";
};

int run_length(const RunConfig& cfg, const LengthArgs& a) {
  const MetricModel model = build_model(cfg);
  const int n = model.dim();
  const MetricProfile profile = MetricProfile::parse(a.profile);
  const cli::Table table = cli::read_csv(a.input);
  const int tcol = table.column("t");
  if (tcol < 0) fail(ErrorKind::Config, "length input needs a 't' column");
  std::vector<int> cols;
  for (const char* p : {"x", "V", "R"})
    for (const auto& name : indexed(p, n)) {
      const int c = table.column(name);
      if (c < 0) fail(ErrorKind::Config, "length input is missing column '" + name + "'");
      cols.push_back(c);
    }
  std::vector<double> times;
  std::vector<RadiusPoint> states;
  for (const auto& r : table.rows) {
    times.push_back(r[static_cast<std::size_t>(tcol)]);
    RadiusPoint q{Vec(n), Vec(n), Vec(n)};
    for (int i = 0; i < n; ++i) {
      q.x[i] = r[static_cast<std::size_t>(cols[static_cast<std::size_t>(i)])];
      q.V[i] = r[static_cast<std::size_t>(cols[static_cast<std::size_t>(n + i)])];
      q.R[i] = r[static_cast<std::size_t>(cols[static_cast<std::size_t>(2 * n + i)])];
    }
    states.push_back(std::move(q));
  }
  const ControlTrajectory traj = controls_from_path(model, times, states);
  Output out(cfg.output);
  CsvWriter w(out.stream());
  std::vector<std::string> h{"length", "max_admissibility_residual"};
  std::vector<double> row{length(profile, traj), traj.max_residual};
  try {
    const LowerBound lb = lower_bound_check(model, profile, traj, cfg.rk_step);
    h.insert(h.end(), {"speed_bound", "distance", "slack"});
    row.insert(row.end(), {lb.speed_bound, lb.distance, lb.slack});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Profile) throw;
    std::cerr << "lower bound skipped: " << e.what() << '\n';
  }
  w.header(h);
  w.row(row);
  return 0;
}

// ---- distance --------------------------------------------------------------

struct DistanceArgs {
  std::vector<double> x0, x1;
  std::string profile = "radial:a=0,b=1";
  std::vector<double> kappas{0.1, 0.01, 0.001};
  int steps = 2000;
};

int run_distance(const RunConfig& cfg, const DistanceArgs& a) {
  const MetricModel model = build_model(cfg);
  const int n = model.dim();
  require_size("--x0", a.x0, n);
  require_size("--x1", a.x1, n);
  DistanceOptions opts;
  opts.connector.steps = a.steps;
  opts.connector.geodesic_step = cfg.rk_step;
  opts.geodesic_step = cfg.rk_step;
  const DistanceEstimate est = distance_estimate(model, MetricProfile::parse(a.profile),
                                                 to_vec(a.x0), to_vec(a.x1), a.kappas, opts);
  Output out(cfg.output);
  CsvWriter w(out.stream());
  w.header({"kappa", "connector_length", "g_length", "lower_bound", "slack", "deviation",
            "radius_spread", "rate_gap", "iterations"});
  for (const auto& r : est.rows)
    w.row({r.kappa, r.connector_length, r.g_length, r.lower_bound, r.slack, r.deviation,
           r.radius_spread, r.rate_gap, static_cast<double>(r.iterations)});
  std::cerr << "geodesic distance " << cli::format_number(est.geodesic_distance)
            << ", best estimate " << cli::format_number(est.best) << '\n';
  return 0;
}

// ---- sim2 ------------------------------------------------------------------

struct Sim2Args {
  CovectorState s0{0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0};
  double time = 10.0;
  double step = 1e-4;
  int record_every = 100;
  bool normalize = false;
  std::string svg;
};

int run_sim2(const RunConfig& cfg, const Sim2Args& a) {
  const CovectorState s0 = a.normalize ? normalize_level(a.s0) : a.s0;
  const Sim2Trajectory traj = hamiltonian_flow(s0, a.time, a.step, a.record_every);
  std::optional<ProjectedCurvature> pc;
  try {
    pc = projected_curvature(traj);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateSpeed && e.kind() != ErrorKind::InsufficientSamples)
      throw;
    std::cerr << "projected curvature not available: " << e.what() << '\n';
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  Output out(cfg.output);
  CsvWriter w(out.stream());
  w.header({"t", "theta", "rho", "x1", "x2", "p_theta", "p_rho", "p_x1", "p_x2", "H", "epsilon",
            "alpha", "kappa_projection", "kappa_law"});
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const CovectorState& s = traj.states[k];
    const FirstIntegrals fi = first_integrals(s);
    std::vector<double> row{traj.times[k]};
    for (double v : s.to_array()) row.push_back(v);
    row.insert(row.end(), {hamiltonian(s), fi.epsilon, fi.alpha.value_or(nan),
                           pc ? pc->kappa[k] : nan, pc ? pc->law[k] : nan});
    w.row(row);
  }
  if (!a.svg.empty()) {
    std::ofstream svg(a.svg, std::ios::binary);
    if (!svg) fail(ErrorKind::Config, "cannot open SVG file '" + a.svg + "'");
    svg << trajectory_svg(traj);
  }
  return 0;
}

// ---- verify-all ------------------------------------------------------------

struct VerifyArgs {
  std::vector<int> criteria;
};

int run_verify(const RunConfig& cfg, const VerifyArgs& a) {
  for (int id : a.criteria)
    if (id < 1 || id > kCriterionCount)
      fail(ErrorKind::Config, "criterion " + std::to_string(id) + " does not exist");
  const AcceptanceReport report = run_acceptance(cfg, a.criteria);
  {
    Output out(cfg.output);
    out.stream() << report.text();
  }
  // Timings go to stderr so the report itself stays reproducible.
  for (const auto& c : report.criteria) {
    std::cerr << "criterion " << c.id << " " << c.name << ": " << (c.passed() ? "pass" : "FAIL")
              << " (" << std::fixed << std::setprecision(3) << c.runtime << " s";
    if (c.runtime_limit) std::cerr << ", limit " << *c.runtime_limit << " s";
    std::cerr << ")\n";
  }
  return report.passed() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature-radius geometry toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "INI file; [name] sections configure subcommands");

  RunConfig cfg;
  app.add_option("--model", cfg.model, "euclidean:N, sphere2, hyperbolic2 or expr:VARS:MATRIX")
      ->capture_default_str();
  app.add_option("--fd-step", cfg.fd_step, "finite-difference step")->capture_default_str();
  app.add_option("--rk-step", cfg.rk_step, "RK4 step")->capture_default_str();
  app.add_option("--rank-tol", cfg.rank_tol, "relative singular value threshold")
      ->capture_default_str();
  app.add_option("--constraint-tol", cfg.constraint_tol, "radius-point constraint tolerance")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled points")->capture_default_str();
  app.add_option("-o,--output", cfg.output, "output file (default stdout)");

  std::function<int()> action;

  LiftArgs lift_args;
  auto* lift_cmd = app.add_subcommand("lift", "lift a sampled curve (CSV t,x1..xn)");
  lift_cmd->add_option("-i,--input", lift_args.input, "curve CSV")->required();
  lift_cmd->add_option("--sign", lift_args.sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
  lift_cmd->add_option("--kappa-min", lift_args.kappa_min)->capture_default_str();
  lift_cmd->add_option("--speed-tol", lift_args.speed_tol)->capture_default_str();
  lift_cmd->callback([&] { action = [&] { return run_lift(cfg, lift_args); }; });

  auto add_point = [](CLI::App* cmd, PointArgs& p) {
    cmd->add_option("--x", p.x, "base point")->delimiter(',');
    cmd->add_option("--R", p.R, "radius vector")->delimiter(',');
    cmd->add_option("--V", p.V, "velocity vector")->delimiter(',');
  };

  FlowArgs flow_args;
  auto* flow_cmd = app.add_subcommand("flow", "flow a frame field or bracket (f1, f21, f121, ...)");
  flow_cmd->add_option("--field", flow_args.field)->capture_default_str();
  flow_cmd->add_option("--time", flow_args.time)->capture_default_str();
  flow_cmd->add_option("--record-every", flow_args.record_every)->check(CLI::PositiveNumber);
  flow_cmd->add_flag("--no-project", flow_args.no_project, "skip constraint re-projection");
  add_point(flow_cmd, flow_args.point);
  flow_cmd->callback([&] { action = [&] { return run_flow(cfg, flow_args); }; });

  BracketArgs br_args;
  auto* br_cmd = app.add_subcommand("brackets", "bracket residuals and ranks at sampled points");
  br_cmd->add_option("--points", br_args.points)->check(CLI::PositiveNumber)->capture_default_str();
  br_cmd->add_option("--format", br_args.format)->check(CLI::IsMember({"csv", "text"}));
  br_cmd->callback([&] { action = [&] { return run_brackets(cfg, br_args); }; });

  GeodesicArgs geo_args;
  auto* geo_cmd = app.add_subcommand("geodesic", "integrate a geodesic from (x, v)");
  geo_cmd->add_option("--x", geo_args.x)->delimiter(',')->required();
  geo_cmd->add_option("--v", geo_args.v)->delimiter(',')->required();
  geo_cmd->add_option("--time", geo_args.time)->capture_default_str();
  geo_cmd->callback([&] { action = [&] { return run_geodesic(cfg, geo_args); }; });

  LengthArgs len_args;
  auto* len_cmd = app.add_subcommand("length", "sub-Riemannian length of a state CSV");
  len_cmd->add_option("-i,--input", len_args.input, "CSV with t, x*, V*, R* columns")->required();
  len_cmd->add_option("--profile", len_args.profile)->capture_default_str();
  len_cmd->callback([&] { action = [&] { return run_length(cfg, len_args); }; });

  DistanceArgs dist_args;
  auto* dist_cmd = app.add_subcommand("distance", "distance estimates from curvature connectors");
  dist_cmd->add_option("--x0", dist_args.x0)->delimiter(',')->required();
  dist_cmd->add_option("--x1", dist_args.x1)->delimiter(',')->required();
  dist_cmd->add_option("--profile", dist_args.profile)->capture_default_str();
  dist_cmd->add_option("--kappas", dist_args.kappas, "decreasing schedule")->delimiter(',');
  dist_cmd->add_option("--steps", dist_args.steps)->check(CLI::PositiveNumber);
  dist_cmd->callback([&] { action = [&] { return run_distance(cfg, dist_args); }; });

  Sim2Args sim_args;
  auto* sim_cmd = app.add_subcommand("sim2", "normal extremal of the similarity-group model");
  CovectorState& s = sim_args.s0;
  sim_cmd->add_option("--theta", s.theta)->capture_default_str();
  sim_cmd->add_option("--rho", s.rho)->capture_default_str();
  sim_cmd->add_option("--x1", s.x1)->capture_default_str();
  sim_cmd->add_option("--x2", s.x2)->capture_default_str();
  sim_cmd->add_option("--p-theta", s.p_theta)->capture_default_str();
  sim_cmd->add_option("--p-rho", s.p_rho)->capture_default_str();
  sim_cmd->add_option("--p-x1", s.p_x1)->capture_default_str();
  sim_cmd->add_option("--p-x2", s.p_x2)->capture_default_str();
  sim_cmd->add_option("--time", sim_args.time)->capture_default_str();
  sim_cmd->add_option("--step", sim_args.step)->check(CLI::PositiveNumber)->capture_default_str();
  sim_cmd->add_option("--record-every", sim_args.record_every)->check(CLI::PositiveNumber);
  sim_cmd->add_flag("--normalize", sim_args.normalize, "rescale momenta to H = 1/2");
  sim_cmd->add_option("--svg", sim_args.svg, "write an SVG of the trajectory");
  sim_cmd->callback([&] { action = [&] { return run_sim2(cfg, sim_args); }; });

  VerifyArgs ver_args;
  auto* ver_cmd = app.add_subcommand("verify-all", "run every acceptance check");
  ver_cmd->add_option("--criteria", ver_args.criteria, "subset of criterion ids")->delimiter(',');
  ver_cmd->callback([&] { action = [&] { return run_verify(cfg, ver_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    validate(cfg);
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Config ? kExitConfig : kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}
