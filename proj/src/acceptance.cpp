#include "curvrad/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "curvrad/bracket_checks.hpp"
#include "curvrad/curvature_lift.hpp"
#include "curvrad/distance.hpp"
#include "curvrad/errors.hpp"
#include "curvrad/frame_flow.hpp"
#include "curvrad/geodesic.hpp"
#include "curvrad/model_spec.hpp"
#include "curvrad/sampling.hpp"
#include "curvrad/sim2.hpp"

namespace curvrad {

bool CriterionResult::checks_passed() const {
  if (!error.empty() || rows.empty()) return false;
  for (const auto& r : rows)
    if (!r.passed) return false;
  return true;
}

namespace {

double score(const CheckRow& r) {
  switch (r.compare) {
    case Compare::AtMost:
      return r.bound != 0.0 ? r.measured / std::abs(r.bound) : r.measured;
    case Compare::AtLeast:
      return r.measured > 0.0 ? std::abs(r.bound) / r.measured
                              : std::numeric_limits<double>::infinity();
    case Compare::Below:
      return 0.0;
  }
  return 0.0;
}

const char* symbol(Compare c) {
  switch (c) {
    case Compare::AtMost:
      return "<=";
    case Compare::AtLeast:
      return ">=";
    case Compare::Below:
      return "<";
  }
  return "?";
}

}  // namespace

const CheckRow* CriterionResult::worst() const {
  const CheckRow* best = nullptr;
  for (const auto& r : rows) {
    if (!r.passed) return &r;
    if (!best || score(r) > score(*best)) best = &r;
  }
  return best;
}

bool AcceptanceReport::passed() const {
  if (criteria.empty()) return false;
  for (const auto& c : criteria)
    if (!c.passed()) return false;
  return true;
}

bool AcceptanceReport::checks_passed() const {
  if (criteria.empty()) return false;
  for (const auto& c : criteria)
    if (!c.checks_passed()) return false;
  return true;
}

std::string AcceptanceReport::text() const {
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-4s %-58s %-14s %-3s %-12s %s\n", "id", "check", "measured", "",
                "tolerance", "result");
  out += buf;
  for (const auto& c : criteria) {
    std::snprintf(buf, sizeof buf, "%-4d %s: %s\n", c.id, c.name.c_str(), c.property.c_str());
    out += buf;
    for (const auto& r : c.rows) {
      std::snprintf(buf, sizeof buf, "%-4s %-58s %-14.6e %-3s %-12.3e %s\n", "", r.label.c_str(),
                    r.measured, symbol(r.compare), r.bound, r.passed ? "pass" : "FAIL");
      out += buf;
    }
    if (!c.error.empty()) {
      out += "     error: " + c.error + "\n";
    }
    out += std::string("     => ") + (c.checks_passed() ? "pass" : "FAIL") + "\n";
  }
  out += std::string("overall: ") + (checks_passed() ? "pass" : "FAIL") + "\n";
  return out;
}

namespace {

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  void at_most(std::string label, double measured, double bound) {
    add(std::move(label), measured, bound, Compare::AtMost, measured <= bound);
  }
  void at_least(std::string label, double measured, double bound) {
    add(std::move(label), measured, bound, Compare::AtLeast, measured >= bound);
  }
  void below(std::string label, double measured, double bound) {
    add(std::move(label), measured, bound, Compare::Below, measured < bound);
  }

 private:
  void add(std::string label, double measured, double bound, Compare c, bool ok) {
    // NaN never passes.
    r_.rows.push_back({std::move(label), measured, bound, c, ok && !std::isnan(measured)});
  }
  CriterionResult& r_;
};

// Each criterion draws from its own stream so that criteria can run alone or
// in any order and still see the same points.
Rng criterion_rng(const RunConfig& cfg, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed & 0xffffffffu),
                    static_cast<std::uint32_t>(cfg.seed >> 32), static_cast<std::uint32_t>(id)};
  return Rng(seq);
}

MetricModel model_named(const std::string& spec, const RunConfig& cfg) {
  return parse_model(spec, cfg.fd_step);
}

const std::vector<std::string> kThreeModels = {"euclidean:3", "sphere2", "hyperbolic2"};
const std::vector<std::string> kSurfaces = {"euclidean:2", "sphere2", "hyperbolic2"};

Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

double max_abs(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1. f₁ orbit on flat ℝ² against the circle closed form.
void flat_f1_orbit(const RunConfig& cfg, Recorder& rec) {
  const MetricModel m = euclidean(2);
  const Vec x0 = vec2(0.5, -0.25);
  const Vec R0 = vec2(0.6, 0.8);
  const Vec P0 = vec2(-R0[1], R0[0]);
  RadiusPoint q0{x0, P0, R0};
  FlowOptions opts;
  opts.step = cfg.rk_step;
  const FlowResult res = flow(m, FieldSpec({1}), q0, 2.0 * std::numbers::pi, opts);
  double err = 0.0;
  for (std::size_t k = 0; k < res.states.size(); ++k) {
    const double t = res.times[k];
    const Vec x = x0 + R0 + P0 * std::sin(t) - R0 * std::cos(t);
    const Vec R = -P0 * std::sin(t) + R0 * std::cos(t);
    const Vec V = P0 * std::cos(t) + R0 * std::sin(t);
    const RadiusPoint& q = res.states[k];
    err = std::max({err, max_abs(q.x - x), max_abs(q.R - R), max_abs(q.V - V)});
  }
  rec.at_most("sup |flow - closed form|, t in [0, 2pi]", err, 1e-6);
}

// 2. [f₂,f₁] against its coordinate formula.
void bracket_identity(const RunConfig& cfg, Recorder& rec) {
  Rng rng = criterion_rng(cfg, 2);
  for (const auto& name : kThreeModels) {
    const MetricModel m = model_named(name, cfg);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i)
      worst = std::max(worst, f21_formula_residual(m, random_radius_point(m, rng)));
    rec.at_most(name + ": max f21 residual over 100 points", worst, 1e-4);
  }
}

// 3. Growth vector (n, 2n−1, 3n−2).
void growth(const RunConfig& cfg, Recorder& rec) {
  Rng rng = criterion_rng(cfg, 3);
  std::vector<std::string> names = kSurfaces;
  names.push_back("euclidean:3");
  for (const auto& name : names) {
    const MetricModel m = model_named(name, cfg);
    const int n = m.dim();
    const std::array<int, 3> expected{n, 2 * n - 1, 3 * n - 2};
    int mismatches = 0;
    for (int i = 0; i < 50; ++i)
      if (growth_vector(m, random_radius_point(m, rng), cfg.rank_tol) != expected) ++mismatches;
    rec.at_most(name + ": points with growth != (" + std::to_string(expected[0]) + "," +
                    std::to_string(expected[1]) + "," + std::to_string(expected[2]) + "), of 50",
                mismatches, 0.0);
  }
}

// 4. π∘e^{t f₂₁} = exp(tV) and π∘e^{t f₁₂₁} = exp(tR).
void factorization(const RunConfig& cfg, Recorder& rec) {
  Rng rng = criterion_rng(cfg, 4);
  for (const std::string name : {"sphere2", "hyperbolic2"}) {
    const MetricModel m = model_named(name, cfg);
    double v = 0.0, r = 0.0;
    for (int i = 0; i < 5; ++i) {
      // Radii below 0.6 keep both unit-time geodesics inside the chart.
      const RadiusPoint q = random_radius_point(m, rng, 0.3, 0.6);
      const FactorizationResidual res = geodesic_factorization_residual(m, q, 1.0, cfg.rk_step);
      v = std::max(v, res.f21_vs_exp_v);
      r = std::max(r, res.f121_vs_exp_r);
    }
    rec.at_most(name + ": sup |pi e^{t f21} - exp(tV)|, 5 points", v, 1e-5);
    rec.at_most(name + ": sup |pi e^{t f121} - exp(tR)|, 5 points", r, 1e-5);
  }
}

// 5. c₁ = |R|²·sec.
void c1_recovery(const RunConfig& cfg, Recorder& rec) {
  Rng rng = criterion_rng(cfg, 5);
  {
    const MetricModel m = model_named("euclidean:3", cfg);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
      worst = std::max(worst, std::abs(structure_c1(m, random_radius_point(m, rng)).c1));
    rec.at_most("euclidean:3: max |c1|, 20 points", worst, 1e-6);
  }
  for (const auto& [name, sign] :
       std::vector<std::pair<std::string, double>>{{"sphere2", 1.0}, {"hyperbolic2", -1.0}}) {
    const MetricModel m = model_named(name, cfg);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const RadiusPoint q = random_radius_point(m, rng);
      const double r2 = m.inner(q.x, q.R, q.R);
      const double expected = sign * r2;
      worst = std::max(worst, std::abs(structure_c1(m, q).c1 - expected) / std::abs(expected));
    }
    rec.at_most(name + ": max |c1 - " + (sign > 0 ? "" : "(-)") + "|R|^2| / |R|^2, 20 points",
                worst, 1e-3);
  }
}

// 6. f₁₁₂₁ against the Riemann tensor path.
void riemann_identity(const RunConfig& cfg, Recorder& rec) {
  Rng rng = criterion_rng(cfg, 6);
  for (const auto& name : kThreeModels) {
    const MetricModel m = model_named(name, cfg);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
      worst = std::max(worst, f1121_residual(m, random_radius_point(m, rng)));
    rec.at_most(name + ": max f1121 dual-path residual, 20 points", worst, 1e-3);
  }
}

// 7. Constraint drift along frame flows, measured before re-projection.
void constraint_invariance(const RunConfig& cfg, Recorder& rec) {
  Rng rng = criterion_rng(cfg, 7);
  std::vector<std::string> names = kSurfaces;
  names.push_back("euclidean:3");
  for (const auto& name : names) {
    const MetricModel m = model_named(name, cfg);
    double worst = 0.0;
    for (int p = 0; p < 3; ++p) {
      const RadiusPoint q = random_radius_point(m, rng, 0.3, 0.6);
      for (int i = 1; i <= m.dim(); ++i) {
        FlowOptions opts;
        opts.step = cfg.rk_step;
        opts.record_every = 1000000;
        worst = std::max(worst, flow(m, FieldSpec({i}), q, 1.0, opts).max_drift);
      }
    }
    rec.at_most(name + ": max pre-projection drift, every f_i, 3 points", worst, 1e-6);
  }
}

// 8. R_{λg} = R_g.
void homothety_invariance(const RunConfig& cfg, Recorder& rec) {
  static constexpr int K = 201;
  auto sample = [](const std::function<Vec(double)>& c, double t0, double t1) {
    std::vector<double> times(K);
    Mat pts(K, 2);
    for (int k = 0; k < K; ++k) {
      times[static_cast<std::size_t>(k)] = t0 + (t1 - t0) * k / (K - 1);
      pts.row(k) = c(times[static_cast<std::size_t>(k)]).transpose();
    }
    return SampledCurve(std::move(times), std::move(pts));
  };
  struct Case {
    std::string label;
    MetricModel model;
    SampledCurve curve;
  };
  std::vector<Case> cases;
  cases.push_back({"euclidean:2 circle r=2", model_named("euclidean:2", cfg),
                   sample([](double t) { return vec2(2 * std::cos(t), 2 * std::sin(t)); }, 0.0,
                          std::numbers::pi)});
  cases.push_back({"sphere2 latitude pi/4", model_named("sphere2", cfg),
                   sample([](double t) { return vec2(std::numbers::pi / 4, t); }, 0.0, 3.0)});
  cases.push_back(
      {"hyperbolic2 circle", model_named("hyperbolic2", cfg),
       sample([](double t) { return vec2(std::cos(t) * 0.5, 1.5 + 0.5 * std::sin(t)); }, 0.0, 3.0)});
  LiftOptions lo;
  lo.constraint_tol = cfg.constraint_tol;
  for (const auto& c : cases) {
    for (double lambda : {0.25, 4.0}) {
      rec.at_most(c.label + ", lambda=" + fmt("%g", lambda) + ": sup |R_lg - R_g|",
                  homothety_invariance_check(c.model, c.curve, lambda, lo), 1e-8);
    }
  }
}

const std::vector<double> kSchedule = {0.1, 0.01, 0.001};

// 9. Distance reconstruction from connector lengths.
void distance_reconstruction(const RunConfig& cfg, Recorder& rec) {
  const MetricProfile profile = MetricProfile::radial("0", "1");
  struct Case {
    std::string name;
    Vec x0, x1;
    double d;
  };
  const double eq = std::numbers::pi / 2;
  for (const Case& c : {Case{"euclidean:2", vec2(0, 0), vec2(1, 0), 1.0},
                        Case{"sphere2", vec2(eq, 0), vec2(eq, 0.5), 0.5}}) {
    const MetricModel m = model_named(c.name, cfg);
    const DistanceEstimate est = distance_estimate(m, profile, c.x0, c.x1, kSchedule);
    double step_change = -std::numeric_limits<double>::infinity();
    double floor_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < est.rows.size(); ++i) {
      floor_gap = std::min(floor_gap, est.rows[i].g_length - c.d);
      if (i > 0) step_change = std::max(step_change, est.rows[i].g_length - est.rows[i - 1].g_length);
    }
    rec.below(c.name + ": largest change of successive estimates", step_change, 0.0);
    rec.at_least(c.name + ": min (estimate - d)", floor_gap, -1e-6);
    rec.at_most(c.name + ": |final estimate - d| / d",
                std::abs(est.rows.back().g_length - c.d) / c.d, 1e-2);
  }
}

// 10. Connectors converge uniformly to the geodesic.
void minimizing_sequence(const RunConfig& cfg, Recorder& rec) {
  const MetricProfile profile = MetricProfile::radial("0", "1");
  {
    const MetricModel m = model_named("euclidean:2", cfg);
    const auto dev = minimizing_sequence_convergence(m, vec2(0, 0), vec2(1, 0), profile, kSchedule);
    double change = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < dev.size(); ++i) {
      if (i > 0) change = std::max(change, dev[i] - dev[i - 1]);
      const double sagitta = kSchedule[i] / 8.0;  // κd²/8 with d = 1
      lo = std::min(lo, dev[i] / sagitta);
      hi = std::max(hi, dev[i] / sagitta);
    }
    rec.below("euclidean:2: largest change of successive deviations", change, 0.0);
    rec.at_least("euclidean:2: min deviation / sagitta", lo, 0.5);
    rec.at_most("euclidean:2: max deviation / sagitta", hi, 2.0);
  }
  {
    const MetricModel m = model_named("sphere2", cfg);
    const double eq = std::numbers::pi / 2;
    const auto dev =
        minimizing_sequence_convergence(m, vec2(eq, 0), vec2(eq, 0.5), profile, kSchedule);
    double change = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < dev.size(); ++i) change = std::max(change, dev[i] - dev[i - 1]);
    rec.below("sphere2: largest change of successive deviations", change, 0.0);
  }
}

std::vector<CovectorState> generic_covectors(const RunConfig& cfg) {
  // Shared by criteria 11 and 12, so both use the stream of 11.
  Rng rng = criterion_rng(cfg, 11);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<CovectorState> out;
  while (out.size() < 10) {
    CovectorState s;
    s.theta = std::numbers::pi * unit(rng);
    s.rho = 0.5 * unit(rng);
    s.x1 = unit(rng);
    s.x2 = unit(rng);
    s.p_theta = normal(rng);
    s.p_rho = normal(rng);
    s.p_x1 = normal(rng);
    s.p_x2 = normal(rng);
    // Generic means α is defined and the level set is non-degenerate.
    if (std::hypot(s.p_x1, s.p_x2) < 0.1 || hamiltonian(s) < 1e-3) continue;
    out.push_back(normalize_level(s));
  }
  return out;
}

std::vector<Sim2Trajectory> generic_flows(const RunConfig& cfg) {
  return hamiltonian_flow_batch(generic_covectors(cfg), 10.0, 1e-4, 10);
}

// 11. H, ε, α conserved.
void sim2_conservation(const RunConfig& cfg, Recorder& rec) {
  double dH = 0.0, de = 0.0, da = 0.0;
  for (const auto& traj : generic_flows(cfg)) {
    const CovectorState& s0 = traj.states.front();
    const double H0 = hamiltonian(s0);
    const FirstIntegrals f0 = first_integrals(s0);
    for (const auto& s : traj.states) {
      const FirstIntegrals f = first_integrals(s);
      dH = std::max(dH, std::abs(hamiltonian(s) - H0));
      de = std::max(de, std::abs(f.epsilon - f0.epsilon));
      da = std::max(da, std::abs(std::remainder(first_integral_alpha(s) - *f0.alpha,
                                                2.0 * std::numbers::pi)));
    }
  }
  rec.at_most("max |H(t) - H(0)|, 10 covectors, T=10", dH, 1e-7);
  rec.at_most("max |eps(t) - eps(0)|", de, 1e-5);
  rec.at_most("max |alpha(t) - alpha(0)|", da, 1e-5);
}

// 12. Curvature of the (ρ,θ) projection.
void sim2_curvature_law(const RunConfig& cfg, Recorder& rec) {
  double worst = 0.0;
  for (const auto& traj : generic_flows(cfg))
    worst = std::max(worst, projected_curvature_residual(traj));
  rec.at_most("max |kappa - eps e^rho sin(theta - alpha)|, 10 covectors", worst, 1e-3);
}

// 13. [X⃗, f₁] vanishes exactly for homothety generators.
void homothety_generator(const RunConfig& cfg, Recorder& rec) {
  const MetricModel m = model_named("euclidean:2", cfg);
  Rng rng = criterion_rng(cfg, 13);
  const VectorField rotation = [](const Vec& x) { return vec2(-x[1], x[0]); };
  const VectorField dilation = [](const Vec& x) { return vec2(x[0], x[1]); };
  double rot = 0.0, dil = 0.0;
  for (int i = 0; i < 10; ++i) {
    const RadiusPoint q = random_radius_point(m, rng);
    rot = std::max(rot, homothety_generator_residual(m, rotation, q.x, q.R));
    dil = std::max(dil, homothety_generator_residual(m, dilation, q.x, q.R));
  }
  rec.at_most("rotation (-y, x): max |[X, f1]|, 10 points", rot, 1e-5);
  rec.at_most("dilation (x, y): max |[X, f1]|, 10 points", dil, 1e-5);
  const VectorField bad = [](const Vec& x) { return vec2(x[0] * x[0], 0.0); };
  rec.at_least("(x^2, 0) at x=(1,0), R=(0,1): |[X, f1]|",
               homothety_generator_residual(m, bad, vec2(1, 0), vec2(0, 1)), 0.1);
}

struct Spec {
  const char* name;
  const char* property;
  std::optional<double> runtime_limit;
  void (*run)(const RunConfig&, Recorder&);
};

const Spec kSpecs[] = {
    {"flat-f1-orbit", "f1 orbits on flat R^2 are circles", 1.0, flat_f1_orbit},
    {"bracket-identity", "[f2,f1] = (V, -G(V,R), -G(V,V))", std::nullopt, bracket_identity},
    {"growth-vector", "bracket flag has growth (n, 2n-1, 3n-2)", std::nullopt, growth},
    {"geodesic-factorization", "f21 and f121 flows project to exp(tV) and exp(tR)", std::nullopt,
     factorization},
    {"c1-recovery", "coefficient of f1 in f1121 is |R|^2 sec(R,V)", std::nullopt, c1_recovery},
    {"f1121-riemann", "f1121 matches its Riemann-tensor expression", std::nullopt,
     riemann_identity},
    {"constraint-invariance", "frame flows preserve <R,V>=0 and |R|=|V|", std::nullopt,
     constraint_invariance},
    {"homothety-invariance", "curvature radius is unchanged under g -> lambda g", std::nullopt,
     homothety_invariance},
    {"distance-reconstruction", "constant-curvature connector lengths decrease to d_g", 10.0,
     distance_reconstruction},
    {"minimizing-sequence", "connectors converge uniformly to the geodesic", std::nullopt,
     minimizing_sequence},
    {"sim2-conservation", "H, eps, alpha are first integrals of the SIM(2) flow", 5.0,
     sim2_conservation},
    {"sim2-curvature-law", "projected curvature equals eps e^rho sin(theta - alpha)", std::nullopt,
     sim2_curvature_law},
    {"homothety-generator", "[X, f1] = 0 exactly for homothety generators", std::nullopt,
     homothety_generator},
    {"determinism", "identical configs give identical reports", std::nullopt, nullptr},
};

CriterionResult run_timed(int id, const std::function<void(Recorder&)>& body) {
  const Spec& spec = kSpecs[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = spec.name;
  r.property = spec.property;
  r.runtime_limit = spec.runtime_limit;
  Recorder rec(r);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(rec);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const RunConfig& cfg) {
  if (id < 1 || id > kCriterionCount)
    fail(ErrorKind::InvalidArgument, "criterion id out of range: " + std::to_string(id));
  if (id == kCriterionCount) {
    return run_timed(id, [&](Recorder& rec) {
      std::vector<int> rest;
      for (int i = 1; i < kCriterionCount; ++i) rest.push_back(i);
      const std::string a = run_acceptance(cfg, rest).text();
      const std::string b = run_acceptance(cfg, rest).text();
      std::size_t diff = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
      for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] != b[i]) ++diff;
      rec.at_most("differing bytes between two report runs", static_cast<double>(diff), 0.0);
    });
  }
  validate(cfg);
  return run_timed(id, [&](Recorder& rec) { kSpecs[id - 1].run(cfg, rec); });
}

AcceptanceReport run_acceptance(const RunConfig& cfg, const std::vector<int>& ids) {
  validate(cfg);
  AcceptanceReport report;
  std::vector<int> todo = ids;
  if (todo.empty())
    for (int i = 1; i <= kCriterionCount; ++i) todo.push_back(i);
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  for (int id : todo) report.criteria.push_back(run_criterion(id, cfg));
  return report;
}

}  // namespace curvrad
