#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "curvrad/simd/kernels.hpp"

namespace curvrad {

using Vec2 = Eigen::Vector2d;
using Mat3 = Eigen::Matrix3d;

// Osculating-circle coordinates of a point (y, R) of TR²∖{0}:
//   y = x + r(cosθ, sinθ),  R = −r(cosθ, sinθ).
struct CircleCoords {
  double theta = 0.0;
  double r = 1.0;
  double x1 = 0.0;
  double x2 = 0.0;

  double rho() const;
};

// Throws ZeroRadius when R = 0. θ is returned in (−π, π].
CircleCoords to_circle_coords(const Vec2& y, const Vec2& R);
std::pair<Vec2, Vec2> from_circle_coords(const CircleCoords& c);

// Q = [[r cosθ, −r sinθ, x₁], [r sinθ, r cosθ, x₂], [0, 0, 1]].
Mat3 embed_group(const CircleCoords& c);
CircleCoords circle_coords_from_group(const Mat3& Q);
// Largest deviation of Q from the form above (bottom row, rotation-scaling block).
double group_form_residual(const Mat3& Q);

// Generators with F_⋆f₁ = −Q·E₁ and F_⋆f₂ = Q·E₂.
Mat3 generator_e1();
Mat3 generator_e2();

struct LeftInvariantFrame {
  Mat3 f1;
  Mat3 f2;
};

LeftInvariantFrame left_invariant_frame(const Mat3& Q);

// Pushes the surface frame at (y, R) on flat ℝ² (f₁ = (V, −V), f₂ = (0, R),
// V = R rotated by +90°) through the chart change and F by finite
// differences and returns the largest gap to left_invariant_frame.
double frame_pushforward_residual(const Vec2& y, const Vec2& R);

// The frame in circle coordinates, obtained by finite differences of the
// chart change: columns are (θ̇, ṙ, ẋ₁, ẋ₂) for f₁ and f₂.
Eigen::Matrix<double, 4, 2> circle_frame(const CircleCoords& c);

struct SubmersionResidual {
  // Largest gap in P_⋆((1/r)f₂) = −X₁ and P_⋆f₁ = −X₂.
  double holds;
  // Largest gap in P_⋆((1/r)f₁) = −X₁ and P_⋆f₂ = X₂ (the labels swapped).
  double swapped;
};

// Projection P(θ, r, x₁, x₂) = (θ, x₁, x₂) onto SE(2) with its frame
// X₁ = cosθ ∂_{x₁} + sinθ ∂_{x₂}, X₂ = ∂_θ.
SubmersionResidual submersion_residual(const CircleCoords& c);

// Phase point (θ, ρ, x₁, x₂, p_θ, p_ρ, p_{x₁}, p_{x₂}) with ρ = log r.
struct CovectorState {
  double theta = 0.0, rho = 0.0, x1 = 0.0, x2 = 0.0;
  double p_theta = 0.0, p_rho = 0.0, p_x1 = 0.0, p_x2 = 0.0;

  std::array<double, 8> to_array() const;
  static CovectorState from_array(const std::array<double, 8>& a);
};

// H = ½[p_θ² + (p_ρ − e^ρcosθ p_{x₁} − e^ρsinθ p_{x₂})²]
double hamiltonian(const CovectorState& s);
// Hamilton's equations (∂H/∂p, −∂H/∂q), hand differentiated.
CovectorState hamiltonian_rhs(const CovectorState& s);

struct FirstIntegrals {
  double epsilon = 0.0;
  std::optional<double> alpha;  // empty when ε = 0
};

FirstIntegrals first_integrals(const CovectorState& s);
// α, throwing UndefinedAngle when ε = 0.
double first_integral_alpha(const CovectorState& s);

// Scales the momenta so that H = ½. Throws InvalidArgument when H = 0.
CovectorState normalize_level(const CovectorState& s);

struct Sim2Trajectory {
  std::vector<double> times;
  std::vector<CovectorState> states;
};

// RK4 flow of Hamilton's equations for time T with the given step, keeping
// every record_every-th state plus the last. Throws NonFinite on overflow.
// `kernels` selects an instruction set (default: the active one).
Sim2Trajectory hamiltonian_flow(const CovectorState& s0, double T, double step,
                                int record_every = 1,
                                const simd::KernelTable* kernels = nullptr);

// Several independent flows advanced together, one SIMD lane per phase point.
std::vector<Sim2Trajectory> hamiltonian_flow_batch(const std::vector<CovectorState>& s0, double T,
                                                   double step, int record_every = 1,
                                                   const simd::KernelTable* kernels = nullptr);

struct ProjectedCurvature {
  std::vector<double> kappa;  // signed curvature of t ↦ (θ, ρ) by finite differences
  std::vector<double> law;    // ε e^ρ sin(θ − α) / √(2H)
  double residual = 0.0;      // sup |kappa − law| over samples 2 … K−3
};

// Orientation: θ is the first axis, κ = (θ̇ρ̈ − ρ̇θ̈)/(θ̇² + ρ̇²)^{3/2}. On the
// level H = ½ the law reads κ = ε e^ρ sin(θ − α). Throws DegenerateSpeed
// when the projection stalls and InsufficientSamples below 5 samples.
ProjectedCurvature projected_curvature(const Sim2Trajectory& traj, double speed_tol = 1e-8);
double projected_curvature_residual(const Sim2Trajectory& traj);

// Two polylines: the (ρ, θ) projection and the planar trace
// y = x + e^ρ(cosθ, sinθ).
std::string trajectory_svg(const Sim2Trajectory& traj);

}  // namespace curvrad
