#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lagsurf/core_types.hpp"
#include "lagsurf/immersion.hpp"

namespace lagsurf {

/// Profile state of a Hamiltonian-stationary complex extensor.
struct HsProfileState {
  double r = 1.0;      // leaf radius, > 0
  double alpha = 0.0;  // theta - phi
  double c_flux = 0.0; // C = r (alpha' + 2 phi')
};

struct HsRates {
  double dr = 0.0;
  double dalpha = 0.0;
};

/// r' = cos alpha, alpha' = (C - 2 sin alpha) / r. Throws DomainError for r <= 0.
HsRates hs_profile_rhs(const HsProfileState& state);

/// r^2 (C - 2 sin alpha).
double hs_first_integral(const HsProfileState& state);

enum class PhiMethod { Quadrature, ClosedForm };

/// Total polar angle swept per alpha-period,
/// Phi(C) = int_0^{2 pi} sin a / (C - 2 sin a) da, for |C| > 2.
/// Phi(-C) = Phi(C). The quadrature refuses |C| < 2 + 1e-6.
double phi_of_C(double C, PhiMethod method = PhiMethod::Quadrature);

/// 2m / sqrt(m^2 - 1) with m = 1 + 2p/q.
double winding_C_closed_form(int p, int q);

/// The C > 2 with Phi(C) = 2 pi p / q, root-found on the quadrature.
double solve_C_for_winding(int p, int q);

struct HsTrajectory {
  double c_flux = 0.0;
  std::vector<double> s, r, alpha, phi;
  std::vector<double> period_ends;  // arclength at each completed alpha-period
  std::optional<std::string> diagnostic;
};

/// Integrates (r, alpha, phi) from `initial` for `alpha_periods` periods of
/// alpha (or to s_max, whichever comes first).
HsTrajectory integrate_hs_profile(const HsProfileState& initial, int alpha_periods, double s_max, double tol = 1e-10,
                                  double sample_step = 0.01);

/// max |E(s) - E(0)| / |E(0)| along the trajectory.
double first_integral_drift(const HsTrajectory& traj);

struct ClosedHsCurve {
  CurvePlanar curve;  // unit speed, q alpha-periods
  int p = 0, q = 0;
  double c_flux = 0.0;
  double period = 0.0;
  double rotation_per_period = 0.0;
  double closure_error = 0.0;
  double symmetry_error = 0.0;
  int self_intersections = 0;
  double first_integral_drift = 0.0;
};

/// Closed q-symmetric profile with winding 2 pi p / q per period, started at
/// r = 1, alpha = pi/2. Throws ConstraintError when closure or symmetry exceed 1e-6.
ClosedHsCurve build_closed_hs_curve(int p, int q, int samples_per_period = 4096);

/// Transversal crossings of the closed polyline through n uniform samples.
int count_self_intersections(const CurvePlanar& curve, int n_samples = 4096);

enum class HsRegime { BoundedClosedFamily, SpiralingEnds, CirclesAndSpirals, SpecialLagrangian };

HsRegime classify_regime(double C);
std::string_view regime_name(HsRegime regime);

/// Centered type II over the torus curve (c e^{i a s}, sqrt(1-c^2) e^{i b s}),
/// a = sqrt(1-c^2)/c, b = -c/sqrt(1-c^2), with unit scale.
ImmersionSpec make_contact_stationary_hopf(double c);

/// Laplace-Beltrami of the Lagrangian angle over the grid.
ResidualReport hs_residual_suite(const ImmersionSpec& spec, const GridSpec& grid);

struct RefinementStudy {
  std::vector<int> levels;
  std::vector<double> max_abs;       // max |Delta beta| per level
  std::vector<double> successive;    // max |D_n - D_2n| at the coarsest nodes
  double observed_order = 0.0;       // log2(successive[0] / successive[1])
};

/// Delta beta on nested grids (n per direction, n+1 nodes in non-periodic
/// directions) for each level, compared at the nodes of the coarsest level.
RefinementStudy laplacian_refinement_study(const ImmersionSpec& spec, const std::vector<int>& levels = {32, 64, 128});

}  // namespace lagsurf
