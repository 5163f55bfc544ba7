#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lagsurf/core_types.hpp"
#include "lagsurf/immersion.hpp"

namespace lagsurf {

/// Normalization of the mean curvature in H + lambda X^perp = 0.
enum class CurvatureConvention {
  /// H is the average of the principal curvature vectors (engine default).
  HalfTrace,
  /// H is the trace; equivalent to HalfTrace with lambda halved. Under this
  /// convention a product of curves is self-similar iff each factor solves
  /// k + lambda <X, N> = 0 with the same lambda.
  FullTrace,
};

struct SolitonParams {
  double lambda = 1.0;
  CurvatureConvention convention = CurvatureConvention::HalfTrace;
};

/// |H + lambda X^perp| over the grid.
ResidualReport self_similar_residual(const ImmersionSpec& spec, const SolitonParams& params, const GridSpec& grid);

// ---------------------------------------------------------------------------
// Planar curves from curvature laws
// ---------------------------------------------------------------------------

/// Curvature as a function of position, unit tangent and unit normal N = i T.
using CurvatureLaw = std::function<double(cplx position, cplx tangent, cplx normal)>;

/// k = -lambda <X, N>: self-similar planar curves.
CurvatureLaw shrinker_law(double lambda);

/// Profile law of the centered complex extensors that solve the soliton equation:
/// k = <gamma, N> (1/|gamma|^2 - mu lambda), with mu = 2 under HalfTrace and
/// mu = 1 under FullTrace. Circles of radius 1/sqrt(lambda) solve the HalfTrace law.
CurvatureLaw centered_soliton_law(double lambda, CurvatureConvention convention = CurvatureConvention::HalfTrace);

struct LawInitial {
  cplx position;
  double angle = 0.0;  // direction of the unit tangent
};

struct LawCurve {
  CurvePlanar curve;
  /// Parameter values where the radial speed <gamma, gamma'> crosses zero
  /// upwards (local minima of |gamma|).
  std::vector<double> radial_minima;
  /// Set when integration stopped early (blow-up or origin crossing).
  std::optional<std::string> diagnostic;
};

/// Integrates gamma' = e^{i theta}, theta' = k(gamma, gamma', i gamma') by
/// adaptive Runge-Kutta at relative tolerance tol over s_range; the result is
/// a unit-speed spline through the dense output.
LawCurve planar_curve_from_curvature_law(const CurvatureLaw& law, const LawInitial& initial, Interval s_range,
                                         double tol = 1e-10);

struct ClosedSolitonProfile {
  LawCurve profile;    // q radial periods
  double r0 = 0.0;     // initial radius (a minimum of |gamma|, tangent orthogonal to gamma)
  double period = 0.0; // arclength of one radial period
  double rotation_per_period = 0.0;
  double closure_error = 0.0;
  int curvature_maxima = 0;
  int winding = 0;
};

/// Shoots the centered soliton law for a closed (p, q) profile: bisection on
/// the initial radius so that the polar angle advances 2 pi p / q per radial
/// period. Requires 1/4 < p/q < 1/2 and gcd(p, q) = 1.
ClosedSolitonProfile shoot_centered_soliton(int p, int q, double lambda = 1.0,
                                            CurvatureConvention convention = CurvatureConvention::HalfTrace);

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

/// X(s, t) = (r e^{it}, Gamma(s)).
ImmersionSpec make_product_circle_curve(double r, const CurvePlanar& curve);

/// X(s, t) = (r1 e^{is}, r2 e^{it}).
ImmersionSpec make_product_torus(double r1, double r2);

/// (1/sqrt 2)(e^{is}, e^{it}).
ImmersionSpec make_clifford_torus();

/// Conformal Lagrangian product X = (a1(s) g1(t), a2(s) g2(t)) of unit-speed
/// Legendrian curves of H^3_1 and S^3.
ImmersionSpec cc_product_immersion(const CurveAdSLegendrian& alpha, const CurveS3Legendrian& gamma);

/// Curvature of a unit-speed Legendrian curve of S^3: gamma'' = -gamma + k J gamma'.
double legendrian_curvature(const C2Jet& gamma);
/// Curvature of a unit-speed Legendrian curve of H^3_1: alpha'' = alpha + k J alpha'.
double ads_legendrian_curvature(const C2Jet& alpha);

/// Mean curvature of the product from curve curvatures alone:
/// H = (k_alpha J X_s + k_gamma J X_t) / (2 e^{2u}), e^{2u} = |X_s|^2 = |X_t|^2.
PointC2 cc_mean_curvature_oracle(const CurveAdSLegendrian& alpha, const CurveS3Legendrian& gamma, double s, double t);

// ---------------------------------------------------------------------------
// Obstructions
// ---------------------------------------------------------------------------

struct ObstructionScan {
  std::vector<double> lambdas;
  std::vector<ResidualReport> reports;
  double min_max = 0.0;     // min over lambda of the max residual
  double best_lambda = 0.0;
};

ObstructionScan soliton_obstruction_scan(const ImmersionSpec& spec, const std::vector<double>& lambdas,
                                         const GridSpec& grid,
                                         CurvatureConvention convention = CurvatureConvention::HalfTrace);

/// {+-1/4, +-1/2, +-1, +-2}.
std::vector<double> standard_lambda_set();

}  // namespace lagsurf
