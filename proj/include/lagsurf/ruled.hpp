#pragma once

#include <vector>

#include "lagsurf/core_types.hpp"
#include "lagsurf/immersion.hpp"
#include "lagsurf/solitons.hpp"

namespace lagsurf {

/// Default ruling parameter range for grids.
inline constexpr Interval kRulingDomain{-5.0, 5.0};

/// X(s, t) = t gamma(s) + int_{s0}^s alpha(u) gamma'(u) du over a unit-speed
/// Legendrian directrix of S^3.
ImmersionSpec make_ruled(const CurveS3Legendrian& gamma, const CurvePlanar& alpha, double s0);

/// As make_ruled with an extra drift along the rulings: V' = alpha gamma' + drift gamma.
/// The rulings are then no longer orthogonal to the s-lines.
ImmersionSpec make_ruled_general(const CurveS3Legendrian& gamma, const CurvePlanar& alpha, RealFunction drift,
                                 double s0);

/// Directrix (k + il)(cos s, sin s), constant density x0 + i y0.
ImmersionSpec make_blair_helicoid(double k, double l, double x0, double y0);

/// X(s, t) = (t, Gamma(s)): the parallel-rulings case.
ImmersionSpec make_product_line_curve(const CurvePlanar& curve);

/// Reparametrizes X(s, t) -> X(s, t + T(s)) with T' = -<X_s, X_t>, so that
/// the rulings become orthogonal to the s-lines. Requires a Ruled spec.
ImmersionSpec orthogonalize_rulings(const ImmersionSpec& spec);

/// max |<X_s, X_t>| / (|X_s| |X_t|) over the grid.
ResidualReport ruling_orthogonality(const ImmersionSpec& spec, const GridSpec& grid);

/// 2 <H, i gamma> = -y / ((t + T + x)^2 + y^2) for an orthogonal ruled spec
/// with density alpha = x + i y and shift T.
double ruled_mean_curvature_oracle(const ImmersionSpec& spec, double s, double t);

/// Largest pairing defect of the frame (gamma, J gamma, gamma', J gamma')
/// over n samples of a unit-speed Legendrian curve.
double legendrian_frame_defect(const CurveS3Legendrian& gamma, int n_samples = 256);

struct RuledObstruction {
  /// max over s of (max - min over t) of <X, i gamma>.
  double max_x_spread = 0.0;
  /// min over s of (max - min over t) of <H, i gamma>.
  double min_h_spread = 0.0;
  ObstructionScan scan;
  /// Report whose max_abs is the scan's min over lambda of the max residual.
  ResidualReport report;
};

RuledObstruction ruled_soliton_obstruction(const ImmersionSpec& spec, const std::vector<double>& lambdas,
                                           const GridSpec& grid);

}  // namespace lagsurf
