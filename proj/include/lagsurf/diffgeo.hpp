#pragma once

#include <vector>

#include "lagsurf/core_types.hpp"
#include "lagsurf/immersion.hpp"

namespace lagsurf {

/// Value and first/second partial derivatives of the immersion at (s, t).
/// Translation terms are read from the ImmersionSpec's tabulated cumulative integrals.
SurfaceJet surface_jet(const ImmersionSpec& spec, double s, double t);

/// E = |xs|^2, F = <xs, xt>, G = |xt|^2.
Metric2 first_fundamental_form(const SurfaceJet& jet);

struct NormalFrame {
  PointC2 n1;  // J xs, normalized
  PointC2 n2;  // J xt made orthogonal to n1, normalized
};

NormalFrame normal_frame(const SurfaceJet& jet);

/// Component of v orthogonal to the tangent plane span(xs, xt).
PointC2 normal_part(const SurfaceJet& jet, const Metric2& metric, const PointC2& v);

/// Mean curvature vector with the half-trace convention:
/// H = (G xss + E xtt - 2F xst)^perp / (2 (EG - F^2)).
PointC2 mean_curvature(const SurfaceJet& jet, const Metric2& metric);

/// |omega(xs, xt)| / (|xs| |xt|).
double lagrangian_residual(const SurfaceJet& jet);

/// Argument of det_C of the Gram-Schmidt orthonormalized frame (xs, xt), in (-pi, pi].
double lagrangian_angle(const SurfaceJet& jet);

/// K = <e1, J e2> for an orthonormal pair.
double kahler_angle(const PointC2& e1, const PointC2& e2);

struct BetaDerivatives {
  double beta_s = 0.0;
  double beta_t = 0.0;
};

/// beta_s, beta_t as the imaginary parts of the logarithmic derivatives of
/// det_C(xs, xt); no branch unwrapping is involved.
BetaDerivatives beta_derivatives(const SurfaceJet& jet);

/// Lagrangian-angle derivatives and metric sampled on a grid (row-major, s-major).
struct BetaField {
  GridSpec grid;
  std::vector<double> beta_s, beta_t;
  std::vector<double> e, f, g;
  /// Nodes excluded as degenerate (metric determinant vanishes).
  std::vector<bool> excluded;
  std::vector<std::string> warnings;

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * grid.n_t + j; }
};

BetaField beta_derivative_field(const ImmersionSpec& spec, const GridSpec& grid);

/// Laplace-Beltrami of the Lagrangian angle at every node, in divergence form
/// (1/sqrt(det g)) [d_s(sqrt(det g)(g^ss b_s + g^st b_t)) + d_t(sqrt(det g)(g^st b_s + g^tt b_t))],
/// by second-order central differences. Boundary nodes (and t-boundaries when
/// the grid is not periodic) are NaN.
std::vector<double> laplace_beltrami_values(const BetaField& field);

/// max |Delta beta| over interior nodes. Grids must be at least 16 x 16.
ResidualReport laplace_beltrami_beta(const BetaField& field);

/// Maximum normalized Lagrangian residual over a grid; degenerate nodes are
/// skipped with a warning.
ResidualReport lagrangian_residual_report(const ImmersionSpec& spec, const GridSpec& grid);

/// Evaluates f at every node (in parallel) and reduces |f| into a report.
/// f returns NaN for nodes to be skipped.
ResidualReport sweep_grid(std::string name, const GridSpec& grid, const std::function<double(double, double)>& f);

}  // namespace lagsurf
