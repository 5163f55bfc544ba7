#pragma once

#include <vector>

#include "lagsurf/core_types.hpp"

// Closed-form generating curves and the spline-backed curve used for ODE output.
namespace lagsurf::curves {

// Planar curves.
CurvePlanar circle(double radius, Interval domain);             // radius * e^{is}
CurvePlanar circle_arclength(double radius, Interval domain);   // radius * e^{is/radius}
CurvePlanar line(cplx point, cplx direction, Interval domain);  // point + s * direction
CurvePlanar spiral(Interval domain);                            // (1 + s) e^{is}
CurvePlanar ellipse(double a, double b, Interval domain);       // a cos s + i b sin s
CurvePlanar identity_curve(Interval domain);                    // s (real axis)

/// Curve through sampled jets (quintic Hermite).
CurvePlanar from_samples(std::vector<double> knots, std::vector<PlanarJet> samples, bool arclength);

// Legendrian curves of S^3.
CurveS3Legendrian great_circle(Interval domain);       // (cos s, sin s)
CurveS3Legendrian hopf_great_circle(Interval domain);  // (e^{is}, e^{-is}) / sqrt 2
/// (c e^{ias}, sqrt(1-c^2) e^{ibs}) with a = sqrt(1-c^2)/c, b = -c/sqrt(1-c^2): unit speed, Legendrian.
CurveS3Legendrian torus_curve(double c, Interval domain);
/// (k + il)(cos s, sin s) with k^2 + l^2 = 1.
CurveS3Legendrian phased_great_circle(double k, double l, Interval domain);
/// Constant curve (point of S^3).
CurveS3Legendrian s3_point(PointC2 p, Interval domain);

// Legendrian curves of the anti-de Sitter space H^3_1.
CurveAdSLegendrian hyperbola(Interval domain);  // (sinh s, cosh s)
/// (sinh rho e^{i coth(rho) s}, cosh rho e^{i tanh(rho) s}): unit speed, Legendrian.
CurveAdSLegendrian ads_torus_curve(double rho, Interval domain);
/// alpha_1 = 0, alpha_2 = e^{i theta0}: the degenerate point curve.
CurveAdSLegendrian ads_point(double theta0, Interval domain);

// Translation densities.
ComplexFunction exp_i(double frequency, cplx amplitude = 1.0);  // amplitude e^{i frequency u}
RealFunction linear_real(double a, double b);                   // a + b u

}  // namespace lagsurf::curves
