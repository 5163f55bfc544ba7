#pragma once

#include "lagsurf/core_types.hpp"
#include "lagsurf/immersion.hpp"

namespace lagsurf {

/// Circle traced by t -> X(s, t) at a fixed station s.
struct CircleFrame {
  PointC2 center;
  double radius = 0.0;
  PointC2 e1, e2;
};

/// Complex extensor X = gamma(s) (cos t, sin t). gamma must avoid the origin.
ImmersionSpec make_centered_type1(const CurvePlanar& gamma);

/// Complex extensor translated by int_{s0}^s e^{i phi(u)} (W1(u), W2(u)) du.
ImmersionSpec make_general_type1(const CurvePlanar& gamma, RealFunction w1, RealFunction w2, double s0);

/// Hopf-type surface X = c e^{it} gamma(s) over a Legendrian curve of S^3.
ImmersionSpec make_centered_type2(const CurveS3Legendrian& gamma, double c);

ImmersionSpec make_general_type2(const CurveS3Legendrian& gamma, double c, ComplexFunction w, double s0,
                                 Type2Form form = Type2Form::Orthogonal);

/// X = c (a1 e^{it}, a2 e^{-it}) over a Legendrian curve of the anti-de Sitter space.
ImmersionSpec make_centered_type3(const CurveAdSLegendrian& alpha, double c);

ImmersionSpec make_general_type3(const CurveAdSLegendrian& alpha, double c, ComplexFunction w, double s0);

/// Translation term V(s) (zero for centered families).
PointC2 circle_center(const ImmersionSpec& spec, double s);

/// Center, radius and orthonormal basis of the leaf circle at s. Throws
/// DomainError for non-cyclic specs.
CircleFrame circle_frame(const ImmersionSpec& spec, double s);

/// max_t | |X(s,t) - center| - radius | over n_t samples.
double leaf_roundness(const ImmersionSpec& spec, double s, int n_t = 64);

/// r(s)^2 K(s) at n_samples stations; the report holds the maximum deviation
/// from the mean value. Call r2k_values for the raw samples.
ResidualReport r2K_invariant(const ImmersionSpec& spec, int n_samples);
std::vector<double> r2k_values(const ImmersionSpec& spec, int n_samples);

}  // namespace lagsurf
