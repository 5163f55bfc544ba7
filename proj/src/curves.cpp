#include "lagsurf/curves.hpp"

#include <memory>

#include "lagsurf/numerics.hpp"

namespace lagsurf::curves {

namespace {
const cplx I(0.0, 1.0);
}

CurvePlanar circle(double radius, Interval domain) {
  return CurvePlanar(
      [radius](double s) {
        const cplx e = std::exp(I * s);
        return PlanarJet{radius * e, radius * I * e, -radius * e};
      },
      domain, std::abs(radius) == 1.0);
}

CurvePlanar circle_arclength(double radius, Interval domain) {
  if (!(radius > 0)) throw DomainError("circle radius must be positive");
  return CurvePlanar(
      [radius](double s) {
        const cplx e = std::exp(I * (s / radius));
        return PlanarJet{radius * e, I * e, -e / radius};
      },
      domain, true);
}

CurvePlanar line(cplx point, cplx direction, Interval domain) {
  if (std::abs(direction) == 0.0) throw DegenerateError("line direction vanishes");
  return CurvePlanar([point, direction](double s) { return PlanarJet{point + s * direction, direction, cplx{}}; },
                     domain, std::abs(std::abs(direction) - 1.0) < 1e-15);
}

CurvePlanar spiral(Interval domain) {
  return CurvePlanar(
      [](double s) {
        const cplx e = std::exp(I * s);
        const cplx v = (1.0 + s) * e;
        const cplx d1 = e + I * v;
        const cplx d2 = I * e + I * d1;
        return PlanarJet{v, d1, d2};
      },
      domain, false);
}

CurvePlanar ellipse(double a, double b, Interval domain) {
  return CurvePlanar(
      [a, b](double s) {
        return PlanarJet{cplx(a * std::cos(s), b * std::sin(s)), cplx(-a * std::sin(s), b * std::cos(s)),
                         cplx(-a * std::cos(s), -b * std::sin(s))};
      },
      domain, false);
}

CurvePlanar identity_curve(Interval domain) {
  return CurvePlanar([](double s) { return PlanarJet{cplx(s, 0.0), cplx(1.0, 0.0), cplx{}}; }, domain, true);
}

CurvePlanar from_samples(std::vector<double> knots, std::vector<PlanarJet> samples, bool arclength) {
  auto spline = std::make_shared<const numerics::QuinticHermite>(std::move(knots), std::move(samples));
  const Interval dom = spline->domain();
  return CurvePlanar([spline](double s) { return (*spline)(s); }, dom, arclength);
}

CurveS3Legendrian great_circle(Interval domain) {
  return CurveS3Legendrian(
      [](double s) {
        const double c = std::cos(s), n = std::sin(s);
        return C2Jet{{c, n}, {-n, c}, {-c, -n}};
      },
      domain, true);
}

CurveS3Legendrian hopf_great_circle(Interval domain) {
  return torus_curve(1.0 / std::sqrt(2.0), domain);
}

CurveS3Legendrian torus_curve(double c, Interval domain) {
  if (!(c > 0.0 && c < 1.0)) throw DomainError("torus curve parameter must lie in (0, 1)");
  const double cc = std::sqrt(1.0 - c * c);
  const double a = cc / c, b = -c / cc;
  return CurveS3Legendrian(
      [c, cc, a, b](double s) {
        const cplx e1 = std::exp(I * (a * s)), e2 = std::exp(I * (b * s));
        const PointC2 v{c * e1, cc * e2};
        const PointC2 d1{c * I * a * e1, cc * I * b * e2};
        const PointC2 d2{-c * a * a * e1, -cc * b * b * e2};
        return C2Jet{v, d1, d2};
      },
      domain, true);
}

CurveS3Legendrian phased_great_circle(double k, double l, Interval domain) {
  if (std::abs(k * k + l * l - 1.0) > 1e-12) throw DomainError("phased great circle needs k^2 + l^2 = 1");
  const cplx phase(k, l);
  return CurveS3Legendrian(
      [phase](double s) {
        const double c = std::cos(s), n = std::sin(s);
        return C2Jet{phase * PointC2{c, n}, phase * PointC2{-n, c}, phase * PointC2{-c, -n}};
      },
      domain, true);
}

CurveS3Legendrian s3_point(PointC2 p, Interval domain) {
  return CurveS3Legendrian([p](double) { return C2Jet{p, {}, {}}; }, domain, false);
}

CurveAdSLegendrian hyperbola(Interval domain) {
  return CurveAdSLegendrian(
      [](double s) {
        const double sh = std::sinh(s), ch = std::cosh(s);
        return C2Jet{{sh, ch}, {ch, sh}, {sh, ch}};
      },
      domain, true);
}

CurveAdSLegendrian ads_torus_curve(double rho, Interval domain) {
  if (!(rho > 0.0)) throw DomainError("anti-de Sitter torus curve needs rho > 0");
  const double A = std::sinh(rho), B = std::cosh(rho);
  const double a = B / A, b = A / B;
  return CurveAdSLegendrian(
      [A, B, a, b](double s) {
        const cplx e1 = std::exp(I * (a * s)), e2 = std::exp(I * (b * s));
        return C2Jet{{A * e1, B * e2}, {A * I * a * e1, B * I * b * e2}, {-A * a * a * e1, -B * b * b * e2}};
      },
      domain, true);
}

CurveAdSLegendrian ads_point(double theta0, Interval domain) {
  const cplx e = std::exp(I * theta0);
  return CurveAdSLegendrian([e](double) { return C2Jet{{0.0, e}, {}, {}}; }, domain, false);
}

ComplexFunction exp_i(double frequency, cplx amplitude) {
  return [frequency, amplitude](double u) {
    const cplx v = amplitude * std::exp(I * (frequency * u));
    return ComplexJet{v, I * frequency * v};
  };
}

RealFunction linear_real(double a, double b) {
  return [a, b](double u) { return RealJet{a + b * u, b}; };
}

}  // namespace lagsurf::curves
