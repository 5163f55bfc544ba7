#include "lagsurf/ruled.hpp"

#include <limits>

#include "lagsurf/curves.hpp"
#include "lagsurf/diffgeo.hpp"
#include "lagsurf/numerics.hpp"

namespace lagsurf {

namespace {

RealPrimitive zero_primitive(Interval domain, double s0) {
  return std::make_shared<const numerics::CumulativeIntegral<double>>([](double) { return 0.0; }, domain, s0, 2);
}

void require_directrix(const CurveS3Legendrian& gamma, const CurvePlanar& alpha) {
  if (!gamma.unit_speed()) throw DomainError("ruled directrix must be unit speed (rulings would be parallel)");
  const ResidualReport r = curve_constraint_residual(gamma, 128);
  if (r.max_abs > 1e-6) throw ConstraintError("ruled directrix violates the Legendrian constraints", r.max_abs);
  const Interval g = gamma.domain(), a = alpha.domain();
  if (a.lo > g.lo + 1e-12 || a.hi < g.hi - 1e-12) throw DomainError("density domain must cover the directrix domain");
}

ImmersionSpec build(const CurveS3Legendrian& gamma, const CurvePlanar& alpha, RealFunction drift, double s0) {
  require_directrix(gamma, alpha);
  const Interval dom = gamma.domain();
  if (!dom.contains(s0)) throw DomainError("base point s0 outside the directrix domain");
  auto integrand = [gamma, alpha, drift](double u) {
    const C2Jet g = gamma(u);
    return alpha(u).value * g.d1 + drift(u).value * g.value;
  };
  auto table = std::make_shared<const numerics::CumulativeIntegral<PointC2>>(integrand, dom, s0);
  family::Ruled f{gamma, alpha, std::move(drift), constant_real(0.0), s0, std::move(table), zero_primitive(dom, s0)};
  return ImmersionSpec(std::move(f), dom, kRulingDomain, false);
}

const family::Ruled& require_ruled(const ImmersionSpec& spec) {
  const auto* f = spec.as<family::Ruled>();
  if (!f) throw DomainError(std::string("expected a ruled spec, got ") + std::string(family_name(spec.family())));
  return *f;
}

}  // namespace

ImmersionSpec make_ruled(const CurveS3Legendrian& gamma, const CurvePlanar& alpha, double s0) {
  return build(gamma, alpha, constant_real(0.0), s0);
}

ImmersionSpec make_ruled_general(const CurveS3Legendrian& gamma, const CurvePlanar& alpha, RealFunction drift,
                                 double s0) {
  return build(gamma, alpha, std::move(drift), s0);
}

ImmersionSpec make_blair_helicoid(double k, double l, double x0, double y0) {
  const Interval dom{0.0, kTwoPi};
  const cplx a(x0, y0);
  CurvePlanar density([a](double) { return PlanarJet{a, 0.0, 0.0}; }, dom, false);
  return make_ruled(curves::phased_great_circle(k, l, dom), density, 0.0);
}

ImmersionSpec make_product_line_curve(const CurvePlanar& curve) {
  return ImmersionSpec(family::ProductLineCurve{curve}, curve.domain(), kRulingDomain, false);
}

ImmersionSpec orthogonalize_rulings(const ImmersionSpec& spec) {
  const family::Ruled& f = require_ruled(spec);
  // F = <X_s, gamma> = T' + <V', gamma>; the new shift rate is -<V', gamma>.
  const CurveS3Legendrian gamma = f.gamma;
  const CurvePlanar alpha = f.alpha;
  const RealFunction drift = f.drift;
  RealFunction rate = [gamma, alpha, drift](double s) {
    const C2Jet g = gamma(s);
    const PlanarJet a = alpha(s);
    const RealJet d = drift(s);
    const PointC2 v1 = a.value * g.d1 + d.value * g.value;
    const PointC2 v2 = a.d1 * g.d1 + a.value * g.d2 + d.d1 * g.value + d.value * g.d1;
    return RealJet{-dot(v1, g.value), -(dot(v2, g.value) + dot(v1, g.d1))};
  };
  auto shift = std::make_shared<const numerics::CumulativeIntegral<double>>(
      [rate](double s) { return rate(s).value; }, spec.s_domain(), f.s0);
  family::Ruled g{f.gamma, f.alpha, f.drift, std::move(rate), f.s0, f.translation, std::move(shift)};
  return ImmersionSpec(std::move(g), spec.s_domain(), spec.t_domain(), spec.periodic_t());
}

ResidualReport ruling_orthogonality(const ImmersionSpec& spec, const GridSpec& grid) {
  return sweep_grid("ruling_orthogonality", grid, [&](double s, double t) {
    const SurfaceJet j = surface_jet(spec, s, t);
    const double scale = norm(j.xs) * norm(j.xt);
    return scale > 0.0 ? dot(j.xs, j.xt) / scale : std::numeric_limits<double>::quiet_NaN();
  });
}

double ruled_mean_curvature_oracle(const ImmersionSpec& spec, double s, double t) {
  const family::Ruled& f = require_ruled(spec);
  const double defect = f.shift_rate(s).value + f.drift(s).value;
  if (std::abs(defect) > 1e-9) throw DomainError("mean-curvature oracle needs orthogonal rulings");
  const cplx a = f.alpha(s).value;
  const double u = t + (*f.shift)(s) + a.real();
  const double den = u * u + a.imag() * a.imag();
  if (!(den > 0.0)) throw DegenerateError("ruled surface is singular at this point");
  return -a.imag() / den;
}

double legendrian_frame_defect(const CurveS3Legendrian& gamma, int n_samples) {
  const Interval d = gamma.domain();
  double worst = 0.0;
  for (int k = 0; k <= n_samples; ++k) {
    const C2Jet g = gamma(d.lo + d.length() * k / n_samples);
    const PointC2 frame[4] = {g.value, J(g.value), g.d1, J(g.d1)};
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) worst = std::max(worst, std::abs(dot(frame[a], frame[b]) - (a == b ? 1.0 : 0.0)));
  }
  return worst;
}

RuledObstruction ruled_soliton_obstruction(const ImmersionSpec& spec, const std::vector<double>& lambdas,
                                           const GridSpec& grid) {
  const family::Ruled& f = require_ruled(spec);
  RuledObstruction out;
  out.min_h_spread = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.n_s; ++i) {
    const double s = grid.s_at(i);
    const PointC2 n_t = J(f.gamma(s).value);
    double x_lo = 1e300, x_hi = -1e300, h_lo = 1e300, h_hi = -1e300;
    for (int j = 0; j < grid.n_t; ++j) {
      const SurfaceJet jet = surface_jet(spec, s, grid.t_at(j));
      const Metric2 m = first_fundamental_form(jet);
      if (m.degenerate()) continue;
      const double x = dot(jet.x, n_t), h = dot(mean_curvature(jet, m), n_t);
      x_lo = std::min(x_lo, x), x_hi = std::max(x_hi, x);
      h_lo = std::min(h_lo, h), h_hi = std::max(h_hi, h);
    }
    if (x_hi < x_lo) continue;
    out.max_x_spread = std::max(out.max_x_spread, x_hi - x_lo);
    out.min_h_spread = std::min(out.min_h_spread, h_hi - h_lo);
  }
  out.scan = soliton_obstruction_scan(spec, lambdas, grid);
  ReportBuilder rb("ruled_soliton_obstruction", grid);
  rb.add(out.scan.min_max, 0.0, 0.0);
  out.report = std::move(rb).finish();
  return out;
}

}  // namespace lagsurf
