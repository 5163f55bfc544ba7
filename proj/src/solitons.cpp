#include "lagsurf/solitons.hpp"

#include <limits>
#include <numeric>

#include <boost/math/tools/roots.hpp>

#include "lagsurf/curves.hpp"
#include "lagsurf/diffgeo.hpp"
#include "lagsurf/ode.hpp"

namespace lagsurf {

namespace {

const cplx I(0.0, 1.0);
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double convention_factor(CurvatureConvention c) { return c == CurvatureConvention::HalfTrace ? 1.0 : 2.0; }

}  // namespace

ResidualReport self_similar_residual(const ImmersionSpec& spec, const SolitonParams& params, const GridSpec& grid) {
  if (!std::isfinite(params.lambda) || params.lambda == 0.0) throw DomainError("soliton lambda must be finite and nonzero");
  const double factor = convention_factor(params.convention);
  return sweep_grid("self_similar", grid, [&](double s, double t) {
    const SurfaceJet jet = surface_jet(spec, s, t);
    const Metric2 m = first_fundamental_form(jet);
    if (m.degenerate()) return kNaN;
    const PointC2 h = factor * mean_curvature(jet, m);
    return norm(h + params.lambda * normal_part(jet, m, jet.x));
  });
}

CurvatureLaw shrinker_law(double lambda) {
  return [lambda](cplx x, cplx, cplx n) { return -lambda * dot2(x, n); };
}

CurvatureLaw centered_soliton_law(double lambda, CurvatureConvention convention) {
  const double mu = convention == CurvatureConvention::HalfTrace ? 2.0 : 1.0;
  return [lambda, mu](cplx x, cplx, cplx n) { return dot2(x, n) * (1.0 / std::norm(x) - mu * lambda); };
}

namespace {

using LawState = std::array<double, 4>;  // x, y, theta, polar angle (unwrapped)

numerics::Trajectory<4> run_law(const CurvatureLaw& law, const LawInitial& init, Interval s_range, double tol,
                                int stop_after_minima, double sample_step) {
  auto rhs = [&law](double, const LawState& y) {
    const cplx x(y[0], y[1]);
    const cplx tangent = std::exp(I * y[2]);
    const double k = law(x, tangent, I * tangent);
    return LawState{tangent.real(), tangent.imag(), k, (tangent / x).imag()};
  };
  numerics::EventSpec<4> radial_min;
  radial_min.g = [](double, const LawState& y) {
    return dot2(cplx(y[0], y[1]), std::exp(I * y[2]));
  };
  radial_min.direction = +1;
  radial_min.stop_after = stop_after_minima;
  numerics::OdeOptions opt;
  opt.rel_tol = tol;
  opt.abs_tol = 0.01 * tol;
  opt.sample_step = sample_step;
  opt.max_step = 0.05;
  auto valid = [&law](const LawState& y) -> std::optional<std::string> {
    const cplx x(y[0], y[1]);
    if (std::abs(x) < 1e-9) return "origin crossing";
    const cplx tangent = std::exp(I * y[2]);
    if (std::abs(law(x, tangent, I * tangent)) > 1e8) return "curvature blow-up";
    return std::nullopt;
  };
  const LawState y0{init.position.real(), init.position.imag(), init.angle, std::arg(init.position)};
  return numerics::integrate_ode<4>(rhs, y0, s_range.lo, s_range.hi, opt, {radial_min}, valid);
}

LawCurve to_law_curve(const CurvatureLaw& law, const numerics::Trajectory<4>& traj) {
  // Position and tangent angle are splined separately; the jets re-evaluate the
  // law, so gamma'' matches the curvature law at every parameter.
  auto curvature = [law](cplx x, double theta) {
    const cplx tangent = std::exp(I * theta);
    return law(x, tangent, I * tangent);
  };
  std::vector<double> knots;
  std::vector<PlanarJet> pos, ang;
  knots.reserve(traj.s.size());
  pos.reserve(traj.s.size());
  ang.reserve(traj.s.size());
  for (std::size_t k = 0; k < traj.s.size(); ++k) {
    if (!knots.empty() && !(traj.s[k] > knots.back() + 1e-13)) continue;
    const auto& y = traj.y[k];
    const cplx x(y[0], y[1]);
    const double theta = y[2];
    const cplx tangent = std::exp(I * theta);
    const double kappa = curvature(x, theta);
    // dk/ds by a central difference along the second-order Taylor arc.
    const double h = 1e-4;
    const cplx bend = 0.5 * h * h * I * kappa * tangent;
    const double dkappa =
        (curvature(x + h * tangent + bend, theta + h * kappa) - curvature(x - h * tangent + bend, theta - h * kappa)) /
        (2.0 * h);
    knots.push_back(traj.s[k]);
    pos.push_back({x, tangent, I * kappa * tangent});
    ang.push_back({theta, kappa, dkappa});
  }
  if (knots.size() < 2) throw DegenerateError("curvature law integration produced no usable samples");
  auto position = std::make_shared<const numerics::QuinticHermite>(knots, std::move(pos));
  auto angle = std::make_shared<const numerics::QuinticHermite>(knots, std::move(ang));
  CurvePlanar curve(
      [position, angle, curvature](double s) {
        const cplx x = (*position)(s).value;
        const double theta = (*angle)(s).value.real();
        const cplx tangent = std::exp(I * theta);
        return PlanarJet{x, tangent, I * curvature(x, theta) * tangent};
      },
      {knots.front(), knots.back()}, true);
  LawCurve out{std::move(curve), {}, std::nullopt};
  for (const auto& e : traj.events) out.radial_minima.push_back(e.s);
  if (traj.truncated) out.diagnostic = traj.diagnostic;
  return out;
}

}  // namespace

LawCurve planar_curve_from_curvature_law(const CurvatureLaw& law, const LawInitial& initial, Interval s_range,
                                         double tol) {
  if (!(s_range.hi > s_range.lo)) throw DomainError("empty integration range");
  const double step = std::min(0.005, s_range.length() / 64.0);
  return to_law_curve(law, run_law(law, initial, s_range, tol, 0, step));
}

ClosedSolitonProfile shoot_centered_soliton(int p, int q, double lambda, CurvatureConvention convention) {
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1) throw DomainError("winding data (p, q) must be coprime positive integers");
  const double ratio = static_cast<double>(p) / q;
  if (!(ratio > 0.25 && ratio < 0.5)) throw DomainError("closed centered soliton profiles need 1/4 < p/q < 1/2");
  if (!(lambda > 0)) throw DomainError("closed centered soliton profiles need lambda > 0");

  const double mu = convention == CurvatureConvention::HalfTrace ? 2.0 : 1.0;
  const double circle_radius = 1.0 / std::sqrt(mu * lambda);
  const CurvatureLaw law = centered_soliton_law(lambda, convention);
  const double horizon = 200.0 * circle_radius;
  constexpr double kTol = 1e-11;

  auto one_period = [&](double r0) {
    const LawInitial init{cplx(r0, 0.0), 0.5 * kPi};
    return run_law(law, init, {0.0, horizon}, kTol, 1, horizon);
  };
  auto rotation = [&](double r0) {
    const auto traj = one_period(r0);
    if (traj.events.empty()) throw DegenerateError("no radial period found while shooting r0 = " + std::to_string(r0));
    return traj.events.front().y[3];
  };

  const double target = kTwoPi * ratio;
  auto mismatch = [&](double r0) { return rotation(r0) - target; };
  double lo = 1e-3 * circle_radius, hi = (1.0 - 1e-6) * circle_radius;
  const double f_lo = mismatch(lo), f_hi = mismatch(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0))
    throw DomainError("rotation target outside the shooting bracket (" + std::to_string(f_lo) + ", " +
                      std::to_string(f_hi) + ")");
  auto [a, b] = boost::math::tools::bisect(mismatch, lo, hi, boost::math::tools::eps_tolerance<double>(48));
  const double r0 = 0.5 * (a + b);

  ClosedSolitonProfile out{planar_curve_from_curvature_law(law, {cplx(r0, 0.0), 0.5 * kPi}, {0.0, 1.0}), r0};
  const auto first = one_period(r0);
  out.period = first.events.front().s;
  out.rotation_per_period = first.events.front().y[3];

  const double step = std::min(0.002, out.period / 512.0);
  const auto full = run_law(law, {cplx(r0, 0.0), 0.5 * kPi}, {0.0, (q + 0.5) * out.period}, kTol, q, step);
  out.profile = to_law_curve(law, full);
  const auto& end = full.y.back();
  out.closure_error = std::abs(cplx(end[0], end[1]) - cplx(r0, 0.0));
  out.winding = static_cast<int>(std::lround(end[3] / kTwoPi));

  // Curvature maxima over the closed curve (samples cyclic, duplicate endpoint dropped).
  std::vector<double> kappa;
  for (std::size_t k = 0; k + 1 < full.y.size(); ++k) {
    const auto& y = full.y[k];
    const cplx x(y[0], y[1]);
    const cplx tangent = std::exp(I * y[2]);
    kappa.push_back(law(x, tangent, I * tangent));
  }
  const std::size_t n = kappa.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = kappa[(k + n - 1) % n], next = kappa[(k + 1) % n];
    if (kappa[k] > prev && kappa[k] >= next) ++out.curvature_maxima;
  }
  return out;
}

ImmersionSpec make_product_circle_curve(double r, const CurvePlanar& curve) {
  if (!(r > 0) || !std::isfinite(r)) throw DomainError("product circle radius must be positive");
  return ImmersionSpec(family::ProductCircleCurve{r, curve, false}, curve.domain(), {0.0, kTwoPi}, true);
}

ImmersionSpec make_product_torus(double r1, double r2) {
  if (!(r1 > 0) || !(r2 > 0)) throw DomainError("product torus radii must be positive");
  const Interval dom{0.0, kTwoPi};
  return ImmersionSpec(family::ProductCircleCurve{r2, curves::circle(r1, dom), true}, dom, dom, true);
}

ImmersionSpec make_clifford_torus() {
  const double r = 1.0 / std::sqrt(2.0);
  return make_product_torus(r, r);
}

ImmersionSpec cc_product_immersion(const CurveAdSLegendrian& alpha, const CurveS3Legendrian& gamma) {
  const ResidualReport ra = curve_constraint_residual(alpha, 128);
  const ResidualReport rg = curve_constraint_residual(gamma, 128);
  if (!alpha.unit_speed() || !gamma.unit_speed())
    throw DomainError("the conformal product needs unit-speed generating curves");
  if (ra.max_abs > 1e-6) throw ConstraintError("anti-de Sitter curve violates its constraints", ra.max_abs);
  if (rg.max_abs > 1e-6) throw ConstraintError("S^3 curve violates its constraints", rg.max_abs);
  const Interval td = gamma.domain();
  const C2Jet g0 = gamma(td.lo), g1 = gamma(td.hi);
  const bool closed = norm(g0.value - g1.value) < 1e-12 && norm(g0.d1 - g1.d1) < 1e-12;
  return ImmersionSpec(family::CcProduct{alpha, gamma}, alpha.domain(), td, closed);
}

double legendrian_curvature(const C2Jet& g) { return dot(g.d2, J(g.d1)); }

double ads_legendrian_curvature(const C2Jet& a) {
  return dot2(a.d2.z1, I * a.d1.z1) - dot2(a.d2.z2, I * a.d1.z2);
}

PointC2 cc_mean_curvature_oracle(const CurveAdSLegendrian& alpha, const CurveS3Legendrian& gamma, double s, double t) {
  const C2Jet a = alpha(s);
  const C2Jet g = gamma(t);
  const PointC2 xs{a.d1.z1 * g.value.z1, a.d1.z2 * g.value.z2};
  const PointC2 xt{a.value.z1 * g.d1.z1, a.value.z2 * g.d1.z2};
  const double conformal = norm2(xs);
  return (ads_legendrian_curvature(a) * J(xs) + legendrian_curvature(g) * J(xt)) / (2.0 * conformal);
}

ObstructionScan soliton_obstruction_scan(const ImmersionSpec& spec, const std::vector<double>& lambdas,
                                         const GridSpec& grid, CurvatureConvention convention) {
  if (lambdas.empty()) throw DomainError("empty lambda set");
  ObstructionScan scan;
  scan.lambdas = lambdas;
  scan.min_max = std::numeric_limits<double>::infinity();
  for (double l : lambdas) {
    scan.reports.push_back(self_similar_residual(spec, {l, convention}, grid));
    if (scan.reports.back().max_abs < scan.min_max) {
      scan.min_max = scan.reports.back().max_abs;
      scan.best_lambda = l;
    }
  }
  return scan;
}

std::vector<double> standard_lambda_set() { return {-2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0}; }

}  // namespace lagsurf
