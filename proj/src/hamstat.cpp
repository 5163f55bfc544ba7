#include "lagsurf/hamstat.hpp"

#include <algorithm>
#include <numeric>

#include <boost/math/tools/roots.hpp>

#include "lagsurf/curves.hpp"
#include "lagsurf/cyclic.hpp"
#include "lagsurf/diffgeo.hpp"
#include "lagsurf/ode.hpp"

namespace lagsurf {

namespace {

const cplx I(0.0, 1.0);
constexpr double kNearCritical = 1e-6;

using HsState = std::array<double, 3>;  // r, alpha, phi

void require_coprime(int p, int q) {
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1) throw DomainError("winding data (p, q) must be coprime positive integers");
}

}  // namespace

HsRates hs_profile_rhs(const HsProfileState& st) {
  if (!(st.r > 0.0)) throw DomainError("profile radius must be positive");
  return {std::cos(st.alpha), (st.c_flux - 2.0 * std::sin(st.alpha)) / st.r};
}

double hs_first_integral(const HsProfileState& st) { return st.r * st.r * (st.c_flux - 2.0 * std::sin(st.alpha)); }

double phi_of_C(double C, PhiMethod method) {
  const double c = std::abs(C);
  if (!std::isfinite(c) || c <= 2.0) throw DomainError("Phi(C) needs |C| > 2, got C = " + std::to_string(C));
  if (method == PhiMethod::ClosedForm) {
    // pi (c / d - 1) with d = sqrt(c^2 - 4), rewritten without cancellation.
    const double d = std::sqrt((c - 2.0) * (c + 2.0));
    return kPi * 4.0 / (d * (c + d));
  }
  if (c < 2.0 + kNearCritical)
    throw DomainError("quadrature refused for |C| - 2 < 1e-6 (integrand nearly singular); use the closed form");
  auto f = [c](double a) { return std::sin(a) / (c - 2.0 * std::sin(a)); };
  return numerics::integrate<double>(f, 0.0, kTwoPi, 1e-13, 50);
}

double winding_C_closed_form(int p, int q) {
  require_coprime(p, q);
  const double m = 1.0 + 2.0 * p / q;
  return 2.0 * m / std::sqrt(m * m - 1.0);
}

double solve_C_for_winding(int p, int q) {
  require_coprime(p, q);
  const double target = kTwoPi * p / q;
  auto f = [target](double C) { return phi_of_C(C) - target; };
  double lo = 2.1, hi = 4.0;
  while (f(lo) <= 0.0) {
    if (lo - 2.0 < 4.0 * kNearCritical) throw DomainError("winding 2 pi p / q too large for the quadrature bracket");
    lo = 2.0 + 0.25 * (lo - 2.0);
  }
  while (f(hi) > 0.0) hi *= 2.0;
  std::uintmax_t iters = 200;
  const auto br = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (br.first + br.second);
}

HsTrajectory integrate_hs_profile(const HsProfileState& initial, int alpha_periods, double s_max, double tol,
                                  double sample_step) {
  if (!(initial.r > 0.0)) throw DomainError("profile radius must be positive");
  const double C = initial.c_flux;
  auto rhs = [C](double, const HsState& y) {
    return HsState{std::cos(y[1]), (C - 2.0 * std::sin(y[1])) / y[0], std::sin(y[1]) / y[0]};
  };
  const double a0 = initial.alpha;
  numerics::EventSpec<3> period;
  period.g = [a0](double, const HsState& y) { return std::sin(y[1] - a0); };
  period.direction = C >= 0.0 ? +1 : -1;
  period.stop_after = alpha_periods;
  numerics::OdeOptions opt;
  opt.rel_tol = tol;
  opt.abs_tol = 0.01 * tol;
  opt.sample_step = sample_step;
  auto valid = [](const HsState& y) -> std::optional<std::string> {
    if (!(y[0] > 1e-9)) return "radius collapsed to zero";
    if (y[0] > 1e9) return "radius unbounded";
    return std::nullopt;
  };
  const auto traj =
      numerics::integrate_ode<3>(rhs, HsState{initial.r, initial.alpha, 0.0}, 0.0, s_max, opt, {period}, valid);

  HsTrajectory out;
  out.c_flux = C;
  for (std::size_t k = 0; k < traj.s.size(); ++k) {
    out.s.push_back(traj.s[k]);
    out.r.push_back(traj.y[k][0]);
    out.alpha.push_back(traj.y[k][1]);
    out.phi.push_back(traj.y[k][2]);
  }
  // A falling crossing of sin(alpha - a0) also occurs at alpha = a0 + pi; keep
  // only crossings where alpha has advanced by a whole turn.
  for (const auto& e : traj.events) {
    const double turns = std::abs(e.y[1] - a0) / kTwoPi;
    if (std::abs(turns - std::round(turns)) < 0.25 && std::round(turns) >= 1.0) out.period_ends.push_back(e.s);
  }
  if (traj.truncated) out.diagnostic = traj.diagnostic;
  return out;
}

double first_integral_drift(const HsTrajectory& traj) {
  if (traj.s.empty()) return 0.0;
  const double e0 = hs_first_integral({traj.r[0], traj.alpha[0], traj.c_flux});
  const double scale = std::max(std::abs(e0), 1e-300);
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.s.size(); ++k)
    worst = std::max(worst, std::abs(hs_first_integral({traj.r[k], traj.alpha[k], traj.c_flux}) - e0) / scale);
  return worst;
}

int count_self_intersections(const CurvePlanar& curve, int n_samples) {
  if (n_samples < 4) throw DomainError("self-intersection sweep needs at least 4 samples");
  const Interval d = curve.domain();
  std::vector<cplx> pts(n_samples);
  for (int k = 0; k < n_samples; ++k) pts[k] = curve(d.lo + d.length() * k / n_samples).value;
  auto cross = [](cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); };
  int count = 0;
  for (int a = 0; a < n_samples; ++a) {
    const cplx p0 = pts[a], p1 = pts[(a + 1) % n_samples];
    for (int b = a + 2; b < n_samples; ++b) {
      if (a == 0 && b == n_samples - 1) continue;  // closing segment is adjacent to the first
      const cplx q0 = pts[b], q1 = pts[(b + 1) % n_samples];
      const double d1 = cross(p1 - p0, q0 - p0), d2 = cross(p1 - p0, q1 - p0);
      const double d3 = cross(q1 - q0, p0 - q0), d4 = cross(q1 - q0, p1 - q0);
      if (((d1 < 0.0) != (d2 < 0.0)) && ((d3 < 0.0) != (d4 < 0.0))) ++count;
    }
  }
  return count;
}

namespace {

CurvePlanar profile_curve(const HsTrajectory& traj) {
  // Splines of (r, alpha) and phi with derivatives from the profile system; the
  // jets of gamma follow from the state, so r beta_s = C holds pointwise.
  const double C = traj.c_flux;
  std::vector<double> knots;
  std::vector<PlanarJet> ra, ph;
  for (std::size_t k = 0; k < traj.s.size(); ++k) {
    if (!knots.empty() && !(traj.s[k] > knots.back() + 1e-13)) continue;
    const double r = traj.r[k], a = traj.alpha[k];
    const double ca = std::cos(a), sa = std::sin(a);
    const double dr = ca, da = (C - 2.0 * sa) / r, dp = sa / r;
    const double ddr = -sa * da;
    const double dda = -2.0 * ca * da / r - (C - 2.0 * sa) * dr / (r * r);
    const double ddp = ca * da / r - sa * dr / (r * r);
    knots.push_back(traj.s[k]);
    ra.push_back({cplx(r, a), cplx(dr, da), cplx(ddr, dda)});
    ph.push_back({traj.phi[k], dp, ddp});
  }
  auto state = std::make_shared<const numerics::QuinticHermite>(knots, std::move(ra));
  auto phase = std::make_shared<const numerics::QuinticHermite>(knots, std::move(ph));
  const Interval dom{knots.front(), knots.back()};
  return CurvePlanar(
      [state, phase, C](double s) {
        const cplx v = (*state)(s).value;
        const double r = v.real(), a = v.imag(), phi = (*phase)(s).value.real();
        const cplx tangent = std::exp(I * (a + phi));
        return PlanarJet{r * std::exp(I * phi), tangent, I * ((C - std::sin(a)) / r) * tangent};
      },
      dom, true);
}

}  // namespace

ClosedHsCurve build_closed_hs_curve(int p, int q, int samples_per_period) {
  require_coprime(p, q);
  if (samples_per_period < 16) throw DomainError("samples_per_period must be at least 16");
  ClosedHsCurve out{curves::circle(1.0, {0.0, 1.0}), p, q};
  out.c_flux = solve_C_for_winding(p, q);
  const HsProfileState init{1.0, 0.5 * kPi, out.c_flux};

  // One period first, to size the sampling step.
  const auto probe = integrate_hs_profile(init, 1, 1e4, 1e-12, 1.0);
  if (probe.period_ends.empty()) throw DegenerateError("no alpha-period found for the profile");
  out.period = probe.period_ends.front();
  out.rotation_per_period = probe.phi.back();

  const double step = out.period / samples_per_period;
  const auto traj = integrate_hs_profile(init, q, (q + 0.5) * out.period, 1e-12, step);
  if (traj.period_ends.size() < static_cast<std::size_t>(q))
    throw DegenerateError("profile integration ended before q periods: " + traj.diagnostic.value_or("unknown"));
  out.first_integral_drift = first_integral_drift(traj);

  out.curve = profile_curve(traj);
  const cplx start = out.curve(out.curve.domain().lo).value;
  const cplx end = out.curve(out.curve.domain().hi).value;
  out.closure_error = std::abs(end - start);

  // gamma(s + P) = e^{i Phi} gamma(s) on the first q - 1 periods.
  const cplx rot = std::exp(I * (kTwoPi * p / q));
  const int probes = 256;
  for (int k = 0; k <= probes; ++k) {
    const double s = (q - 1) * out.period * k / probes;
    const double gap = std::abs(out.curve(s + out.period).value - rot * out.curve(s).value);
    out.symmetry_error = std::max(out.symmetry_error, gap);
  }
  if (q == 1) out.symmetry_error = std::abs(rot * start - end);

  if (out.closure_error > 1e-6)
    throw ConstraintError("closed profile failed to close after q periods", out.closure_error);
  if (out.symmetry_error > 1e-6) throw ConstraintError("closed profile is not q-symmetric", out.symmetry_error);
  out.self_intersections = count_self_intersections(out.curve, 4096);
  return out;
}

HsRegime classify_regime(double C) {
  if (C == 0.0) return HsRegime::SpecialLagrangian;
  if (std::abs(C) > 2.0) return HsRegime::BoundedClosedFamily;
  if (std::abs(C) < 2.0) return HsRegime::SpiralingEnds;
  return HsRegime::CirclesAndSpirals;
}

std::string_view regime_name(HsRegime regime) {
  switch (regime) {
    case HsRegime::BoundedClosedFamily: return "BoundedClosedFamily";
    case HsRegime::SpiralingEnds: return "SpiralingEnds";
    case HsRegime::CirclesAndSpirals: return "CirclesAndSpirals";
    case HsRegime::SpecialLagrangian: return "SpecialLagrangian";
  }
  return "unknown";
}

ImmersionSpec make_contact_stationary_hopf(double c) {
  if (!(c > 0.0 && c < 1.0)) throw DomainError("contact-stationary Hopf torus needs 0 < c < 1");
  // One full turn of the slower factor.
  const double a = std::sqrt(1.0 - c * c) / c;
  return make_centered_type2(curves::torus_curve(c, {0.0, kTwoPi * std::max(a, 1.0 / a)}), 1.0);
}

ResidualReport hs_residual_suite(const ImmersionSpec& spec, const GridSpec& grid) {
  return laplace_beltrami_beta(beta_derivative_field(spec, grid));
}

RefinementStudy laplacian_refinement_study(const ImmersionSpec& spec, const std::vector<int>& levels) {
  if (levels.size() < 3) throw DomainError("refinement study needs three levels");
  for (std::size_t k = 1; k < levels.size(); ++k)
    if (levels[k] != 2 * levels[k - 1]) throw DomainError("refinement levels must double");
  RefinementStudy study;
  study.levels = levels;
  std::vector<BetaField> fields;
  std::vector<std::vector<double>> values;
  for (int n : levels) {
    GridSpec g = spec.default_grid(n + 1, spec.periodic_t() ? n : n + 1);
    fields.push_back(beta_derivative_field(spec, g));
    values.push_back(laplace_beltrami_values(fields.back()));
    study.max_abs.push_back(laplace_beltrami_beta(fields.back()).max_abs);
  }
  const int n0 = levels.front();
  const int nt0 = spec.periodic_t() ? n0 : n0 + 1;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    const int fa = levels[k] / n0, fb = levels[k + 1] / n0;
    double worst = 0.0;
    for (int i = 0; i <= n0; ++i) {
      for (int j = 0; j < nt0; ++j) {
        const double va = values[k][fields[k].index(i * fa, j * fa)];
        const double vb = values[k + 1][fields[k + 1].index(i * fb, j * fb)];
        if (std::isfinite(va) && std::isfinite(vb)) worst = std::max(worst, std::abs(va - vb));
      }
    }
    study.successive.push_back(worst);
  }
  study.observed_order = std::log2(study.successive[0] / study.successive[1]);
  return study;
}

}  // namespace lagsurf
