#include "lagsurf/cyclic.hpp"

#include <numeric>

#include "lagsurf/diffgeo.hpp"

namespace lagsurf {

namespace {

constexpr int kConstraintSamples = 128;
constexpr double kConstraintTol = 1e-6;
const Interval kCircleDomain{0.0, kTwoPi};

template <class Curve>
void require_constraints(const Curve& curve, const char* what) {
  const ResidualReport r = curve_constraint_residual(curve, kConstraintSamples);
  if (r.max_abs > kConstraintTol) throw ConstraintError(std::string(what) + " violates its constraints", r.max_abs);
}

void require_off_origin(const CurvePlanar& gamma) {
  const Interval d = gamma.domain();
  for (int i = 0; i <= kConstraintSamples; ++i) {
    const double s = d.lo + d.length() * i / kConstraintSamples;
    if (!(std::abs(gamma(s).value) > 1e-12)) throw DegenerateError("profile curve passes through the origin: leaf degenerates");
  }
}

void require_nonzero(double c) {
  if (c == 0.0 || !std::isfinite(c)) throw DomainError("scale constant c must be finite and nonzero");
}

}  // namespace

ImmersionSpec make_centered_type1(const CurvePlanar& gamma) {
  require_off_origin(gamma);
  return ImmersionSpec(family::CenteredType1{gamma}, gamma.domain(), kCircleDomain, true);
}

ImmersionSpec make_general_type1(const CurvePlanar& gamma, RealFunction w1, RealFunction w2, double s0) {
  require_off_origin(gamma);
  auto integrand = [gamma, w1, w2](double u) {
    const cplx g = gamma(u).value;
    const cplx e = g / std::abs(g);
    return PointC2{e * w1(u).value, e * w2(u).value};
  };
  auto table = std::make_shared<const numerics::CumulativeIntegral<PointC2>>(integrand, gamma.domain(), s0);
  return ImmersionSpec(family::GeneralType1{gamma, std::move(w1), std::move(w2), s0, std::move(table)},
                       gamma.domain(), kCircleDomain, true);
}

ImmersionSpec make_centered_type2(const CurveS3Legendrian& gamma, double c) {
  require_nonzero(c);
  require_constraints(gamma, "S^3 Legendrian curve");
  return ImmersionSpec(family::CenteredType2{gamma, c}, gamma.domain(), kCircleDomain, true);
}

ImmersionSpec make_general_type2(const CurveS3Legendrian& gamma, double c, ComplexFunction w, double s0,
                                 Type2Form form) {
  require_nonzero(c);
  require_constraints(gamma, "S^3 Legendrian curve");
  if (form == Type2Form::Tangent && !gamma.unit_speed())
    throw DomainError("tangent-form type II translation needs a unit-speed curve");
  std::function<PointC2(double)> integrand;
  if (form == Type2Form::Orthogonal) {
    integrand = [gamma, w](double u) {
      const PointC2 g = gamma(u).value;
      return w(u).value * PointC2{std::conj(g.z2), -std::conj(g.z1)};
    };
  } else {
    integrand = [gamma, w](double u) { return w(u).value * gamma(u).d1; };
  }
  auto table = std::make_shared<const numerics::CumulativeIntegral<PointC2>>(integrand, gamma.domain(), s0);
  return ImmersionSpec(family::GeneralType2{gamma, c, std::move(w), s0, form, std::move(table)}, gamma.domain(),
                       kCircleDomain, true);
}

ImmersionSpec make_centered_type3(const CurveAdSLegendrian& alpha, double c) {
  require_nonzero(c);
  require_constraints(alpha, "anti-de Sitter Legendrian curve");
  return ImmersionSpec(family::CenteredType3{alpha, c}, alpha.domain(), kCircleDomain, true);
}

ImmersionSpec make_general_type3(const CurveAdSLegendrian& alpha, double c, ComplexFunction w, double s0) {
  require_nonzero(c);
  require_constraints(alpha, "anti-de Sitter Legendrian curve");
  auto integrand = [alpha, w](double u) {
    const PointC2 a = alpha(u).value;
    const cplx wu = w(u).value;
    return PointC2{wu * std::norm(a.z2), std::conj(wu) * a.z1 * a.z2};
  };
  auto table = std::make_shared<const numerics::CumulativeIntegral<PointC2>>(integrand, alpha.domain(), s0);
  return ImmersionSpec(family::GeneralType3{alpha, c, std::move(w), s0, std::move(table)}, alpha.domain(),
                       kCircleDomain, true);
}

PointC2 circle_center(const ImmersionSpec& spec, double s) {
  return std::visit(
      [s](const auto& f) -> PointC2 {
        using T = std::decay_t<decltype(f)>;
        if constexpr (requires { f.translation; } && !std::is_same_v<T, family::Ruled>) {
          return (*f.translation)(s);
        } else if constexpr (std::is_same_v<T, family::ProductCircleCurve>) {
          const cplx c = f.curve(s).value;
          return f.curve_first ? PointC2{c, 0.0} : PointC2{0.0, c};
        } else {
          return PointC2{};
        }
      },
      spec.payload());
}

CircleFrame circle_frame(const ImmersionSpec& spec, double s) {
  if (!is_cyclic(spec.family()))
    throw DomainError(std::string("circle_frame needs a cyclic spec, got ") + std::string(family_name(spec.family())));
  CircleFrame cf;
  cf.center = circle_center(spec, s);
  const PointC2 a = surface_jet(spec, s, 0.0).x - cf.center;
  const PointC2 b = surface_jet(spec, s, 0.5 * kPi).x - cf.center;
  cf.radius = norm(a);
  if (!(cf.radius > 0)) throw DegenerateError("leaf circle has zero radius");
  cf.e1 = a / cf.radius;
  cf.e2 = b / cf.radius;
  return cf;
}

double leaf_roundness(const ImmersionSpec& spec, double s, int n_t) {
  const CircleFrame cf = circle_frame(spec, s);
  double worst = 0.0;
  for (int j = 0; j < n_t; ++j) {
    const double t = kTwoPi * j / n_t;
    worst = std::max(worst, std::abs(norm(surface_jet(spec, s, t).x - cf.center) - cf.radius));
  }
  return worst;
}

std::vector<double> r2k_values(const ImmersionSpec& spec, int n_samples) {
  if (n_samples < 2) throw DomainError("r2K_invariant needs at least two stations");
  const Interval d = spec.s_domain();
  std::vector<double> out(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double s = d.lo + d.length() * i / (n_samples - 1);
    const CircleFrame cf = circle_frame(spec, s);
    out[i] = cf.radius * cf.radius * kahler_angle(cf.e1, cf.e2);
  }
  return out;
}

ResidualReport r2K_invariant(const ImmersionSpec& spec, int n_samples) {
  const std::vector<double> v = r2k_values(spec, n_samples);
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  GridSpec g = spec.default_grid(n_samples, 1);
  g.periodic_t = false;
  g.t_range = {0.0, 0.0};
  ReportBuilder rb("r2K", g);
  for (int i = 0; i < n_samples; ++i) rb.add(v[i] - mean, g.s_at(i), 0.0);
  return std::move(rb).finish();
}

}  // namespace lagsurf
