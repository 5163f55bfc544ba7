#include "lagsurf/core_types.hpp"

#include <algorithm>

#include "lagsurf/numerics.hpp"

namespace lagsurf {

RealFunction constant_real(double value) {
  return [value](double) { return RealJet{value, 0.0}; };
}

ComplexFunction constant_complex(cplx value) {
  return [value](double) { return ComplexJet{value, cplx{}}; };
}

CurvePlanar::CurvePlanar(Eval eval, Interval domain, bool arclength)
    : eval_(std::move(eval)), domain_(domain), arclength_(arclength) {
  if (!(domain.hi > domain.lo)) throw DomainError("curve domain is empty");
}

PlanarJet CurvePlanar::operator()(double s) const {
  const double slack = 1e-9 * std::max(1.0, domain_.length());
  if (!domain_.contains(s, slack)) throw DomainError("curve parameter outside domain: " + std::to_string(s));
  PlanarJet j = eval_(s);
  if (!is_finite(j.value) || !is_finite(j.d1) || !is_finite(j.d2))
    throw EvaluationError("non-finite curve evaluation", s);
  return j;
}

bool is_finite(const SurfaceJet& j) {
  return is_finite(j.x) && is_finite(j.xs) && is_finite(j.xt) && is_finite(j.xss) && is_finite(j.xst) &&
         is_finite(j.xtt);
}

double GridSpec::ds() const { return n_s > 1 ? s_range.length() / (n_s - 1) : 0.0; }

double GridSpec::dt() const {
  if (periodic_t) return t_range.length() / n_t;
  return n_t > 1 ? t_range.length() / (n_t - 1) : 0.0;
}

double GridSpec::s_at(int i) const { return n_s > 1 ? s_range.lo + i * ds() : s_range.lo; }
double GridSpec::t_at(int j) const { return t_range.lo + j * dt(); }

ReportBuilder::ReportBuilder(std::string name, GridSpec grid) {
  report_.name = std::move(name);
  report_.grid = grid;
}

void ReportBuilder::add(double value, double s, double t) {
  if (!std::isfinite(value)) {
    warn("non-finite residual at (" + std::to_string(s) + ", " + std::to_string(t) + ")");
    return;
  }
  const double a = std::abs(value);
  if (report_.samples == 0 || a > report_.max_abs) {
    report_.max_abs = a;
    report_.argmax_s = s;
    report_.argmax_t = t;
  }
  sum_ += a;
  ++report_.samples;
}

void ReportBuilder::warn(std::string message) { report_.warnings.push_back(std::move(message)); }

ResidualReport ReportBuilder::finish() && {
  report_.mean_abs = report_.samples ? sum_ / static_cast<double>(report_.samples) : 0.0;
  return std::move(report_);
}

namespace {

template <class Curve>
GridSpec sample_grid(const Curve& curve, int n_samples) {
  if (n_samples < 2) throw DomainError("curve_constraint_residual needs at least two samples");
  GridSpec g;
  g.n_s = n_samples;
  g.n_t = 1;
  g.s_range = curve.domain();
  g.t_range = {0.0, 0.0};
  g.periodic_t = false;
  return g;
}

}  // namespace

ResidualReport curve_constraint_residual(const CurveS3Legendrian& curve, int n_samples) {
  const GridSpec grid = sample_grid(curve, n_samples);
  ReportBuilder rb("constraints.s3_legendrian", grid);
  for (int i = 0; i < n_samples; ++i) {
    const double s = grid.s_at(i);
    const C2Jet j = curve(s);
    double v = std::abs(norm2(j.value) - 1.0);
    v = std::max(v, std::abs(dot(j.d1, J(j.value))));
    if (curve.unit_speed()) v = std::max(v, std::abs(norm(j.d1) - 1.0));
    rb.add(v, s, 0.0);
  }
  return std::move(rb).finish();
}

ResidualReport curve_constraint_residual(const CurveAdSLegendrian& curve, int n_samples) {
  const GridSpec grid = sample_grid(curve, n_samples);
  ReportBuilder rb("constraints.ads_legendrian", grid);
  for (int i = 0; i < n_samples; ++i) {
    const double s = grid.s_at(i);
    const C2Jet j = curve(s);
    const cplx a1 = j.value.z1, a2 = j.value.z2, d1 = j.d1.z1, d2 = j.d1.z2;
    const cplx I(0, 1);
    double v = std::abs(std::norm(a1) - std::norm(a2) + 1.0);
    v = std::max(v, std::abs(dot2(d1, I * a1) - dot2(d2, I * a2)));
    if (curve.unit_speed()) {
      v = std::max(v, std::abs(std::norm(d1) - std::norm(d2) - 1.0));
      v = std::max(v, std::abs(std::abs(a1) - std::abs(d2)));
    }
    rb.add(v, s, 0.0);
  }
  return std::move(rb).finish();
}

ResidualReport curve_constraint_residual(const CurvePlanar& curve, int n_samples) {
  const GridSpec grid = sample_grid(curve, n_samples);
  ReportBuilder rb("constraints.planar", grid);
  for (int i = 0; i < n_samples; ++i) {
    const double s = grid.s_at(i);
    const PlanarJet j = curve(s);
    rb.add(curve.arclength() ? std::abs(std::abs(j.d1) - 1.0) : 0.0, s, 0.0);
  }
  return std::move(rb).finish();
}

CurvePlanar arclength_reparametrize(const CurvePlanar& curve, double tol) {
  const Interval dom = curve.domain();
  auto speed = [curve](double s) { return std::abs(curve(s).d1); };

  constexpr int kKnots = 257;
  const double h = dom.length() / (kKnots - 1);
  std::vector<double> knots(kKnots), lengths(kKnots, 0.0);
  double min_speed = speed(dom.lo);
  for (int k = 0; k < kKnots; ++k) {
    knots[k] = dom.lo + k * h;
    min_speed = std::min(min_speed, speed(knots[k]));
    if (k > 0) lengths[k] = lengths[k - 1] + numerics::integrate<double>(speed, knots[k - 1], knots[k], 1e-14);
  }
  if (!(min_speed > 1e-10)) throw DegenerateError("curve speed vanishes; cannot reparametrize by arclength");
  const double total = lengths.back();

  auto eval = [curve, knots, lengths, speed, tol, dom](double sigma) {
    // Invert L(s) = sigma: locate the knot panel, then Newton from its midpoint.
    auto it = std::upper_bound(lengths.begin(), lengths.end(), sigma);
    std::size_t k = it == lengths.begin() ? 0 : static_cast<std::size_t>(it - lengths.begin()) - 1;
    k = std::min(k, knots.size() - 2);
    double s = knots[k] + (knots[k + 1] - knots[k]) * (sigma - lengths[k]) / (lengths[k + 1] - lengths[k]);
    for (int iter = 0; iter < 50; ++iter) {
      s = std::clamp(s, dom.lo, dom.hi);
      const double L = lengths[k] + numerics::integrate<double>(speed, knots[k], s, 1e-15);
      const double step = (L - sigma) / speed(s);
      s -= step;
      if (std::abs(step) < 0.01 * tol) break;
    }
    s = std::clamp(s, dom.lo, dom.hi);
    const PlanarJet j = curve(s);
    const double v = std::abs(j.d1);
    const cplx tangent = j.d1 / v;
    // d/dsigma (gamma'/|gamma'|) = (gamma'' - <gamma'', T> T) / |gamma'|^2
    const cplx accel = (j.d2 - dot2(j.d2, tangent) * tangent) / (v * v);
    return PlanarJet{j.value, tangent, accel};
  };
  return CurvePlanar(eval, Interval{0.0, total}, true);
}

}  // namespace lagsurf
