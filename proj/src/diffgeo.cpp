#include "lagsurf/diffgeo.hpp"

#include <limits>

#include "lagsurf/numerics.hpp"

namespace lagsurf {

namespace {

const cplx I(0.0, 1.0);
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

PointC2 real_pair(double a, double b) { return {cplx(a, 0.0), cplx(b, 0.0)}; }

struct JetBuilder {
  double s;
  double t;

  SurfaceJet operator()(const family::CenteredType1& f) const {
    const PlanarJet g = f.gamma(s);
    const PointC2 x = real_pair(std::cos(t), std::sin(t));
    const PointC2 xp = real_pair(-std::sin(t), std::cos(t));
    return {g.value * x, g.d1 * x, g.value * xp, g.d2 * x, g.d1 * xp, -(g.value * x)};
  }

  SurfaceJet operator()(const family::GeneralType1& f) const {
    SurfaceJet j = (*this)(family::CenteredType1{f.gamma});
    const PlanarJet g = f.gamma(s);
    const double r = std::abs(g.value);
    const cplx u = g.value / r;
    const double phi_d = (g.d1 / g.value).imag();
    const RealJet w1 = f.w1(s), w2 = f.w2(s);
    const PointC2 w = real_pair(w1.value, w2.value);
    const PointC2 wd = real_pair(w1.d1, w2.d1);
    j.x += (*f.translation)(s);
    j.xs += u * w;
    j.xss += (I * phi_d * u) * w + u * wd;
    return j;
  }

  SurfaceJet operator()(const family::CenteredType2& f) const {
    const C2Jet g = f.gamma(s);
    const cplx e = f.c * std::exp(I * t);
    return {e * g.value, e * g.d1, (I * e) * g.value, e * g.d2, (I * e) * g.d1, -(e * g.value)};
  }

  SurfaceJet operator()(const family::GeneralType2& f) const {
    SurfaceJet j = (*this)(family::CenteredType2{f.gamma, f.c});
    const C2Jet g = f.gamma(s);
    const ComplexJet w = f.w(s);
    j.x += (*f.translation)(s);
    if (f.form == Type2Form::Orthogonal) {
      const PointC2 dir{std::conj(g.value.z2), -std::conj(g.value.z1)};
      const PointC2 dir_d{std::conj(g.d1.z2), -std::conj(g.d1.z1)};
      j.xs += w.value * dir;
      j.xss += w.d1 * dir + w.value * dir_d;
    } else {
      j.xs += w.value * g.d1;
      j.xss += w.d1 * g.d1 + w.value * g.d2;
    }
    return j;
  }

  SurfaceJet operator()(const family::CenteredType3& f) const {
    const C2Jet a = f.alpha(s);
    const cplx ep = f.c * std::exp(I * t), em = f.c * std::exp(-I * t);
    auto twist = [&](const PointC2& p) { return PointC2{ep * p.z1, em * p.z2}; };
    auto twist_t = [&](const PointC2& p) { return PointC2{I * ep * p.z1, -I * em * p.z2}; };
    return {twist(a.value), twist(a.d1), twist_t(a.value), twist(a.d2), twist_t(a.d1), -twist(a.value)};
  }

  SurfaceJet operator()(const family::GeneralType3& f) const {
    SurfaceJet j = (*this)(family::CenteredType3{f.alpha, f.c});
    const C2Jet a = f.alpha(s);
    const ComplexJet w = f.w(s);
    const cplx a1 = a.value.z1, a2 = a.value.z2, d1 = a.d1.z1, d2 = a.d1.z2;
    const double m2 = std::norm(a2);
    const double m2_d = 2.0 * dot2(d2, a2);
    j.x += (*f.translation)(s);
    j.xs += PointC2{w.value * m2, std::conj(w.value) * a1 * a2};
    j.xss += PointC2{w.d1 * m2 + w.value * m2_d, std::conj(w.d1) * a1 * a2 + std::conj(w.value) * (d1 * a2 + a1 * d2)};
    return j;
  }

  SurfaceJet operator()(const family::Ruled& f) const {
    const C2Jet g = f.gamma(s);
    const PlanarJet al = f.alpha(s);
    const RealJet drift = f.drift(s);
    const RealJet rate = f.shift_rate(s);
    const double T = (*f.shift)(s);
    const double tt = t + T;
    const PointC2 v_d = al.value * g.d1 + drift.value * g.value;
    const PointC2 v_dd = al.d1 * g.d1 + al.value * g.d2 + drift.d1 * g.value + drift.value * g.d1;
    SurfaceJet j;
    j.x = tt * g.value + (*f.translation)(s);
    j.xs = tt * g.d1 + rate.value * g.value + v_d;
    j.xt = g.value;
    j.xss = tt * g.d2 + 2.0 * rate.value * g.d1 + rate.d1 * g.value + v_dd;
    j.xst = g.d1;
    j.xtt = PointC2{};
    return j;
  }

  SurfaceJet operator()(const family::ProductCircleCurve& f) const {
    const PlanarJet c = f.curve(s);
    const cplx e = f.r * std::exp(I * t);
    SurfaceJet j{{e, c.value}, {0.0, c.d1}, {I * e, 0.0}, {0.0, c.d2}, {}, {-e, 0.0}};
    if (f.curve_first) {
      for (PointC2* p : {&j.x, &j.xs, &j.xt, &j.xss, &j.xst, &j.xtt}) std::swap(p->z1, p->z2);
    }
    return j;
  }

  SurfaceJet operator()(const family::ProductLineCurve& f) const {
    const PlanarJet c = f.curve(s);
    return {{cplx(t, 0.0), c.value}, {0.0, c.d1}, {1.0, 0.0}, {0.0, c.d2}, {}, {}};
  }

  SurfaceJet operator()(const family::CcProduct& f) const {
    const C2Jet a = f.alpha(s);
    const C2Jet g = f.gamma(t);
    auto mul = [](const PointC2& p, const PointC2& q) { return PointC2{p.z1 * q.z1, p.z2 * q.z2}; };
    return {mul(a.value, g.value), mul(a.d1, g.value), mul(a.value, g.d1),
            mul(a.d2, g.value),    mul(a.d1, g.d1),    mul(a.value, g.d2)};
  }
};

}  // namespace

SurfaceJet surface_jet(const ImmersionSpec& spec, double s, double t) {
  const Interval& dom = spec.s_domain();
  if (!dom.contains(s, 1e-9 * std::max(1.0, dom.length())))
    throw DomainError("surface parameter s = " + std::to_string(s) + " outside the surface domain");
  SurfaceJet j = std::visit(JetBuilder{s, t}, spec.payload());
  if (!is_finite(j)) throw EvaluationError("non-finite surface jet", s);
  return j;
}

Metric2 first_fundamental_form(const SurfaceJet& jet) {
  Metric2 m;
  m.e = norm2(jet.xs);
  m.f = dot(jet.xs, jet.xt);
  m.g = norm2(jet.xt);
  m.det = m.e * m.g - m.f * m.f;
  return m;
}

NormalFrame normal_frame(const SurfaceJet& jet) {
  const double a = norm(jet.xs);
  if (!(a > 0)) throw DegenerateError("xs vanishes; normal frame undefined");
  NormalFrame nf;
  nf.n1 = J(jet.xs) / a;
  PointC2 n2 = J(jet.xt);
  n2 -= dot(n2, nf.n1) * nf.n1;
  const double b = norm(n2);
  if (!(b > 0)) throw DegenerateError("J xt parallel to J xs; normal frame undefined");
  nf.n2 = n2 / b;
  return nf;
}

PointC2 normal_part(const SurfaceJet& jet, const Metric2& m, const PointC2& v) {
  const double ps = dot(v, jet.xs), pt = dot(v, jet.xt);
  const double a = (m.g * ps - m.f * pt) / m.det;
  const double b = (m.e * pt - m.f * ps) / m.det;
  return v - a * jet.xs - b * jet.xt;
}

PointC2 mean_curvature(const SurfaceJet& jet, const Metric2& m) {
  if (m.degenerate()) throw DegenerateError("degenerate metric: mean curvature undefined");
  const PointC2 trace = m.g * jet.xss + m.e * jet.xtt - 2.0 * m.f * jet.xst;
  return normal_part(jet, m, trace) / (2.0 * m.det);
}

double lagrangian_residual(const SurfaceJet& jet) {
  const double denom = norm(jet.xs) * norm(jet.xt);
  if (!(denom > 0)) return std::numeric_limits<double>::quiet_NaN();
  return std::abs(omega(jet.xs, jet.xt)) / denom;
}

double lagrangian_angle(const SurfaceJet& jet) {
  const double a = norm(jet.xs);
  if (!(a > 0)) throw DegenerateError("xs vanishes; Lagrangian angle undefined");
  const PointC2 e1 = jet.xs / a;
  PointC2 e2 = jet.xt - dot(jet.xt, e1) * e1;
  const double b = norm(e2);
  if (!(b > 0)) throw DegenerateError("tangent vectors are parallel; Lagrangian angle undefined");
  e2 = e2 / b;
  const cplx d = det_c(e1, e2);
  if (std::abs(std::abs(d) - 1.0) > 1e-6) throw DomainError("tangent plane is not Lagrangian (|det| != 1)");
  return std::arg(d);
}

double kahler_angle(const PointC2& e1, const PointC2& e2) {
  if (std::abs(norm2(e1) - 1.0) > 1e-9 || std::abs(norm2(e2) - 1.0) > 1e-9 || std::abs(dot(e1, e2)) > 1e-9)
    throw DomainError("kahler_angle needs an orthonormal pair");
  return dot(e1, J(e2));
}

BetaDerivatives beta_derivatives(const SurfaceJet& jet) {
  const cplx d = det_c(jet.xs, jet.xt);
  if (!(std::abs(d) > 0)) throw DegenerateError("det_C(xs, xt) vanishes");
  const cplx d_s = det_c(jet.xss, jet.xt) + det_c(jet.xs, jet.xst);
  const cplx d_t = det_c(jet.xst, jet.xt) + det_c(jet.xs, jet.xtt);
  return {(d_s / d).imag(), (d_t / d).imag()};
}

BetaField beta_derivative_field(const ImmersionSpec& spec, const GridSpec& grid) {
  BetaField bf;
  bf.grid = grid;
  const std::size_t n = grid.size();
  bf.beta_s.assign(n, kNaN);
  bf.beta_t.assign(n, kNaN);
  bf.e.assign(n, kNaN);
  bf.f.assign(n, kNaN);
  bf.g.assign(n, kNaN);
  std::vector<char> excluded(n, 0);
  numerics::parallel_for(n, [&](std::size_t idx) {
    const int i = static_cast<int>(idx / grid.n_t), j = static_cast<int>(idx % grid.n_t);
    const SurfaceJet jet = surface_jet(spec, grid.s_at(i), grid.t_at(j));
    const Metric2 m = first_fundamental_form(jet);
    if (m.degenerate() || !(std::abs(det_c(jet.xs, jet.xt)) > 0)) {
      excluded[idx] = 1;
      return;
    }
    const BetaDerivatives b = beta_derivatives(jet);
    bf.beta_s[idx] = b.beta_s;
    bf.beta_t[idx] = b.beta_t;
    bf.e[idx] = m.e;
    bf.f[idx] = m.f;
    bf.g[idx] = m.g;
  });
  bf.excluded.assign(excluded.begin(), excluded.end());
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (bf.excluded[idx]) {
      const int i = static_cast<int>(idx / grid.n_t), j = static_cast<int>(idx % grid.n_t);
      bf.warnings.push_back("degenerate node excluded at (" + std::to_string(grid.s_at(i)) + ", " +
                            std::to_string(grid.t_at(j)) + ")");
    }
  }
  return bf;
}

std::vector<double> laplace_beltrami_values(const BetaField& bf) {
  const GridSpec& grid = bf.grid;
  if (grid.n_s < 16 || grid.n_t < 16) throw DomainError("Laplace-Beltrami grid must be at least 16 x 16");
  const std::size_t n = grid.size();
  std::vector<double> flux_s(n, kNaN), flux_t(n, kNaN), root(n, kNaN);
  for (std::size_t idx = 0; idx < n; ++idx) {
    if (bf.excluded[idx]) continue;
    const double det = bf.e[idx] * bf.g[idx] - bf.f[idx] * bf.f[idx];
    const double rd = std::sqrt(det);
    root[idx] = rd;
    flux_s[idx] = (bf.g[idx] * bf.beta_s[idx] - bf.f[idx] * bf.beta_t[idx]) / rd;
    flux_t[idx] = (-bf.f[idx] * bf.beta_s[idx] + bf.e[idx] * bf.beta_t[idx]) / rd;
  }
  std::vector<double> out(n, kNaN);
  const double ds = grid.ds(), dt = grid.dt();
  for (int i = 1; i + 1 < grid.n_s; ++i) {
    for (int j = 0; j < grid.n_t; ++j) {
      int jm = j - 1, jp = j + 1;
      if (grid.periodic_t) {
        jm = (jm + grid.n_t) % grid.n_t;
        jp = jp % grid.n_t;
      } else if (jm < 0 || jp >= grid.n_t) {
        continue;
      }
      const std::size_t c = bf.index(i, j);
      const double div = (flux_s[bf.index(i + 1, j)] - flux_s[bf.index(i - 1, j)]) / (2.0 * ds) +
                         (flux_t[bf.index(i, jp)] - flux_t[bf.index(i, jm)]) / (2.0 * dt);
      out[c] = div / root[c];  // NaN propagates from excluded neighbours
    }
  }
  return out;
}

ResidualReport laplace_beltrami_beta(const BetaField& bf) {
  const std::vector<double> lap = laplace_beltrami_values(bf);
  ReportBuilder rb("hamiltonian_stationary.laplacian_beta", bf.grid);
  for (const auto& w : bf.warnings) rb.warn(w);
  for (int i = 0; i < bf.grid.n_s; ++i)
    for (int j = 0; j < bf.grid.n_t; ++j) {
      const double v = lap[bf.index(i, j)];
      if (std::isfinite(v)) rb.add(v, bf.grid.s_at(i), bf.grid.t_at(j));
    }
  return std::move(rb).finish();
}

ResidualReport sweep_grid(std::string name, const GridSpec& grid, const std::function<double(double, double)>& f) {
  std::vector<double> values(grid.size(), kNaN);
  numerics::parallel_for(grid.size(), [&](std::size_t idx) {
    const int i = static_cast<int>(idx / grid.n_t), j = static_cast<int>(idx % grid.n_t);
    values[idx] = f(grid.s_at(i), grid.t_at(j));
  });
  ReportBuilder rb(std::move(name), grid);
  std::size_t skipped = 0;
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    const int i = static_cast<int>(idx / grid.n_t), j = static_cast<int>(idx % grid.n_t);
    if (std::isnan(values[idx])) {
      ++skipped;
      continue;
    }
    rb.add(values[idx], grid.s_at(i), grid.t_at(j));
  }
  if (skipped) rb.warn(std::to_string(skipped) + " degenerate nodes skipped");
  return std::move(rb).finish();
}

ResidualReport lagrangian_residual_report(const ImmersionSpec& spec, const GridSpec& grid) {
  return sweep_grid("lagrangian", grid, [&spec](double s, double t) {
    const SurfaceJet jet = surface_jet(spec, s, t);
    if (first_fundamental_form(jet).degenerate()) return kNaN;
    return lagrangian_residual(jet);
  });
}

}  // namespace lagsurf
