#include <doctest.h>

#include <cmath>
#include <vector>

#include "lagsurf/curves.hpp"
#include "lagsurf/cyclic.hpp"
#include "lagsurf/diffgeo.hpp"
#include "lagsurf/ruled.hpp"
#include "lagsurf/solitons.hpp"

using namespace lagsurf;

namespace {

std::vector<ImmersionSpec> sample_specs() {
  return {
      make_clifford_torus(),
      make_centered_type1(curves::spiral({0, 3})),
      make_general_type1(curves::circle(1.0, {0, 3}), curves::linear_real(0.3, 0.2), constant_real(0.5), 0.0),
      make_general_type2(curves::torus_curve(0.6, {0, 5}), 1.0, curves::exp_i(1.3, 0.4), 0.0),
      make_centered_type3(curves::hyperbola({-1, 1}), 1 / std::sqrt(2.0)),
      make_blair_helicoid(0.6, 0.8, 1.0, 1.0),
  };
}

}  // namespace

TEST_SUITE("diffgeo") {

TEST_CASE("Clifford torus by hand") {
  auto spec = make_clifford_torus();
  double s = 0.4, t = 1.9;
  auto j = surface_jet(spec, s, t);
  auto m = first_fundamental_form(j);
  CHECK(m.e == doctest::Approx(0.5));
  CHECK(m.g == doctest::Approx(0.5));
  CHECK(std::abs(m.f) < 1e-15);
  auto h = mean_curvature(j, m);
  CHECK(norm(h + j.x) < 1e-14);
  CHECK(lagrangian_residual(j) < 1e-15);
  auto b = beta_derivatives(j);
  CHECK(b.beta_s == doctest::Approx(1.0));
  CHECK(b.beta_t == doctest::Approx(1.0));
  // det_C((i e^{is}, 0), (0, i e^{it})) = -e^{i(s+t)}
  CHECK(std::remainder(lagrangian_angle(j) - (s + t + kPi), kTwoPi) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("jets agree with finite differences") {
  const double h = 1e-4;
  for (const auto& spec : sample_specs()) {
    CAPTURE(family_name(spec.family()));
    const double s = spec.s_domain().lo + 0.37 * spec.s_domain().length();
    const double t = spec.t_domain().lo + 0.61 * spec.t_domain().length();
    auto j = surface_jet(spec, s, t);
    auto X = [&](double a, double b) { return surface_jet(spec, a, b).x; };
    auto xs = (X(s + h, t) - X(s - h, t)) / (2 * h);
    auto xt = (X(s, t + h) - X(s, t - h)) / (2 * h);
    auto xss = (X(s + h, t) - 2.0 * j.x + X(s - h, t)) / (h * h);
    auto xtt = (X(s, t + h) - 2.0 * j.x + X(s, t - h)) / (h * h);
    auto xst = (X(s + h, t + h) - X(s + h, t - h) - X(s - h, t + h) + X(s - h, t - h)) / (4 * h * h);
    const double scale = 1 + norm(j.x);
    CHECK(norm(xs - j.xs) < 1e-6 * scale);
    CHECK(norm(xt - j.xt) < 1e-6 * scale);
    CHECK(norm(xss - j.xss) < 1e-4 * scale);
    CHECK(norm(xtt - j.xtt) < 1e-4 * scale);
    CHECK(norm(xst - j.xst) < 1e-4 * scale);
  }
}

TEST_CASE("beta derivatives agree with differences of the angle") {
  const double h = 1e-5;
  for (const auto& spec : sample_specs()) {
    CAPTURE(family_name(spec.family()));
    const double s = spec.s_domain().lo + 0.43 * spec.s_domain().length();
    const double t = spec.t_domain().lo + 0.29 * spec.t_domain().length();
    auto beta = [&](double a, double b) { return lagrangian_angle(surface_jet(spec, a, b)); };
    auto wrap = [](double d) { return std::remainder(d, kTwoPi); };
    auto bd = beta_derivatives(surface_jet(spec, s, t));
    CHECK(wrap(beta(s + h, t) - beta(s - h, t)) / (2 * h) == doctest::Approx(bd.beta_s).epsilon(1e-6));
    CHECK(wrap(beta(s, t + h) - beta(s, t - h)) / (2 * h) == doctest::Approx(bd.beta_t).epsilon(1e-6));
  }
}

TEST_CASE("mean curvature is normal and matches the trace formula") {
  for (const auto& spec : sample_specs()) {
    CAPTURE(family_name(spec.family()));
    auto j = surface_jet(spec, spec.s_domain().lo + 0.5 * spec.s_domain().length(), spec.t_domain().lo + 0.2);
    auto m = first_fundamental_form(j);
    auto h = mean_curvature(j, m);
    CHECK(std::abs(dot(h, j.xs)) < 1e-10 * (1 + norm(h)) * norm(j.xs));
    CHECK(std::abs(dot(h, j.xt)) < 1e-10 * (1 + norm(h)) * norm(j.xt));
  }
}

TEST_CASE("Kahler angle of model planes") {
  PointC2 e1{{1, 0}, {0, 0}};
  CHECK(kahler_angle(e1, PointC2{{0, 1}, {0, 0}}) == doctest::Approx(-1.0));
  CHECK(kahler_angle(e1, PointC2{{0, -1}, {0, 0}}) == doctest::Approx(1.0));
  CHECK(kahler_angle(e1, PointC2{{0, 0}, {1, 0}}) == doctest::Approx(0.0));
}

TEST_CASE("a complex line is maximally non-Lagrangian") {
  SurfaceJet j;
  j.xs = {{1, 0}, {0, 0}};
  j.xt = {{0, 1}, {0, 0}};
  CHECK(lagrangian_residual(j) == doctest::Approx(1.0));
}

TEST_CASE("Lagrangian residual over grids") {
  for (const auto& spec : sample_specs()) {
    CAPTURE(family_name(spec.family()));
    CHECK(lagrangian_residual_report(spec, spec.default_grid(32, 32)).max_abs < 1e-9);
  }
}

TEST_CASE("Laplace-Beltrami on the Clifford torus vanishes") {
  auto spec = make_clifford_torus();
  auto r = laplace_beltrami_beta(beta_derivative_field(spec, spec.default_grid(32, 32)));
  CHECK(r.max_abs < 1e-10);
}

TEST_CASE("Laplace-Beltrami on a flat extensor") {
  // X = 2 e^{is}(cos t, sin t): flat metric 4(ds^2 + dt^2), beta = 2s + pi/2.
  auto spec = make_centered_type1(curves::circle(2.0, {0, kTwoPi}));
  auto f = beta_derivative_field(spec, spec.default_grid(32, 32));
  CHECK(laplace_beltrami_beta(f).max_abs < 1e-9);
  CHECK_THROWS(laplace_beltrami_beta(beta_derivative_field(spec, spec.default_grid(8, 8))));
}

}  // TEST_SUITE

TEST_SUITE("diffgeo") {

TEST_CASE("jets by direct substitution") {
  auto t2 = make_centered_type2(curves::great_circle({0, kTwoPi}), 1.0);
  auto j2 = surface_jet(t2, 0.0, 0.0);
  CHECK(norm(j2.x - PointC2{1.0, 0.0}) < 1e-15);
  CHECK(norm(j2.xt - PointC2{cplx(0, 1), 0.0}) < 1e-15);
  auto t3 = make_centered_type3(curves::hyperbola({-1, 1}), 1.0);
  auto j3 = surface_jet(t3, 0.0, 0.0);
  CHECK(norm(j3.x - PointC2{0.0, 1.0}) < 1e-15);
  CHECK(norm(j3.xt - PointC2{0.0, cplx(0, -1)}) < 1e-15);
  auto t1 = make_centered_type1(curves::circle(1.0, {0, kTwoPi}));
  auto j1 = surface_jet(t1, 0.0, kPi / 2);
  CHECK(norm(j1.x - PointC2{0.0, 1.0}) < 1e-15);
  CHECK(norm(j1.xs - PointC2{0.0, cplx(0, 1)}) < 1e-15);
}

TEST_CASE("metrics of model surfaces") {
  auto m = first_fundamental_form(surface_jet(make_product_torus(1, 1), 0.3, 0.9));
  CHECK(m.e == doctest::Approx(1.0));
  CHECK(m.g == doctest::Approx(1.0));
  CHECK(std::abs(m.f) < 1e-15);
  auto ext = make_centered_type1(curves::circle_arclength(2.0, {0, 10}));
  auto me = first_fundamental_form(surface_jet(ext, 1.7, 0.4));
  CHECK(me.e == doctest::Approx(1.0));
  CHECK(std::abs(me.f) < 1e-15);
  CHECK(me.g == doctest::Approx(4.0));
  auto hopf = make_centered_type2(curves::torus_curve(0.6, {0, 5}), 1.0);
  auto mh = first_fundamental_form(surface_jet(hopf, 2.2, 1.0));
  CHECK(mh.e == doctest::Approx(1.0));
  CHECK(std::abs(mh.f) < 1e-14);
  CHECK(mh.g == doctest::Approx(1.0));
}

TEST_CASE("mean curvature of a product torus") {
  for (auto [r1, r2] : {std::pair{1.0, 2.0}, {0.5, 3.0}}) {
    auto j = surface_jet(make_product_torus(r1, r2), 0.4, 2.0);
    auto h = mean_curvature(j, first_fundamental_form(j));
    CHECK(norm(h) == doctest::Approx(0.5 * std::sqrt(1 / (r1 * r1) + 1 / (r2 * r2))).epsilon(1e-12));
  }
}

TEST_CASE("Lagrangian angles of model surfaces") {
  SurfaceJet plane;
  plane.xs = {1.0, 0.0};
  plane.xt = {0.0, 1.0};
  CHECK(lagrangian_angle(plane) == doctest::Approx(0.0));
  // Centered extensor over a unit-speed profile: beta = tangent angle + polar angle.
  auto profile = arclength_reparametrize(curves::ellipse(2.0, 1.0, {0.2, 2.5}));
  auto ext = make_centered_type1(profile);
  for (double s : {0.1, 1.0, 2.0}) {
    auto p = profile(s);
    const double expected = std::arg(p.d1) + std::arg(p.value);
    CHECK(std::remainder(lagrangian_angle(surface_jet(ext, s, 0.6)) - expected, kTwoPi) ==
          doctest::Approx(0.0).epsilon(1e-9));
  }
  // Hopf surface: beta = 2t + beta_L - pi/2, beta_L = arg(g1 g2' - g2 g1').
  auto curve = curves::torus_curve(0.6, {0, 5});
  auto hopf = make_centered_type2(curve, 1.0);
  for (double s : {0.5, 3.0})
    for (double t : {0.2, 2.0}) {
      auto g = curve(s);
      const double bl = std::arg(g.value.z1 * g.d1.z2 - g.value.z2 * g.d1.z1);
      auto j = surface_jet(hopf, s, t);
      CHECK(std::remainder(lagrangian_angle(j) - (2 * t + bl - kPi / 2), kTwoPi) == doctest::Approx(0.0).epsilon(1e-9));
      CHECK(beta_derivatives(j).beta_t == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("a non-stationary extensor has large Laplacian") {
  auto spec = make_centered_type1(curves::spiral({0, 3}));
  CHECK(laplace_beltrami_beta(beta_derivative_field(spec, spec.default_grid(64, 64))).max_abs > 1e-2);
}

}  // TEST_SUITE
