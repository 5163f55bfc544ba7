#include <doctest.h>

#include <cmath>

#include "lagsurf/curves.hpp"
#include "lagsurf/diffgeo.hpp"
#include "lagsurf/ruled.hpp"
#include "lagsurf/solitons.hpp"

using namespace lagsurf;

namespace {

CurvePlanar constant_density(cplx a, Interval dom) {
  return CurvePlanar([a](double) { return PlanarJet{a, 0.0, 0.0}; }, dom, false);
}

// (cos s, sin s) e^{i eps s}: unit sphere, <gamma', i gamma> = eps.
CurveS3Legendrian tilted_circle(double eps, Interval dom) {
  return CurveS3Legendrian(
      [eps](double s) {
        const cplx e = std::exp(cplx(0, eps * s));
        const cplx ie(0, eps);
        const PointC2 g{std::cos(s) * e, std::sin(s) * e};
        const PointC2 base1{-std::sin(s) * e, std::cos(s) * e};
        const PointC2 d1 = base1 + ie * g;
        const PointC2 d2 = -1.0 * g + 2.0 * (ie * base1) + (ie * ie) * g;
        return C2Jet{g, d1, d2};
      },
      dom, true);
}

ImmersionSpec unchecked_ruled(const CurveS3Legendrian& gamma) {
  const Interval dom = gamma.domain();
  auto zero_v = std::make_shared<const numerics::CumulativeIntegral<PointC2>>([](double) { return PointC2{}; }, dom,
                                                                              dom.lo, 2);
  auto zero_t = std::make_shared<const numerics::CumulativeIntegral<double>>([](double) { return 0.0; }, dom, dom.lo, 2);
  family::Ruled f{gamma, constant_density(0.0, dom), constant_real(0.0), constant_real(0.0), dom.lo, zero_v, zero_t};
  return ImmersionSpec(f, dom, kRulingDomain, false);
}

}  // namespace

TEST_SUITE("ruled") {

TEST_CASE("ruled surfaces over Legendrian directrices are Lagrangian") {
  const Interval dom{0.0, 1.0};
  CurvePlanar identity = curves::identity_curve(dom);
  std::vector<ImmersionSpec> specs{
      make_ruled(curves::great_circle(dom), constant_density(0.0, dom), 0.0),
      make_ruled(curves::great_circle(dom), identity, 0.0),
      make_ruled(curves::torus_curve(0.6, {0, 3}), constant_density(cplx(0.3, -0.2), {0, 3}), 1.0),
      make_blair_helicoid(0.6, 0.8, 1.0, 1.0),
  };
  for (const auto& spec : specs) {
    GridSpec g = spec.default_grid(32, 32);
    g.t_range = {-2.0, 2.0};
    CHECK(lagrangian_residual_report(spec, g).max_abs < 1e-9);
  }
}

TEST_CASE("rulings are straight") {
  auto spec = make_blair_helicoid(0.6, 0.8, 1.0, 1.0);
  for (double s : {0.0, 1.3, 4.0})
    for (double t : {-3.0, 0.0, 2.5}) {
      auto j = surface_jet(spec, s, t);
      CHECK(j.xtt.z1 == cplx(0, 0));
      CHECK(j.xtt.z2 == cplx(0, 0));
    }
}

TEST_CASE("the Legendrian condition is necessary") {
  GridSpec g;
  g.n_s = 16;
  g.n_t = 16;
  g.s_range = {0, 1};
  g.t_range = {0.5, 2.0};
  g.periodic_t = false;
  CHECK(lagrangian_residual_report(unchecked_ruled(tilted_circle(0.0, {0, 1})), g).max_abs < 1e-12);
  CHECK(lagrangian_residual_report(unchecked_ruled(tilted_circle(1e-3, {0, 1})), g).max_abs > 1e-4);
  CHECK_THROWS_AS(make_ruled(tilted_circle(1e-3, {0, 1}), constant_density(0.0, {0, 1}), 0.0), ConstraintError);
}

TEST_CASE("orthogonalizing the rulings") {
  const Interval dom{0.0, kTwoPi};
  auto drifted = make_ruled_general(curves::great_circle(dom), constant_density(cplx(0.2, 0.3), dom),
                                    curves::linear_real(0.2, 0.1), 0.0);
  GridSpec g = drifted.default_grid(32, 32);
  g.t_range = {-1.0, 1.0};
  CHECK(ruling_orthogonality(drifted, g).max_abs > 1e-2);
  auto ortho = orthogonalize_rulings(drifted);
  CHECK(ruling_orthogonality(ortho, g).max_abs < 1e-8);
  // Same surface: X^(s, t) = X(s, t + T(s)) with T(s) = -int_0^s (0.2 + 0.1u) du.
  for (double s : {0.5, 2.0, 4.0}) {
    const double T = -(0.2 * s + 0.05 * s * s);
    for (double t : {-1.0, 0.0, 1.0})
      CHECK(norm(surface_jet(ortho, s, t).x - surface_jet(drifted, s, t + T).x) < 1e-10);
  }
  auto plain = make_blair_helicoid(0.6, 0.8, 1.0, 1.0);
  auto again = orthogonalize_rulings(plain);
  CHECK(norm(surface_jet(again, 1.0, 0.5).x - surface_jet(plain, 1.0, 0.5).x) < 1e-14);
  CHECK_THROWS_AS(orthogonalize_rulings(make_clifford_torus()), DomainError);
}

TEST_CASE("mean curvature along i gamma") {
  auto heli = make_blair_helicoid(0.6, 0.8, 1.0, 1.0);
  // Density 1 + i at t = 0: -1 / (1 + 1).
  CHECK(ruled_mean_curvature_oracle(heli, 0.7, 0.0) == doctest::Approx(-0.5));
  for (double s : {0.2, 2.5, 5.0})
    for (double t : {-3.0, -0.5, 0.0, 1.5}) {
      auto j = surface_jet(heli, s, t);
      auto h = mean_curvature(j, first_fundamental_form(j));
      auto f = heli.as<family::Ruled>();
      const PointC2 ig = J(f->gamma(s).value);
      CHECK(2 * dot(h, ig) == doctest::Approx(ruled_mean_curvature_oracle(heli, s, t)).epsilon(1e-10));
      CHECK(2 * dot(h, ig) == doctest::Approx(-1.0 / ((t + 1) * (t + 1) + 1)).epsilon(1e-10));
    }
  const Interval dom{0.0, 1.0};
  auto flat = make_ruled(curves::great_circle(dom), constant_density(0.0, dom), 0.0);
  auto j = surface_jet(flat, 0.5, 1.0);
  CHECK(norm(mean_curvature(j, first_fundamental_form(j))) < 1e-14);
}

TEST_CASE("helicoid is not self-similar") {
  auto heli = make_blair_helicoid(0.6, 0.8, 1.0, 1.0);
  GridSpec g = heli.default_grid(32, 32);
  auto ob = ruled_soliton_obstruction(heli, standard_lambda_set(), g);
  CHECK(ob.max_x_spread < 1e-12);
  CHECK(ob.min_h_spread > 1e-3);
  CHECK(ob.report.max_abs > 1e-3);
}

TEST_CASE("parallel rulings over a shrinking circle") {
  const double r = 1.5;
  auto spec = make_product_line_curve(curves::circle_arclength(r, {0, kTwoPi * r}));
  GridSpec g = spec.default_grid(32, 32);
  CHECK(self_similar_residual(spec, {1 / (r * r), CurvatureConvention::FullTrace}, g).max_abs < 1e-10);
  CHECK(lagrangian_residual_report(spec, g).max_abs < 1e-14);
}

TEST_CASE("Legendrian frames") {
  CHECK(legendrian_frame_defect(curves::great_circle({0, kTwoPi})) < 1e-14);
  CHECK(legendrian_frame_defect(curves::torus_curve(0.3, {0, 4})) < 1e-12);
  CHECK(legendrian_frame_defect(tilted_circle(1e-2, {0, 1})) > 1e-3);
}

}  // TEST_SUITE

TEST_SUITE("ruled") {

TEST_CASE("flat density gives a vanishing i gamma component") {
  const Interval dom{0.0, 1.0};
  auto spec = make_ruled(curves::great_circle(dom), constant_density(0.0, dom), 0.0);
  for (double t : {-2.0, 0.5, 3.0}) {
    CHECK(ruled_mean_curvature_oracle(spec, 0.5, t) == 0.0);
    auto j = surface_jet(spec, 0.5, t);
    CHECK(std::abs(dot(mean_curvature(j, first_fundamental_form(j)), J(j.xt))) < 1e-14);
  }
}

TEST_CASE("oracle against the engine on a grid") {
  auto heli = orthogonalize_rulings(make_blair_helicoid(0.6, 0.8, 1.0, 1.0));
  GridSpec g = heli.default_grid(32, 32);
  double worst = 0.0;
  const auto* f = heli.as<family::Ruled>();
  for (int i = 0; i < g.n_s; ++i)
    for (int k = 0; k < g.n_t; ++k) {
      const double s = g.s_at(i), t = g.t_at(k);
      auto j = surface_jet(heli, s, t);
      const double engine = 2 * dot(mean_curvature(j, first_fundamental_form(j)), J(f->gamma(s).value));
      worst = std::max(worst, std::abs(engine - ruled_mean_curvature_oracle(heli, s, t)));
    }
  CHECK(worst < 1e-6);
  CHECK(ruling_orthogonality(heli, g).max_abs < 1e-9);
}

TEST_CASE("helicoid scan over a small lambda set") {
  auto heli = make_blair_helicoid(0.6, 0.8, 1.0, 1.0);
  auto ob = ruled_soliton_obstruction(heli, {-1.0, -0.5, 0.5, 1.0}, heli.default_grid(32, 32));
  CHECK(ob.report.max_abs > 1e-3);
}

}  // TEST_SUITE
