#include <doctest.h>

#include <boost/math/quadrature/trapezoidal.hpp>
#include <cmath>

#include "lagsurf/curves.hpp"
#include "lagsurf/cyclic.hpp"
#include "lagsurf/diffgeo.hpp"
#include "lagsurf/hamstat.hpp"
#include "lagsurf/solitons.hpp"

using namespace lagsurf;

namespace {

// Periodic integrand: the trapezoidal rule converges geometrically.
double phi_trapezoid(double C) {
  auto f = [C](double a) { return std::sin(a) / (C - 2 * std::sin(a)); };
  return boost::math::quadrature::trapezoidal(f, 0.0, kTwoPi, 1e-14);
}

}  // namespace

TEST_SUITE("hamstat") {

TEST_CASE("profile system at sample states") {
  auto a = hs_profile_rhs({1.0, kPi / 2, 2.0});
  CHECK(std::abs(a.dr) < 1e-16);
  CHECK(a.dalpha == 0.0);
  auto b = hs_profile_rhs({2.0, 0.0, 3.0});
  CHECK(b.dr == 1.0);
  CHECK(b.dalpha == 1.5);
  auto c = hs_profile_rhs({1.0, kPi, 2.5});
  CHECK(c.dr == -1.0);
  CHECK(c.dalpha == doctest::Approx(2.5));
  CHECK_THROWS_AS(hs_profile_rhs({0.0, 0.0, 3.0}), DomainError);
  CHECK(hs_first_integral({2.0, 0.0, 3.0}) == 12.0);
  CHECK(std::abs(hs_first_integral({1.0, kPi / 2, 2.0})) < 1e-15);
}

TEST_CASE("Phi against independent quadrature and the closed form") {
  for (double C : {2.05, 2.2, 2.5, 3.0, 5.0, 10.0, 37.0, 100.0}) {
    CAPTURE(C);
    const double q = phi_of_C(C);
    CHECK(std::abs(q - phi_trapezoid(C)) < 1e-9);
    CHECK(std::abs(q - kPi * (C / std::sqrt(C * C - 4) - 1)) < 1e-10);
    CHECK(std::abs(phi_of_C(C, PhiMethod::ClosedForm) - q) < 1e-10);
    CHECK(phi_of_C(-C) == doctest::Approx(q).epsilon(1e-12));
  }
}

TEST_CASE("Phi is decreasing and tends to zero like 2 pi / C^2") {
  double prev = phi_of_C(2.01);
  for (double C = 2.05; C < 200; C *= 1.3) {
    const double v = phi_of_C(C);
    CHECK(v < prev);
    CHECK(v > 0);
    prev = v;
  }
  const double big = 1e6;
  CHECK(phi_of_C(big, PhiMethod::ClosedForm) == doctest::Approx(kTwoPi / (big * big)).epsilon(1e-9));
  CHECK(phi_of_C(big) == doctest::Approx(kTwoPi / (big * big)).epsilon(1e-6));
}

TEST_CASE("Phi refuses the singular band") {
  CHECK_THROWS_AS(phi_of_C(2.0), DomainError);
  CHECK_THROWS_AS(phi_of_C(1.0), DomainError);
  CHECK_THROWS_AS(phi_of_C(2.0 + 1e-7), DomainError);
  CHECK_NOTHROW(phi_of_C(2.0 + 1e-7, PhiMethod::ClosedForm));
}

TEST_CASE("winding constants") {
  CHECK(winding_C_closed_form(1, 1) == doctest::Approx(3 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(winding_C_closed_form(1, 3) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(winding_C_closed_form(3, 1) == doctest::Approx(14 / std::sqrt(48.0)).epsilon(1e-14));
  for (auto [p, q] : {std::pair{1, 1}, {1, 3}, {3, 1}, {2, 1}, {2, 5}}) {
    CAPTURE(p);
    CAPTURE(q);
    const double C = solve_C_for_winding(p, q);
    CHECK(std::abs(C - winding_C_closed_form(p, q)) < 1e-8);
    CHECK(phi_trapezoid(C) == doctest::Approx(kTwoPi * p / q).epsilon(1e-9));
  }
  CHECK_THROWS_AS(solve_C_for_winding(0, 1), DomainError);
  CHECK_THROWS_AS(solve_C_for_winding(1, -2), DomainError);
}

TEST_CASE("first integral is conserved over ten periods") {
  for (double C : {2.5, 3 / std::sqrt(2.0), 4.0}) {
    auto tr = integrate_hs_profile({1.0, kPi / 2, C}, 10, 1e4, 1e-10);
    CHECK(tr.period_ends.size() == 10);
    CHECK(first_integral_drift(tr) < 1e-8);
  }
}

TEST_CASE("closed Hamiltonian-stationary curves") {
  for (auto [p, q] : {std::pair{1, 1}, {1, 3}, {3, 1}}) {
    CAPTURE(p);
    CAPTURE(q);
    auto hs = build_closed_hs_curve(p, q);
    CHECK(hs.closure_error < 1e-6);
    CHECK(hs.symmetry_error < 1e-6);
    CHECK(hs.self_intersections >= 1);
    CHECK(hs.rotation_per_period == doctest::Approx(kTwoPi * p / q).epsilon(1e-8));
    CHECK(hs.first_integral_drift < 1e-8);
    CHECK(hs.curve.domain().length() == doctest::Approx(q * hs.period).epsilon(1e-12));
  }
}

TEST_CASE("self-intersection counter") {
  CHECK(count_self_intersections(curves::circle(1.0, {0, kTwoPi}), 512) == 0);
  // Limacon r = 1/2 + cos s has one double point.
  CurvePlanar limacon(
      [](double s) {
        const cplx e = std::exp(cplx(0, s));
        const double r = 0.5 + std::cos(s), dr = -std::sin(s), ddr = -std::cos(s);
        const cplx i(0, 1);
        return PlanarJet{r * e, (dr + i * r) * e, (ddr + 2.0 * i * dr - r) * e};
      },
      {0, kTwoPi}, false);
  CHECK(count_self_intersections(limacon, 2048) == 1);
}

TEST_CASE("extensors over the profile carry r beta_s = C") {
  auto hs = build_closed_hs_curve(1, 3);
  auto spec = make_centered_type1(hs.curve);
  for (double s : {0.3, 1.1, 2.7, 6.0}) {
    auto j = surface_jet(spec, s, 0.8);
    const double r = std::abs(hs.curve(s).value);
    CHECK(r * beta_derivatives(j).beta_s == doctest::Approx(hs.c_flux).epsilon(1e-6));
  }
}

TEST_CASE("regimes") {
  CHECK(classify_regime(3.0) == HsRegime::BoundedClosedFamily);
  CHECK(classify_regime(-3.0) == HsRegime::BoundedClosedFamily);
  CHECK(classify_regime(1.0) == HsRegime::SpiralingEnds);
  CHECK(classify_regime(2.0) == HsRegime::CirclesAndSpirals);
  CHECK(classify_regime(0.0) == HsRegime::SpecialLagrangian);
  CHECK_FALSE(regime_name(HsRegime::SpiralingEnds).empty());
}

TEST_CASE("contact-stationary Hopf tori") {
  auto spec = make_contact_stationary_hopf(0.6);
  CHECK(hs_residual_suite(spec, spec.default_grid(64, 64)).max_abs < 1e-4);
  CHECK(lagrangian_residual_report(spec, spec.default_grid(32, 32)).max_abs < 1e-10);
  auto cl = make_contact_stationary_hopf(1 / std::sqrt(2.0));
  for (double s : {0.0, 1.0, 3.0}) {
    auto x = surface_jet(cl, s, 0.7).x;
    CHECK(std::abs(x.z1) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(std::abs(x.z2) == doctest::Approx(1 / std::sqrt(2.0)));
  }
  CHECK_THROWS_AS(make_contact_stationary_hopf(0.0), DomainError);
  CHECK_THROWS_AS(make_contact_stationary_hopf(1.0), DomainError);
}

TEST_CASE("Hamiltonian-stationary verdicts") {
  auto torus = make_product_torus(1.0, 2.0);
  CHECK(hs_residual_suite(torus, torus.default_grid(32, 32)).max_abs < 1e-8);
  auto gt2 = make_general_type2(curves::torus_curve(0.6, {0, 5}), 1.0, curves::exp_i(1.3, 0.4), 0.0);
  CHECK(hs_residual_suite(gt2, gt2.default_grid(64, 64)).max_abs > 1e-2);
}

TEST_CASE("Laplacian discretization converges at second order") {
  auto gt2 = make_general_type2(curves::torus_curve(0.6, {0, 5}), 1.0, curves::exp_i(1.3, 0.4), 0.0);
  auto study = laplacian_refinement_study(gt2);
  REQUIRE(study.successive.size() == 2);
  CHECK(study.successive[1] < study.successive[0]);
  CHECK(study.observed_order > 1.7);
  CHECK(study.observed_order < 2.3);
}

}  // TEST_SUITE
