// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "lagsurf/certify.hpp"
#include "lagsurf/curves.hpp"
#include "lagsurf/cyclic.hpp"
#include "lagsurf/diffgeo.hpp"
#include "lagsurf/hamstat.hpp"
#include "lagsurf/ruled.hpp"
#include "lagsurf/solitons.hpp"

using namespace lagsurf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  // Failure accepted as unattainable; printed but not counted in the exit status.
  bool known_unattainable = false;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

GridSpec square(const ImmersionSpec& spec, int n) { return spec.default_grid(n, n); }

void c1_lagrangian(Outcome& o) {
  double worst = 0.0, slowest = 0.0;
  for (const auto& e : cli::catalog()) {
    const auto t0 = Clock::now();
    const ImmersionSpec spec = cli::build_surface(e.name);
    const double r = lagrangian_residual_report(spec, square(spec, 64)).max_abs;
    const double dt = seconds_since(t0);
    worst = std::max(worst, r);
    slowest = std::max(slowest, dt);
    o.require(r < 1e-9, e.name + " residual " + g(r));
    o.require(dt < 1.0, e.name + " took " + g(dt) + " s");
  }
  o.detail << cli::catalog().size() << " surfaces, max residual " << g(worst) << ", slowest " << g(slowest) << " s";
}

void c2_phi(Outcome& o) {
  double worst = 0.0;
  for (double C : {2.05, 2.5, 3.0, 5.0, 10.0, 100.0}) {
    const double d = std::abs(phi_of_C(C) - kPi * (C / std::sqrt(C * C - 4) - 1));
    worst = std::max(worst, d);
    o.require(d < 1e-8, "C=" + g(C) + " diff " + g(d));
  }
  const double big = phi_of_C(1e6);
  o.detail << "max |quadrature - closed form| " << g(worst) << ", Phi(1e6) = " << g(big);
  if (!(big < 3e-12)) {
    // Phi(C) ~ 2 pi / C^2, so Phi(1e6) = 6.28e-12 for any correct evaluation.
    o.pass = false;
    o.known_unattainable = worst < 1e-8;
    o.detail << " [failed: Phi(1e6) >= 3e-12; known unattainable, Phi(C) ~ 2pi/C^2 = " << g(kTwoPi / 1e12) << "]";
  }
}

void c3_closed_curves(Outcome& o) {
  const auto t0 = Clock::now();
  struct Case {
    int p, q;
    double expected;
  };
  for (Case c : {Case{1, 1, 3 / std::sqrt(2.0)}, Case{1, 3, 2.5}, Case{3, 1, 14 / std::sqrt(48.0)}}) {
    const std::string tag = "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
    const double C = solve_C_for_winding(c.p, c.q);
    o.require(std::abs(C - c.expected) < 1e-8, tag + " C=" + g(C));
    try {
      const ClosedHsCurve hs = build_closed_hs_curve(c.p, c.q);
      o.require(hs.closure_error < 1e-6, tag + " closure " + g(hs.closure_error));
      o.require(hs.symmetry_error < 1e-6, tag + " symmetry " + g(hs.symmetry_error));
      o.require(hs.self_intersections >= 1, tag + " embedded");
      o.detail << tag << " C=" << g(C) << " closure " << g(hs.closure_error) << " symmetry " << g(hs.symmetry_error)
               << " crossings " << hs.self_intersections << "; ";
    } catch (const Error& e) {
      o.require(false, tag + " " + e.what());
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 5.0, "took " + g(dt) + " s");
  o.detail << "total " << g(dt) << " s";
}

void c4_first_integral(Outcome& o) {
  double worst = 0.0;
  for (double C : {2.5, 3 / std::sqrt(2.0), 4.0}) {
    const HsTrajectory tr = integrate_hs_profile({1.0, kPi / 2, C}, 10, 1e4, 1e-10);
    const double d = first_integral_drift(tr);
    worst = std::max(worst, d);
    o.require(tr.period_ends.size() == 10, "C=" + g(C) + " periods " + std::to_string(tr.period_ends.size()));
    o.require(d < 1e-8, "C=" + g(C) + " drift " + g(d));
  }
  o.detail << "max relative drift over 10 periods " << g(worst);
}

void c5_positive(Outcome& o) {
  auto check = [&](const std::string& tag, const ImmersionSpec& spec, SolitonParams p) {
    const double r = self_similar_residual(spec, p, square(spec, 64)).max_abs;
    o.require(r < 1e-8, tag + " residual " + g(r));
    o.detail << tag << " " << g(r) << "; ";
  };
  check("clifford", make_clifford_torus(), {1.0, CurvatureConvention::HalfTrace});
  for (double r : {0.5, 1.0, 2.0}) {
    check("centered r=" + g(r), make_centered_type1(curves::circle_arclength(r, {0, kTwoPi * r})), {1 / (r * r)});
    check("product r=" + g(r), make_product_circle_curve(r, curves::circle_arclength(r, {0, kTwoPi * r})),
          {1 / (r * r), CurvatureConvention::FullTrace});
  }
  o.detail << "products under the full-trace convention";
}

void c6_negative(Outcome& o) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.2, 0.8);
  const double w1 = u(rng), w2 = u(rng);
  const ImmersionSpec gt1 =
      make_general_type1(curves::circle(1.0, {0, 3}), constant_real(w1), constant_real(w2), 0.0);
  const ImmersionSpec t3 = make_centered_type3(curves::hyperbola({-1, 1}), 1 / std::sqrt(2.0));
  const ImmersionSpec heli = make_blair_helicoid(0.6, 0.8, 1.0, 1.0);
  const auto lambdas = standard_lambda_set();
  for (auto [tag, spec] : {std::pair{"general type I", &gt1}, {"type III hyperbola", &t3}, {"helicoid", &heli}}) {
    const double m = soliton_obstruction_scan(*spec, lambdas, square(*spec, 32)).min_max;
    o.require(m > 1e-3, std::string(tag) + " min-max " + g(m));
    o.detail << tag << " " << g(m) << "; ";
  }
  double pairing = 0.0;
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const SurfaceJet jet = surface_jet(t3, -1.0 + 0.25 * i, kTwoPi * j / 8);
      pairing = std::max(pairing, std::abs(dot(jet.x, J(jet.xt)) - 0.5));
    }
  o.require(pairing < 1e-10, "<X, J X_t> off by " + g(pairing));
  const auto alpha = curves::ads_torus_curve(0.7, {0, 3});
  const auto gamma = curves::torus_curve(0.6, {0, 5});
  const ImmersionSpec cc = cc_product_immersion(alpha, gamma);
  double cc_err = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const double s = 3.0 * (i + 0.5) / 8, t = 5.0 * (j + 0.5) / 8;
      const SurfaceJet jet = surface_jet(cc, s, t);
      const PointC2 h = mean_curvature(jet, first_fundamental_form(jet));
      cc_err = std::max(cc_err, norm(h - cc_mean_curvature_oracle(alpha, gamma, s, t)));
    }
  o.require(cc_err < 1e-6, "CC oracle " + g(cc_err));
  o.detail << "pairing err " << g(pairing) << ", CC oracle err " << g(cc_err);
}

void c7_hamiltonian_stationary(Outcome& o) {
  auto lb = [](const ImmersionSpec& spec, int n) { return hs_residual_suite(spec, square(spec, n)).max_abs; };
  for (auto [tag, spec] : {std::pair{"clifford", make_clifford_torus()}, {"S1(1)xS1(2)", make_product_torus(1, 2)},
                           {"S1(0.5)xS1(0.5)", make_product_torus(0.5, 0.5)}}) {
    const double r = lb(spec, 64);
    o.require(r < 1e-8, std::string(tag) + " " + g(r));
    o.detail << tag << " " << g(r) << "; ";
  }
  std::vector<std::pair<std::string, ImmersionSpec>> grid_limited;
  for (auto [p, q] : {std::pair{1, 1}, {1, 3}, {3, 1}})
    grid_limited.emplace_back("hs_closed(" + std::to_string(p) + "," + std::to_string(q) + ")",
                              make_centered_type1(build_closed_hs_curve(p, q).curve));
  grid_limited.emplace_back("hopf c=0.6", make_contact_stationary_hopf(0.6));
  for (const auto& [tag, spec] : grid_limited) {
    std::vector<double> seq;
    for (int n : {32, 64, 128}) seq.push_back(lb(spec, n));
    o.require(seq.back() < 1e-4, tag + " " + g(seq.back()));
    o.detail << tag << " " << g(seq[0]) << "/" << g(seq[1]) << "/" << g(seq[2]) << "; ";
  }
  const ImmersionSpec gt2 = make_general_type2(curves::torus_curve(0.6, {0, 5}), 1.0, curves::exp_i(1.3, 0.4), 0.0);
  const double r = lb(gt2, 64);
  o.require(r > 1e-2, "general type II " + g(r));
  const RefinementStudy study = laplacian_refinement_study(gt2);
  o.require(study.observed_order > 1.7 && study.observed_order < 2.3, "order " + g(study.observed_order));
  o.detail << "general type II " << g(r) << ", refinement order " << g(study.observed_order);
}

void c8_certificate(Outcome& o) {
  const auto t0 = Clock::now();
  const CertificateReport c = nonexistence_certificate();
  const double dt = seconds_since(t0);
  const double root = std::sqrt(106.0);
  const double yp = (1 + root) / 6, ym = (1 - root) / 6;
  o.require(std::abs(eval_E({0, yp})) < 1e-9 && std::abs(eval_E({0, ym})) < 1e-9, "E roots");
  const double fp = std::abs(std::abs(eval_F({0, yp})) - (1100 + 85 * root)) / (1100 + 85 * root);
  const double fm = std::abs(std::abs(eval_F({0, ym})) - (1100 - 85 * root)) / (1100 - 85 * root);
  o.require(fp < 1e-6 && fm < 1e-6, "|F| relative errors " + g(fp) + ", " + g(fm));
  o.require(eval_E_Y({0, yp}) != 0.0 && eval_E_Y({0, ym}) != 0.0, "E_Y vanishes");
  o.require(c.ok(), "certificate report");
  o.require(dt < 0.1, "took " + g(dt) + " s");
  o.detail << "F(0,Y+)=" << eval_F({0, yp}) << " F(0,Y-)=" << eval_F({0, ym})
           << " (negatives of the printed values), E_Y " << g(c.ey_at_plus) << "/" << g(c.ey_at_minus) << ", "
           << g(dt) << " s";
}

void c9_quaternions(Outcome& o) {
  const QuaternionReport q = quaternion_identity_report(1000, 20240601);
  o.require(q.samples == 1000, "sample count");
  o.require(q.max_u_error < 1e-12, "u " + g(q.max_u_error));
  o.require(q.max_v_error < 1e-12, "v " + g(q.max_v_error));
  o.require(q.max_factorization_error < 1e-12, "factorization " + g(q.max_factorization_error));
  o.detail << "u " << g(q.max_u_error) << ", v " << g(q.max_v_error) << ", factorization "
           << g(q.max_factorization_error) << " over 1000 samples";
}

void c10_soliton_profile(Outcome& o) {
  const auto t0 = Clock::now();
  const ClosedSolitonProfile prof = shoot_centered_soliton(1, 3);
  const ImmersionSpec spec = make_centered_type1(prof.profile.curve);
  const double r = self_similar_residual(spec, {1.0}, square(spec, 64)).max_abs;
  const double dt = seconds_since(t0);
  o.require(prof.closure_error < 1e-4, "closure " + g(prof.closure_error));
  o.require(prof.winding == 1, "winding " + std::to_string(prof.winding));
  o.require(prof.curvature_maxima == 3, "maxima " + std::to_string(prof.curvature_maxima));
  o.require(r < 1e-4, "residual " + g(r));
  o.require(dt < 30.0, "took " + g(dt) + " s");
  o.detail << "r0=" << g(prof.r0) << " closure " << g(prof.closure_error) << " winding " << prof.winding
           << " maxima " << prof.curvature_maxima << " residual " << g(r) << ", " << g(dt) << " s";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"lagrangian residual over the catalog", c1_lagrangian},
      {"Phi oracle", c2_phi},
      {"closed Hamiltonian-stationary curves", c3_closed_curves},
      {"first integral", c4_first_integral},
      {"soliton positive controls", c5_positive},
      {"soliton negative controls", c6_negative},
      {"Hamiltonian-stationary verdicts", c7_hamiltonian_stationary},
      {"nonexistence certificate", c8_certificate},
      {"quaternion identities", c9_quaternions},
      {"closed self-similar profile", c10_soliton_profile},
  };
  int hard_failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.known_unattainable = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass && !o.known_unattainable) ++hard_failures;
    std::printf("%s %2zu %s: %s%s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].name, o.detail.str().c_str(),
                (!o.pass && o.known_unattainable) ? " (known unattainable, excluded from exit status)" : "");
  }
  return hard_failures == 0 ? 0 : 1;
}
