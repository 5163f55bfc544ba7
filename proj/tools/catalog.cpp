#include "catalog.hpp"

#include <algorithm>

#include "lagsurf/curves.hpp"
#include "lagsurf/cyclic.hpp"
#include "lagsurf/hamstat.hpp"
#include "lagsurf/ruled.hpp"
#include "lagsurf/solitons.hpp"

namespace lagsurf::cli {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"clifford_torus", "ProductCircleCurve", "Clifford torus, self-similar with lambda = 1",
       "(1/sqrt 2)(e^{is}, e^{it})", {}},
      {"product_circles", "ProductCircleCurve", "Cartesian product of two round circles",
       "(r1 e^{is}, r2 e^{it})", {{"r1", 1.0}, {"r2", 2.0}}},
      {"hopf_contact_stationary", "CenteredType2", "contact stationary Hopf torus over a torus curve of S^3",
       "e^{it} (c e^{ias}, sqrt(1-c^2) e^{ibs})", {{"c", 0.6}}},
      {"hs_closed", "CenteredType1", "closed q-symmetric Hamiltonian stationary profile",
       "complex extensor over the closed (p, q) profile with Phi(C) = 2 pi p / q", {{"p", 1.0}, {"q", 1.0}}},
      {"centered_selfsimilar", "CenteredType1", "closed self-similar complex extensor with 1/4 < p/q < 1/2",
       "complex extensor over a shot (p, q) soliton profile", {{"p", 1.0}, {"q", 3.0}, {"lambda", 1.0}}},
      {"ads_hyperbola_type3", "CenteredType3", "centered type III over the anti-de Sitter hyperbola",
       "c (sinh s e^{it}, cosh s e^{-it})", {{"c", 0.7071067811865476}, {"s_max", 1.0}}},
      {"blair_helicoid", "Ruled", "Lagrangian helicoid: ruled surface over a phased great circle",
       "t (k + il)(cos s, sin s) + (x0 + i y0) int gamma'", {{"k", 0.6}, {"l", 0.8}, {"x0", 1.0}, {"y0", 1.0}}},
      {"general_type1_demo", "GeneralType1", "complex extensor with a real translation density",
       "unit circle profile, W1 = a + b u, W2 = w2", {{"a", 0.3}, {"b", 0.2}, {"w2", 0.5}}},
      {"cc_product", "CcProduct", "product of Legendrian curves of the anti-de Sitter space and S^3",
       "(a1(s) g1(t), a2(s) g2(t)) with the anti-de Sitter torus curve and the Hopf great circle", {{"rho", 0.7}}},
      {"centered_type1_spiral", "CenteredType1", "complex extensor over a planar spiral",
       "(1 + s) e^{is} (cos t, sin t)", {{"s_max", 4.0}}},
      {"general_type2_demo", "GeneralType2", "Hopf-type surface with a complex translation density",
       "c e^{it} gamma(s) + int W (conj g2, -conj g1), W = A e^{i w u}", {{"c", 1.0}, {"A", 0.4}, {"w", 1.3}}},
      {"general_type3_demo", "GeneralType3", "type III surface with a complex translation density",
       "hyperbola generator, W = A e^{i w u}", {{"c", 1.0}, {"A", 0.3}, {"w", 0.7}}},
      {"product_line_shrinker", "ProductLineCurve", "line times a shrinking circle",
       "(t, r e^{is})", {{"r", 1.0}}},
      {"ruled_drift_demo", "Ruled", "ruled surface with non-orthogonal rulings",
       "great circle directrix, density u, drift a + b u", {{"a", 0.2}, {"b", 0.1}}},
  };
  return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
  const auto& c = catalog();
  const auto it = std::find_if(c.begin(), c.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == c.end()) throw UsageError("unknown catalog surface '" + name + "'");
  return *it;
}

namespace {

ParamMap resolve(const CatalogEntry& entry, const ParamMap& given) {
  ParamMap out;
  for (const auto& p : entry.params) out[p.name] = p.default_value;
  for (const auto& [k, v] : given) {
    if (!out.count(k)) throw UsageError("surface '" + entry.name + "' has no parameter '" + k + "'");
    if (!std::isfinite(v)) throw UsageError("parameter '" + k + "' must be finite");
    out[k] = v;
  }
  return out;
}

int as_int(double v, const std::string& what) {
  if (v != std::round(v)) throw UsageError(what + " must be an integer");
  return static_cast<int>(v);
}

}  // namespace

ImmersionSpec build_surface(const std::string& name, const ParamMap& given) {
  const CatalogEntry& entry = find_entry(name);
  const ParamMap p = resolve(entry, given);
  const Interval circle{0.0, kTwoPi};

  if (name == "clifford_torus") return make_clifford_torus();
  if (name == "product_circles") return make_product_torus(p.at("r1"), p.at("r2"));
  if (name == "hopf_contact_stationary") return make_contact_stationary_hopf(p.at("c"));
  if (name == "hs_closed") {
    const ClosedHsCurve c = build_closed_hs_curve(as_int(p.at("p"), "p"), as_int(p.at("q"), "q"));
    return make_centered_type1(c.curve);
  }
  if (name == "centered_selfsimilar") {
    const ClosedSolitonProfile s = shoot_centered_soliton(as_int(p.at("p"), "p"), as_int(p.at("q"), "q"), p.at("lambda"));
    return make_centered_type1(s.profile.curve);
  }
  if (name == "ads_hyperbola_type3") {
    const double m = p.at("s_max");
    if (!(m > 0.0)) throw DomainError("s_max must be positive");
    return make_centered_type3(curves::hyperbola({-m, m}), p.at("c"));
  }
  if (name == "blair_helicoid") return make_blair_helicoid(p.at("k"), p.at("l"), p.at("x0"), p.at("y0"));
  if (name == "general_type1_demo")
    return make_general_type1(curves::circle_arclength(1.0, circle), curves::linear_real(p.at("a"), p.at("b")),
                              constant_real(p.at("w2")), 0.0);
  if (name == "cc_product")
    return cc_product_immersion(curves::ads_torus_curve(p.at("rho"), {0.0, 3.0}), curves::hopf_great_circle(circle));
  if (name == "centered_type1_spiral") {
    const double m = p.at("s_max");
    if (!(m > 0.0)) throw DomainError("s_max must be positive");
    return make_centered_type1(curves::spiral({0.0, m}));
  }
  if (name == "general_type2_demo")
    return make_general_type2(curves::torus_curve(0.6, {0.0, 5.0}), p.at("c"), curves::exp_i(p.at("w"), p.at("A")), 0.0);
  if (name == "general_type3_demo")
    return make_general_type3(curves::hyperbola({-1.0, 1.0}), p.at("c"), curves::exp_i(p.at("w"), p.at("A")), 0.0);
  if (name == "product_line_shrinker") return make_product_line_curve(curves::circle_arclength(p.at("r"), {0.0, kTwoPi * p.at("r")}));
  if (name == "ruled_drift_demo")
    return make_ruled_general(curves::great_circle(circle), curves::identity_curve(circle),
                              curves::linear_real(p.at("a"), p.at("b")), 0.0);
  throw UsageError("catalog entry '" + name + "' has no builder");
}

ResidualReport generating_constraints(const ImmersionSpec& spec, int n) {
  auto merge = [](ResidualReport a, const ResidualReport& b) {
    if (b.max_abs > a.max_abs) {
      a.max_abs = b.max_abs;
      a.argmax_s = b.argmax_s;
    }
    a.mean_abs = std::max(a.mean_abs, b.mean_abs);
    a.samples += b.samples;
    return a;
  };
  ResidualReport r = std::visit(
      [n, &merge](const auto& f) -> ResidualReport {
        using T = std::decay_t<decltype(f)>;
        if constexpr (requires { f.gamma; } && !std::is_same_v<T, family::CcProduct>) {
          return curve_constraint_residual(f.gamma, n);
        } else if constexpr (std::is_same_v<T, family::CcProduct>) {
          return merge(curve_constraint_residual(f.alpha, n), curve_constraint_residual(f.gamma, n));
        } else if constexpr (requires { f.alpha; }) {
          return curve_constraint_residual(f.alpha, n);
        } else {
          return curve_constraint_residual(f.curve, n);
        }
      },
      spec.payload());
  r.name = "constraints";
  return r;
}

}  // namespace lagsurf::cli
