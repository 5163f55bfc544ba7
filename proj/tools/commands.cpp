#include "commands.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "catalog.hpp"
#include "lagsurf/certify.hpp"
#include "lagsurf/hamstat.hpp"
#include "scene.hpp"

namespace lagsurf::cli {

using nlohmann::json;

namespace {

int cmd_catalog(bool as_json, std::ostream& out) {
  if (as_json) {
    json j = json::array();
    for (const auto& e : catalog()) {
      json params = json::object();
      for (const auto& p : e.params) params[p.name] = p.default_value;
      j.push_back({{"name", e.name}, {"family", e.family}, {"anchor", e.anchor}, {"description", e.description},
                   {"params", params}});
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& e : catalog()) {
    out << e.name;
    if (!e.params.empty()) {
      out << '(';
      for (std::size_t k = 0; k < e.params.size(); ++k)
        out << (k ? ", " : "") << e.params[k].name << '=' << fmt(e.params[k].default_value);
      out << ')';
    }
    out << "  [" << e.family << "]  " << e.anchor << "\n    " << e.description << "\n";
  }
  return kExitOk;
}

ImmersionSpec build_for_config(const SceneConfig& cfg) {
  try {
    return build_surface(cfg.surface, cfg.params);
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid surface parameters: ") + e.what());
  }
}

void write_outputs(const SceneConfig& cfg, const ImmersionSpec& spec, const GridSpec& grid, std::ostream& err) {
  if (!cfg.output) return;
  const OutputSpec& o = *cfg.output;
  for (const auto& f : o.formats) {
    const std::string path = o.path + "." + f;
    if (f == "csv") write_atomic(path, grid_csv(spec, grid));
    if (f == "obj") write_atomic(path, mesh_obj(spec, grid, o.projection, cfg.surface, o.circles));
    if (f == "json") write_atomic(path, grid_json(spec, grid, o.projection).dump(1) + "\n");
    err << "wrote " << path << "\n";
  }
}

int cmd_verify(const std::string& config_path, bool as_json, std::ostream& out, std::ostream& err) {
  const SceneConfig cfg = load_scene(config_path);
  if (cfg.checks.empty()) throw UsageError("config lists no checks");
  const ImmersionSpec spec = build_for_config(cfg);
  const GridSpec grid = resolve_grid(cfg.grid, spec);
  const std::vector<CheckResult> results = run_checks(spec, grid, cfg.checks);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  if (as_json) {
    json j;
    j["surface"] = cfg.surface;
    j["family"] = std::string(family_name(spec.family()));
    j["params"] = cfg.params;
    j["passed"] = all;
    j["checks"] = json::array();
    for (const auto& r : results) j["checks"].push_back(check_json(r));
    out << j.dump(2) << "\n";
  } else {
    out << "surface " << cfg.surface << " [" << family_name(spec.family()) << "] grid " << grid.n_s << "x" << grid.n_t
        << "\n";
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.check.kind;
      if (r.check.kind == "self_similar") out << "(lambda=" << fmt(r.check.lambda) << ")";
      if (r.report) out << " max=" << fmt(r.report->max_abs);
      out << " threshold=" << fmt(r.check.threshold);
      if (r.error) out << " error: " << *r.error;
      out << "\n";
    }
  }
  write_outputs(cfg, spec, grid, err);
  return all ? kExitOk : kExitCheckFailed;
}

void write_profile_csv(const HsTrajectory& traj, const std::string& path) {
  std::ostringstream csv;
  csv << "s,r,alpha,phi,gamma_re,gamma_im,first_integral\n";
  for (std::size_t k = 0; k < traj.s.size(); ++k) {
    const double r = traj.r[k], a = traj.alpha[k], ph = traj.phi[k];
    csv << fmt(traj.s[k]) << ',' << fmt(r) << ',' << fmt(a) << ',' << fmt(ph) << ',' << fmt(r * std::cos(ph)) << ','
        << fmt(r * std::sin(ph)) << ',' << fmt(hs_first_integral({r, a, traj.c_flux})) << "\n";
  }
  write_atomic(path, csv.str());
}

int cmd_profile(std::optional<double> c_value, const std::vector<int>& pq, const std::string& path, int periods,
                double length, double step, std::ostream& out, std::ostream& err) {
  if (c_value.has_value() == !pq.empty()) throw UsageError("profile needs exactly one of --C or --pq");
  if (!(step > 0.0) || !(length > 0.0) || periods < 1) throw UsageError("profile needs positive --step, --length, --periods");
  double C = 0.0;
  int n_periods = periods;
  if (!pq.empty()) {
    if (pq[0] <= 0 || pq[1] <= 0 || std::gcd(pq[0], pq[1]) != 1) throw UsageError("--pq needs coprime positive integers");
    C = solve_C_for_winding(pq[0], pq[1]);
    n_periods = pq[1];
  } else {
    C = *c_value;
    if (!std::isfinite(C)) throw UsageError("--C must be finite");
  }
  const HsRegime regime = classify_regime(C);
  const HsProfileState init{1.0, 0.5 * kPi, C};
  HsTrajectory traj;
  if (regime == HsRegime::BoundedClosedFamily) {
    traj = integrate_hs_profile(init, n_periods, 1e6, 1e-10, step);
  } else {
    err << "regime " << regime_name(regime) << ": no closed profile for C = " << fmt(C)
        << "; integrating over arclength " << fmt(length) << "\n";
    traj = integrate_hs_profile(init, 0, length, 1e-10, step);
  }
  if (traj.diagnostic) err << "diagnostic: " << *traj.diagnostic << "\n";
  write_profile_csv(traj, path);
  const std::size_t n = traj.s.size();
  const double gap = std::hypot(traj.r[n - 1] * std::cos(traj.phi[n - 1]) - traj.r[0] * std::cos(traj.phi[0]),
                                traj.r[n - 1] * std::sin(traj.phi[n - 1]) - traj.r[0] * std::sin(traj.phi[0]));
  out << "C=" << fmt(C) << " regime=" << regime_name(regime) << " samples=" << n
      << " periods=" << traj.period_ends.size() << " closure_gap=" << fmt(gap)
      << " first_integral_drift=" << fmt(first_integral_drift(traj)) << "\n";
  return kExitOk;
}

int cmd_mesh(const std::string& config_path, const std::string& path, std::ostream& out, std::ostream& err) {
  const SceneConfig cfg = load_scene(config_path);
  const ImmersionSpec spec = build_for_config(cfg);
  const GridSpec grid = resolve_grid(cfg.grid, spec);
  const Projection proj = cfg.output ? cfg.output->projection : Projection::Re1Im1Re2;
  const bool circles = cfg.output ? cfg.output->circles : true;
  MeshStats st;
  write_atomic(path, mesh_obj(spec, grid, proj, cfg.surface, circles, &st));
  out << "mesh " << cfg.surface << " vertices=" << st.vertices << " faces=" << st.faces
      << " skipped_degenerate=" << st.skipped_degenerate << " projection=" << projection_name(proj) << "\n";
  write_outputs(cfg, spec, grid, err);
  return kExitOk;
}

int cmd_certify(bool as_json, std::ostream& out) {
  const CertificateReport c = nonexistence_certificate();
  const QuaternionReport q = quaternion_identity_report();
  const double checksum = e_coefficient_checksum();
  std::vector<std::string> failures = c.failures;
  if (q.max_u_error > 1e-12) failures.push_back("closed form of u");
  if (q.max_v_error > 1e-12) failures.push_back("closed form of v");
  if (q.max_v_minus_ui > 1e-12) failures.push_back("v = -u i");
  if (q.max_factorization_error > 1e-12) failures.push_back("factorization identity");
  if (q.max_norm_multiplicativity > 1e-12) failures.push_back("|pq| = |p||q|");
  const bool ok = failures.empty();
  if (as_json) {
    json j;
    j["passed"] = ok;
    j["failures"] = failures;
    j["coefficient_checksum"] = checksum;
    j["roots"] = {{"y_plus", c.y_plus}, {"y_minus", c.y_minus}};
    j["E_at_roots"] = {c.e_at_plus, c.e_at_minus};
    j["dE_dY_at_roots"] = {c.ey_at_plus, c.ey_at_minus};
    j["F_at_roots"] = {c.f_at_plus, c.f_at_minus};
    j["F_expected_magnitudes"] = {c.f_expected_plus, c.f_expected_minus};
    j["x_zero_constants_min"] = {c.x_zero_min_first, c.x_zero_min_second};
    j["quaternions"] = {{"samples", q.samples},
                        {"seed", q.seed},
                        {"max_u_error", q.max_u_error},
                        {"max_v_error", q.max_v_error},
                        {"max_v_minus_ui", q.max_v_minus_ui},
                        {"max_factorization_error", q.max_factorization_error}};
    out << j.dump(2) << "\n";
  } else {
    out << "E(0, Y+) = " << fmt(c.e_at_plus) << ", E(0, Y-) = " << fmt(c.e_at_minus) << "\n";
    out << "dE/dY(0, Y+) = " << fmt(c.ey_at_plus) << ", dE/dY(0, Y-) = " << fmt(c.ey_at_minus) << "\n";
    out << "F(0, Y+) = " << fmt(c.f_at_plus) << " (|.| expected " << fmt(c.f_expected_plus) << ")\n";
    out << "F(0, Y-) = " << fmt(c.f_at_minus) << " (|.| expected " << fmt(c.f_expected_minus) << ")\n";
    out << "X = 0 constants: min 3 + 3w^2 = " << fmt(c.x_zero_min_first) << ", min 5 + 3w^2 = "
        << fmt(c.x_zero_min_second) << "\n";
    out << "coefficient checksum = " << fmt(checksum) << "\n";
    out << "quaternions (" << q.samples << " samples, seed " << q.seed << "): u " << fmt(q.max_u_error) << ", v "
        << fmt(q.max_v_error) << ", v + u i " << fmt(q.max_v_minus_ui) << ", factorization "
        << fmt(q.max_factorization_error) << "\n";
    for (const auto& f : failures) out << "FAILED: " << f << "\n";
    out << (ok ? "certificate holds" : "certificate FAILED") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lagrangian cyclic and ruled surfaces in C^2"};
  app.require_subcommand(1);

  bool json_flag = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in surfaces");
  catalog_cmd->add_flag("--json", json_flag, "machine-readable index");

  std::string config, out_path;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "run residual checks from a JSON scene config");
  verify_cmd->add_option("--config", config, "scene config")->required();
  verify_cmd->add_flag("--json", verify_json, "JSON report");

  double c_raw = 0.0;
  std::vector<int> pq;
  int periods = 1;
  double length = 50.0, step = 0.01;
  std::string profile_out;
  auto* profile_cmd = app.add_subcommand("profile", "integrate the Hamiltonian-stationary profile system");
  auto* c_opt = profile_cmd->add_option("--C", c_raw, "flux constant C");
  auto* pq_opt = profile_cmd->add_option("--pq", pq, "winding data p q")->expected(2);
  c_opt->excludes(pq_opt);
  profile_cmd->add_option("--out", profile_out, "CSV output")->required();
  profile_cmd->add_option("--periods", periods, "alpha-periods for --C (bounded regime)");
  profile_cmd->add_option("--length", length, "arclength for unbounded regimes");
  profile_cmd->add_option("--step", step, "sample spacing in arclength");

  std::string mesh_config, mesh_out;
  auto* mesh_cmd = app.add_subcommand("mesh", "export a Wavefront OBJ mesh");
  mesh_cmd->add_option("--config", mesh_config, "scene config")->required();
  mesh_cmd->add_option("--out", mesh_out, "OBJ output")->required();

  bool certify_json = false;
  auto* certify_cmd = app.add_subcommand("certify", "run the algebraic certificates");
  certify_cmd->add_flag("--json", certify_json, "JSON report");

  std::vector<std::string> argv_store{"lagsurf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(json_flag, out);
    if (*verify_cmd) return cmd_verify(config, verify_json, out, err);
    if (*profile_cmd)
      return cmd_profile(c_opt->count() ? std::optional<double>(c_raw) : std::nullopt, pq, profile_out, periods, length, step, out, err);
    if (*mesh_cmd) return cmd_mesh(mesh_config, mesh_out, out, err);
    if (*certify_cmd) return cmd_certify(certify_json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace lagsurf::cli
