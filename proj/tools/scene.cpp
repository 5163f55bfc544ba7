#include "scene.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lagsurf/cyclic.hpp"
#include "lagsurf/diffgeo.hpp"
#include "lagsurf/hamstat.hpp"

namespace lagsurf::cli {

using nlohmann::json;

Projection parse_projection(const std::string& name) {
  if (name == "re1_im1_re2") return Projection::Re1Im1Re2;
  if (name == "re1_re2_im2") return Projection::Re1Re2Im2;
  if (name == "stereographic") return Projection::Stereographic;
  throw UsageError("unknown projection '" + name + "'");
}

std::string projection_name(Projection p) {
  switch (p) {
    case Projection::Re1Im1Re2: return "re1_im1_re2";
    case Projection::Re1Re2Im2: return "re1_re2_im2";
    case Projection::Stereographic: return "stereographic";
  }
  return "re1_im1_re2";
}

std::array<double, 3> project(const PointC2& x, Projection p) {
  switch (p) {
    case Projection::Re1Im1Re2: return {x.z1.real(), x.z1.imag(), x.z2.real()};
    case Projection::Re1Re2Im2: return {x.z1.real(), x.z2.real(), x.z2.imag()};
    case Projection::Stereographic: {
      const double n = norm(x);
      if (!(n > 0.0)) return {0.0, 0.0, 0.0};
      const PointC2 u = x / n;
      const double d = 1.0 - u.z2.imag();
      if (d < 1e-12) throw DegenerateError("stereographic projection hits the pole");
      return {u.z1.real() / d, u.z1.imag() / d, u.z2.real() / d};
    }
  }
  return {0.0, 0.0, 0.0};
}

double default_threshold(const std::string& kind) {
  if (kind == "lagrangian") return 1e-9;
  if (kind == "self_similar") return 1e-4;
  if (kind == "hamiltonian_stationary") return 1e-4;
  if (kind == "r2K") return 1e-8;
  if (kind == "constraints") return 1e-8;
  throw UsageError("unknown check '" + kind + "'");
}

namespace {

Interval parse_range(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw UsageError(std::string(what) + " must be a [lo, hi] pair of numbers");
  const Interval r{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.hi > r.lo))
    throw UsageError(std::string(what) + " must be finite with lo < hi");
  return r;
}

int parse_size(const json& j, const char* what) {
  if (!j.is_number_integer()) throw UsageError(std::string(what) + " must be an integer");
  const int n = j.get<int>();
  if (n < 8) throw UsageError(std::string(what) + " must be at least 8");
  return n;
}

CheckSpec parse_check(const json& j) {
  CheckSpec c;
  if (j.is_string()) {
    c.kind = j.get<std::string>();
  } else if (j.is_object() && j.contains("kind") && j["kind"].is_string()) {
    c.kind = j["kind"].get<std::string>();
    for (const auto& [k, v] : j.items()) {
      if (k == "kind") continue;
      if (k == "lambda" && v.is_number() && c.kind == "self_similar") {
        c.lambda = v.get<double>();
      } else if (k == "convention" && v.is_string() && c.kind == "self_similar") {
        const std::string s = v.get<std::string>();
        if (s == "half_trace") c.convention = CurvatureConvention::HalfTrace;
        else if (s == "full_trace") c.convention = CurvatureConvention::FullTrace;
        else throw UsageError("convention must be half_trace or full_trace");
      } else if (k == "threshold" && v.is_number()) {
        c.threshold = v.get<double>();
      } else {
        throw UsageError("unexpected key '" + k + "' in check '" + c.kind + "'");
      }
    }
  } else {
    throw UsageError("each check is a name or an object with a 'kind'");
  }
  const double def = default_threshold(c.kind);
  if (c.threshold == 0.0) c.threshold = def;
  if (!(c.threshold > 0.0) || !std::isfinite(c.threshold)) throw UsageError("check threshold must be positive");
  if (c.kind == "self_similar" && (!std::isfinite(c.lambda) || c.lambda == 0.0))
    throw UsageError("self_similar lambda must be finite and nonzero");
  return c;
}

void require_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw UsageError("unexpected key '" + k + "' in " + where);
  }
}

}  // namespace

SceneConfig parse_scene(const json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  require_keys(j, {"surface", "grid", "checks", "output"}, "config");
  SceneConfig cfg;
  if (!j.contains("surface")) throw UsageError("config needs exactly one 'surface'");
  const json& s = j["surface"];
  if (s.is_string()) {
    cfg.surface = s.get<std::string>();
  } else if (s.is_object() && s.contains("name") && s["name"].is_string()) {
    require_keys(s, {"name", "params"}, "surface");
    cfg.surface = s["name"].get<std::string>();
    if (s.contains("params")) {
      if (!s["params"].is_object()) throw UsageError("surface params must be an object");
      for (const auto& [k, v] : s["params"].items()) {
        if (!v.is_number()) throw UsageError("surface parameter '" + k + "' must be a number");
        cfg.params[k] = v.get<double>();
      }
    }
  } else {
    throw UsageError("surface must be a catalog name or {name, params}");
  }
  find_entry(cfg.surface);

  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.is_object()) throw UsageError("grid must be an object");
    require_keys(g, {"n_s", "n_t", "s_range", "t_range"}, "grid");
    if (g.contains("n_s")) cfg.grid.n_s = parse_size(g["n_s"], "grid.n_s");
    if (g.contains("n_t")) cfg.grid.n_t = parse_size(g["n_t"], "grid.n_t");
    if (g.contains("s_range")) cfg.grid.s_range = parse_range(g["s_range"], "grid.s_range");
    if (g.contains("t_range")) cfg.grid.t_range = parse_range(g["t_range"], "grid.t_range");
  }
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) throw UsageError("checks must be an array");
    for (const auto& c : j["checks"]) cfg.checks.push_back(parse_check(c));
  }
  if (j.contains("output")) {
    const json& o = j["output"];
    if (!o.is_object()) throw UsageError("output must be an object");
    require_keys(o, {"formats", "path", "projection", "circles"}, "output");
    OutputSpec out;
    if (o.contains("formats")) {
      if (!o["formats"].is_array()) throw UsageError("output.formats must be an array");
      for (const auto& f : o["formats"]) {
        if (!f.is_string()) throw UsageError("output.formats entries must be strings");
        const std::string name = f.get<std::string>();
        if (name != "csv" && name != "obj" && name != "json") throw UsageError("unknown output format '" + name + "'");
        out.formats.push_back(name);
      }
    }
    if (o.contains("path")) {
      if (!o["path"].is_string()) throw UsageError("output.path must be a string");
      out.path = o["path"].get<std::string>();
    }
    if (o.contains("projection")) {
      if (!o["projection"].is_string()) throw UsageError("output.projection must be a string");
      out.projection = parse_projection(o["projection"].get<std::string>());
    }
    if (o.contains("circles")) {
      if (!o["circles"].is_boolean()) throw UsageError("output.circles must be a boolean");
      out.circles = o["circles"].get<bool>();
    }
    if (!out.formats.empty() && out.path.empty()) throw UsageError("output.path is required when formats are given");
    cfg.output = out;
  }
  return cfg;
}

SceneConfig load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_scene(j);
}

GridSpec resolve_grid(const GridRequest& req, const ImmersionSpec& spec) {
  GridSpec g = spec.default_grid(req.n_s.value_or(64), req.n_t.value_or(64));
  if (g.n_s < 8 || g.n_t < 8) throw UsageError("grid sizes must be at least 8");
  if (req.s_range) {
    const Interval d = spec.s_domain();
    const double slack = 1e-12 * std::max(1.0, d.length());
    if (!d.contains(req.s_range->lo, slack) || !d.contains(req.s_range->hi, slack))
      throw UsageError("grid.s_range must lie inside the surface's s-domain [" + fmt(d.lo) + ", " + fmt(d.hi) + "]");
    g.s_range = *req.s_range;
  }
  if (req.t_range) {
    const Interval& t = *req.t_range;
    const Interval& d = spec.t_domain();
    g.periodic_t = spec.periodic_t() && t.lo == d.lo && t.hi == d.hi;
    g.t_range = t;
  }
  return g;
}

std::vector<CheckResult> run_checks(const ImmersionSpec& spec, const GridSpec& grid, const std::vector<CheckSpec>& checks) {
  std::vector<CheckResult> out;
  for (const CheckSpec& c : checks) {
    CheckResult r{c, std::nullopt, std::nullopt, false};
    try {
      if (c.kind == "lagrangian") r.report = lagrangian_residual_report(spec, grid);
      else if (c.kind == "self_similar") r.report = self_similar_residual(spec, {c.lambda, c.convention}, grid);
      else if (c.kind == "hamiltonian_stationary") r.report = hs_residual_suite(spec, grid);
      else if (c.kind == "r2K") r.report = r2K_invariant(spec, grid.n_s);
      else if (c.kind == "constraints") r.report = generating_constraints(spec);
      else throw UsageError("unknown check '" + c.kind + "'");
      r.passed = r.report->samples > 0 && r.report->max_abs < c.threshold;
      if (r.report->samples == 0) r.error = "no admissible samples";
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json report_json(const ResidualReport& r) {
  json j;
  j["name"] = r.name;
  j["max_abs"] = r.max_abs;
  j["mean_abs"] = r.mean_abs;
  j["argmax_s"] = r.argmax_s;
  j["argmax_t"] = r.argmax_t;
  j["samples"] = r.samples;
  j["grid"] = {{"n_s", r.grid.n_s},
               {"n_t", r.grid.n_t},
               {"s_range", {r.grid.s_range.lo, r.grid.s_range.hi}},
               {"t_range", {r.grid.t_range.lo, r.grid.t_range.hi}},
               {"periodic_t", r.grid.periodic_t}};
  j["warnings"] = r.warnings;
  return j;
}

json check_json(const CheckResult& r) {
  json j;
  j["check"] = r.check.kind;
  j["threshold"] = r.check.threshold;
  if (r.check.kind == "self_similar") {
    j["lambda"] = r.check.lambda;
    j["convention"] = r.check.convention == CurvatureConvention::HalfTrace ? "half_trace" : "full_trace";
  }
  j["passed"] = r.passed;
  if (r.report) j["report"] = report_json(*r.report);
  if (r.error) j["error"] = *r.error;
  return j;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

namespace {

std::vector<PointC2> sample_nodes(const ImmersionSpec& spec, const GridSpec& grid) {
  std::vector<PointC2> pts(grid.size());
  numerics::parallel_for(static_cast<std::size_t>(grid.n_s), [&](std::size_t i) {
    for (int j = 0; j < grid.n_t; ++j)
      pts[i * grid.n_t + j] = surface_jet(spec, grid.s_at(static_cast<int>(i)), grid.t_at(j)).x;
  });
  return pts;
}

double triangle_area2(const std::array<double, 3>& a, const std::array<double, 3>& b, const std::array<double, 3>& c) {
  const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  const double x = u[1] * v[2] - u[2] * v[1], y = u[2] * v[0] - u[0] * v[2], z = u[0] * v[1] - u[1] * v[0];
  return std::sqrt(x * x + y * y + z * z);
}

}  // namespace

std::string mesh_obj(const ImmersionSpec& spec, const GridSpec& grid, Projection projection, const std::string& name,
                     bool circles, MeshStats* stats) {
  const std::vector<PointC2> pts = sample_nodes(spec, grid);
  std::vector<std::array<double, 3>> v(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) v[k] = project(pts[k], projection);

  MeshStats st;
  std::ostringstream out;
  out << "# lagsurf mesh " << name << " projection " << projection_name(projection) << "\n";
  out << "o " << name << "\n";
  for (const auto& p : v) out << "v " << fmt(p[0]) << ' ' << fmt(p[1]) << ' ' << fmt(p[2]) << "\n";
  st.vertices = v.size();

  auto id = [&](int i, int j) { return static_cast<std::size_t>(i) * grid.n_t + j; };
  const int jmax = grid.periodic_t ? grid.n_t : grid.n_t - 1;
  const double scale = [&] {
    double m = 0.0;
    for (const auto& p : v) m = std::max({m, std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
    return std::max(m, 1.0);
  }();
  auto face = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (triangle_area2(v[a], v[b], v[c]) <= 1e-14 * scale * scale) {
      ++st.skipped_degenerate;
      return;
    }
    out << "f " << a + 1 << ' ' << b + 1 << ' ' << c + 1 << "\n";
    ++st.faces;
  };
  for (int i = 0; i + 1 < grid.n_s; ++i) {
    for (int j = 0; j < jmax; ++j) {
      const int jn = (j + 1) % grid.n_t;
      face(id(i, j), id(i + 1, j), id(i + 1, jn));
      face(id(i, j), id(i + 1, jn), id(i, jn));
    }
  }
  if (circles && is_cyclic(spec.family())) {
    out << "g circles\n";
    for (int i = 0; i < grid.n_s; ++i) {
      out << 'l';
      for (int j = 0; j < grid.n_t; ++j) out << ' ' << id(i, j) + 1;
      if (grid.periodic_t) out << ' ' << id(i, 0) + 1;
      out << "\n";
    }
  }
  if (stats) *stats = st;
  return out.str();
}

std::string grid_csv(const ImmersionSpec& spec, const GridSpec& grid) {
  const std::vector<PointC2> pts = sample_nodes(spec, grid);
  std::ostringstream out;
  out << "i,j,s,t,re_z1,im_z1,re_z2,im_z2\n";
  for (int i = 0; i < grid.n_s; ++i) {
    for (int j = 0; j < grid.n_t; ++j) {
      const PointC2& p = pts[static_cast<std::size_t>(i) * grid.n_t + j];
      out << i << ',' << j << ',' << fmt(grid.s_at(i)) << ',' << fmt(grid.t_at(j)) << ',' << fmt(p.z1.real()) << ','
          << fmt(p.z1.imag()) << ',' << fmt(p.z2.real()) << ',' << fmt(p.z2.imag()) << "\n";
    }
  }
  return out.str();
}

json grid_json(const ImmersionSpec& spec, const GridSpec& grid, Projection projection) {
  const std::vector<PointC2> pts = sample_nodes(spec, grid);
  json j;
  j["family"] = std::string(family_name(spec.family()));
  j["n_s"] = grid.n_s;
  j["n_t"] = grid.n_t;
  j["projection"] = projection_name(projection);
  json verts = json::array();
  for (const auto& p : pts) verts.push_back({p.z1.real(), p.z1.imag(), p.z2.real(), p.z2.imag()});
  j["points_r4"] = std::move(verts);
  return j;
}

}  // namespace lagsurf::cli
