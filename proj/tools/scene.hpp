#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "lagsurf/solitons.hpp"

namespace lagsurf::cli {

enum class Projection { Re1Im1Re2, Re1Re2Im2, Stereographic };

Projection parse_projection(const std::string& name);
std::string projection_name(Projection p);

/// R^4 -> R^3. Stereographic maps X/|X| in S^3 from the pole (0, i).
std::array<double, 3> project(const PointC2& x, Projection p);

struct CheckSpec {
  std::string kind;  // lagrangian | self_similar | hamiltonian_stationary | r2K | constraints
  double lambda = 1.0;
  CurvatureConvention convention = CurvatureConvention::HalfTrace;
  double threshold = 0.0;
};

double default_threshold(const std::string& kind);

struct GridRequest {
  std::optional<int> n_s, n_t;
  std::optional<Interval> s_range, t_range;
};

struct OutputSpec {
  std::vector<std::string> formats;  // subset of csv, obj, json
  std::string path;                  // base path, extension appended per format
  Projection projection = Projection::Re1Im1Re2;
  bool circles = true;
};

struct SceneConfig {
  std::string surface;
  ParamMap params;
  GridRequest grid;
  std::vector<CheckSpec> checks;
  std::optional<OutputSpec> output;
};

/// Throws UsageError on schema violations.
SceneConfig parse_scene(const nlohmann::json& j);
SceneConfig load_scene(const std::string& path);

/// Grid over the surface domain with the requested overrides; sizes must be >= 8
/// and ranges finite and inside the surface's s-domain.
GridSpec resolve_grid(const GridRequest& request, const ImmersionSpec& spec);

struct CheckResult {
  CheckSpec check;
  std::optional<ResidualReport> report;
  std::optional<std::string> error;
  bool passed = false;
};

std::vector<CheckResult> run_checks(const ImmersionSpec& spec, const GridSpec& grid, const std::vector<CheckSpec>& checks);

nlohmann::json report_json(const ResidualReport& r);
nlohmann::json check_json(const CheckResult& r);

/// Shortest round-trip representation (17 significant digits).
std::string fmt(double v);

/// Writes via a temporary sibling file and rename.
void write_atomic(const std::string& path, const std::string& content);

struct MeshStats {
  std::size_t vertices = 0;
  std::size_t faces = 0;
  std::size_t skipped_degenerate = 0;
};

/// Wavefront OBJ: one vertex per grid node, each quad as two triangles
/// (counterclockwise in (s, t)), optional `g circles` leaf polylines.
std::string mesh_obj(const ImmersionSpec& spec, const GridSpec& grid, Projection projection, const std::string& name,
                     bool circles, MeshStats* stats = nullptr);

/// Columns i, j, s, t, re_z1, im_z1, re_z2, im_z2.
std::string grid_csv(const ImmersionSpec& spec, const GridSpec& grid);

nlohmann::json grid_json(const ImmersionSpec& spec, const GridSpec& grid, Projection projection);

}  // namespace lagsurf::cli
