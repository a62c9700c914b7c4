// Copyright 2026 The Hermite Surface Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "hermite/io.hpp"
#include "hermite/metrics.hpp"
#include "hermite/smoothness.hpp"
#include "json.hpp"

namespace hermite::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// A usage problem detected outside the config file (flags, file access).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double c1 = 1e-9;
  double g1_normal = 1e-7;
  double g1_identity = 1e-10;
  double position = 1e-12;
  double normal = 1e-8;
  double curvature = 1e-6;

  double* find(const std::string& name) {
    if (name == "c1") return &c1;
    if (name == "g1_normal") return &g1_normal;
    if (name == "g1_identity") return &g1_identity;
    if (name == "position") return &position;
    if (name == "normal") return &normal;
    if (name == "curvature") return &curvature;
    return nullptr;
  }

  json to_json() const {
    return {{"c1", c1}, {"g1_normal", g1_normal}, {"g1_identity", g1_identity},
            {"position", position}, {"normal", normal}, {"curvature", curvature}};
  }
};

// Config tol.* fields first, then the comma-separated name=value overrides.
Tolerances load_tolerances(const Config* cfg, const std::string& overrides) {
  Tolerances tol;
  for (const char* name : {"c1", "g1_normal", "g1_identity", "position", "normal", "curvature"}) {
    if (cfg) *tol.find(name) = cfg->real(std::string("tol.") + name, *tol.find(name));
  }
  std::istringstream in(overrides);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    double* slot = eq == std::string::npos ? nullptr : tol.find(item.substr(0, eq));
    if (!slot) throw UsageError("--tolerance-overrides: unknown entry '" + item + "'");
    try {
      *slot = std::stod(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw UsageError("--tolerance-overrides: bad value in '" + item + "'");
    }
  }
  return tol;
}

SchemeKind parse_scheme(const std::string& name, const Config* cfg) {
  if (name == "c1-quintic") return SchemeKind::kC1Quintic;
  if (name == "g1-octic") return SchemeKind::kG1Octic;
  const std::string what = "expected c1-quintic or g1-octic, got '" + name + "'";
  if (cfg) cfg->fail("scheme", what);
  throw UsageError("--scheme: " + what);
}

const char* scheme_name(SchemeKind kind) { return kind == SchemeKind::kC1Quintic ? "c1-quintic" : "g1-octic"; }

// Paths in a config file are relative to the file.
fs::path resolve(const Config& cfg, const std::string& path) {
  const fs::path p(path);
  return p.is_absolute() ? p : fs::path(cfg.source()).parent_path() / p;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  return out;
}

std::optional<AnalyticSurface> make_surface(const Config& cfg) {
  if (!cfg.has("surface")) return std::nullopt;
  const std::string name = cfg.text("surface");
  if (name == "torus") return AnalyticSurface::torus(cfg.real("torus.major", 2.0), cfg.real("torus.minor", 1.0));
  if (name == "freeform") return AnalyticSurface::freeform();
  if (name == "scalar") return AnalyticSurface::scalar();
  if (name == "sphere") return AnalyticSurface::sphere(cfg.real("sphere.radius", 1.0));
  if (name == "plane") {
    return AnalyticSurface::plane(cfg.vec3("plane.origin", Vec3::Zero()), cfg.vec3("plane.du", Vec3(1.0, 0.0, 0.5)),
                                  cfg.vec3("plane.dv", Vec3(0.0, 1.0, -0.25)), cfg.vec2("plane.lo", Vec2::Zero()),
                                  cfg.vec2("plane.hi", Vec2::Ones()));
  }
  cfg.fail("surface", "expected torus, freeform, scalar, sphere or plane, got '" + name + "'");
}

struct Problem {
  std::optional<AnalyticSurface> surface;
  Mesh mesh;
  HermiteData data;
  std::string source;
  std::string mesh_label;
};

int word_int(const Config& cfg, const std::string& key, const std::string& word) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(word, &used);
    if (used == word.size() && v > 0) return v;
  } catch (const std::logic_error&) {
  }
  cfg.fail(key, "expected a positive integer, got '" + word + "'");
}

Problem load_problem(const Config& cfg) {
  Problem pb;
  pb.surface = make_surface(cfg);
  const auto mesh_words = cfg.words("mesh", "benchmark");
  const std::string kind = mesh_words.empty() ? "" : mesh_words[0];
  auto expect_args = [&](std::size_t n) {
    if (mesh_words.size() != n + 1) cfg.fail("mesh", "'" + kind + "' takes " + std::to_string(n) + " argument(s)");
  };
  std::optional<DomainTriangulation> domain;
  if (kind == "file") {
    expect_args(1);
    std::ifstream in = open_input(resolve(cfg, mesh_words[1]));
    domain = read_mesh(in);
  }

  if (pb.surface && cfg.has("data")) cfg.fail("data", "give either surface or data, not both");
  if (!pb.surface && !cfg.has("data")) cfg.fail("surface", "missing required field (or give data)");

  if (cfg.has("data")) {
    const fs::path path = resolve(cfg, cfg.text("data"));
    std::ifstream in = open_input(path);
    const HermiteFile file = read_hermite_file(in);
    if (domain) {
      pb.mesh = Mesh::from_domain(*domain);
      pb.mesh_label = "file " + mesh_words[1];
    } else if (kind == "benchmark" && !file.triangles.empty()) {
      pb.mesh = Mesh::from_triangles(static_cast<int>(file.vertices.size()), file.triangles);
      pb.mesh_label = "data file triangles";
    } else {
      cfg.fail("mesh", "data without triangles needs mesh = file <path>");
    }
    pb.data = resolve_hermite_data(file, pb.mesh);
    pb.source = "data " + cfg.text("data");
    return pb;
  }

  const AnalyticSurface& s = *pb.surface;
  pb.source = s.name();
  if (s.kind() == SurfaceKind::kSphere) {
    int level = 1;
    if (kind == "icosahedron") {
      expect_args(1);
      level = word_int(cfg, "mesh", mesh_words[1]);
    } else if (kind != "benchmark") {
      cfg.fail("mesh", "the sphere takes mesh = benchmark or icosahedron <level>");
    }
    const SurfaceMesh sm = icosphere(s.radius(), level);
    pb.mesh = Mesh::from_triangles(static_cast<int>(sm.positions.size()), sm.triangles);
    pb.data = sample_sphere_mesh(s.radius(), sm, pb.mesh);
    pb.mesh_label = "icosahedron " + std::to_string(level);
    return pb;
  }
  if (kind == "benchmark") {
    domain = s.kind() == SurfaceKind::kPlane ? surface_grid(s, 3, 3) : benchmark_grid(s);
    pb.mesh_label = "benchmark";
  } else if (kind == "grid") {
    expect_args(2);
    domain = surface_grid(s, word_int(cfg, "mesh", mesh_words[1]), word_int(cfg, "mesh", mesh_words[2]));
    pb.mesh_label = "grid " + mesh_words[1] + " " + mesh_words[2];
  } else if (kind == "file") {
    pb.mesh_label = "file " + mesh_words[1];
  } else {
    cfg.fail("mesh", "expected benchmark, grid <nx> <ny>, icosahedron <level> or file <path>");
  }
  pb.mesh = Mesh::from_domain(*domain);
  pb.data = sample_on_domain(s, pb.mesh);
  return pb;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct CommonFlags {
  std::string config;
  std::string out = ".";
  std::string scheme;
  std::string overrides;
  int density = 0;
};

int cmd_interpolate(const CommonFlags& flags, std::ostream& out) {
  Config cfg = Config::load(flags.config);
  if (!flags.scheme.empty()) cfg.set("scheme", flags.scheme);
  const SchemeKind scheme = parse_scheme(cfg.text("scheme"), &cfg);
  const int density = flags.density > 0 ? flags.density : cfg.integer("density", 16);
  const int metric_density = cfg.integer("metric_density", kDefaultDensity);
  if (density < 1) cfg.fail("density", "must be positive");
  if (metric_density < 1) cfg.fail("metric_density", "must be positive");
  const Tolerances tol = load_tolerances(&cfg, flags.overrides);
  const Problem pb = load_problem(cfg);

  auto t0 = Clock::now();
  const SchemeResult res = build_scheme(scheme, pb.data, pb.mesh);
  const double build_seconds = seconds_since(t0);

  t0 = Clock::now();
  json report;
  report["scheme"] = scheme_name(scheme);
  report["source"] = pb.source;
  report["mesh"] = {{"description", pb.mesh_label},
                    {"vertices", pb.mesh.vertex_count()},
                    {"triangles", pb.mesh.triangle_count()},
                    {"edges", pb.mesh.edges().size()}};
  json errors = json::object();
  if (pb.surface) {
    errors["hausdorff"] = hausdorff_estimate(res.spline, *pb.surface, metric_density);
    if (pb.surface->kind() == SurfaceKind::kSphere) {
      errors["radial"] = radial_error(res.spline, pb.surface->radius(), metric_density);
    }
    if (pb.surface->kind() == SurfaceKind::kScalar) {
      errors["max_z"] = max_z_error(res.spline, *pb.surface, metric_density);
    }
  }
  report["errors"] = errors;

  bool ok = true;
  json continuity;
  if (scheme == SchemeKind::kC1Quintic) {
    const double c1 = c1_residual(res.spline);
    continuity["c1_residual"] = c1;
    ok = ok && c1 < tol.c1;
  } else {
    const double normal = g1_normal_defect(res.spline);
    const double identity = g1_identity_residual(res);
    double fixed_rows = 0.0;
    for (const auto& e : res.edges) {
      if (e) fixed_rows = std::max(fixed_rows, e->fixed_row_residual);
    }
    continuity["g1_normal_defect"] = normal;
    continuity["g1_identity_residual"] = identity;
    continuity["fixed_row_residual"] = fixed_rows;
    continuity["midpoint_normal_defect"] = midpoint_normal_defect(res.spline, pb.data);
    ok = ok && normal < tol.g1_normal && identity < tol.g1_identity;
  }
  report["continuity"] = continuity;

  const InterpolationReport ir = interpolation_report(res.spline, pb.data);
  report["interpolation"] = {{"position", ir.position}, {"normal", ir.normal}, {"curvature", ir.curvature}};
  ok = ok && ir.position < tol.position && ir.normal < tol.normal && ir.curvature < tol.curvature;
  report["tolerances"] = tol.to_json();
  report["within_tolerance"] = ok;
  const double metrics_seconds = seconds_since(t0);

  const fs::path dir(flags.out);
  const fs::path obj = dir / cfg.text("obj", "surface.obj");
  const fs::path net = dir / cfg.text("net", "spline.net");
  const fs::path rep = dir / cfg.text("report", "report.json");
  {
    std::ofstream f = open_output(obj);
    write_obj(f, res.spline, density);
  }
  {
    std::ofstream f = open_output(net);
    write_control_net(f, res.spline);
  }
  report["outputs"] = {{"obj", obj.string()}, {"net", net.string()}, {"report", rep.string()}};
  report["timings"] = {{"build_seconds", build_seconds}, {"metrics_seconds", metrics_seconds}};
  {
    std::ofstream f = open_output(rep);
    f << report.dump(2) << "\n";
  }

  out << scheme_name(scheme) << " on " << pb.source << " (" << pb.mesh.triangle_count() << " triangles)\n";
  for (const auto& [k, v] : errors.items()) out << "  " << k << " " << v.get<double>() << "\n";
  out << "  within tolerance: " << (ok ? "yes" : "no") << "\n";
  return ok ? kOk : kNumerical;
}

int cmd_convergence(const CommonFlags& flags, std::ostream& out) {
  Config cfg = Config::load(flags.config);
  if (!flags.scheme.empty()) cfg.set("scheme", flags.scheme);
  const SchemeKind scheme = parse_scheme(cfg.text("scheme"), &cfg);
  const auto surface = make_surface(cfg);
  if (!surface) cfg.fail("surface", "missing required field");
  ConvergenceOptions opt;
  opt.levels = cfg.integer("levels", opt.levels);
  opt.base_cells = cfg.integer("base_cells", opt.base_cells);
  opt.density = flags.density > 0 ? flags.density : cfg.integer("metric_density", opt.density);
  if (opt.levels < 3) cfg.fail("levels", "a convergence study needs at least 3 levels");
  if (opt.base_cells < 1) cfg.fail("base_cells", "must be positive");
  if (surface->kind() == SurfaceKind::kTorus && opt.base_cells < 3) {
    cfg.fail("base_cells", "periodic grids need at least 3 cells per side");
  }

  const ConvergenceResult result = convergence_study(scheme, *surface, opt);
  const fs::path csv = fs::path(flags.out) / cfg.text("csv", "convergence.csv");
  {
    std::ofstream f = open_output(csv);
    write_convergence_csv(f, result);
  }
  out << scheme_name(scheme) << " on " << surface->name() << ", " << opt.levels << " levels\n";
  for (const auto& p : result.points) out << "  level " << p.level << " h " << p.h << " error " << p.error << "\n";
  if (result.exact) {
    out << "  slope: exact (errors at rounding level)\n";
  } else {
    out << "  slope " << result.slope << "\n";
  }
  return kOk;
}

struct AuditFlags {
  std::string net;
  std::string data;
  std::string scheme;
  std::string out;
  std::string overrides;
};

int cmd_audit(const AuditFlags& flags, std::ostream& out) {
  const Tolerances tol = load_tolerances(nullptr, flags.overrides);
  std::ifstream in = open_input(flags.net);
  const Spline spline = read_control_net(in);
  if (spline.patches.empty()) throw UsageError(flags.net + ": no patches");
  const int degree = spline.patches.front().degree();
  SchemeKind scheme = degree == 8 ? SchemeKind::kG1Octic : SchemeKind::kC1Quintic;
  if (!flags.scheme.empty()) scheme = parse_scheme(flags.scheme, nullptr);
  const bool check_c1 = scheme == SchemeKind::kC1Quintic;
  if (check_c1 && !spline.mesh.has_domain()) {
    throw UsageError(flags.net + ": a C1 audit needs patch domains in the net file");
  }

  bool ok = true;
  json edges = json::array();
  double worst_c1 = 0.0;
  double worst_normal = 0.0;
  for (int e = 0; e < static_cast<int>(spline.mesh.edges().size()); ++e) {
    const MeshEdge& edge = spline.mesh.edge(e);
    json rec = {{"edge", e}, {"a", edge.a}, {"b", edge.b}, {"boundary", edge.boundary()}};
    if (!edge.boundary()) {
      const double normal = edge_normal_defect(spline, e);
      rec["normal_defect"] = normal;
      worst_normal = std::max(worst_normal, normal);
      if (check_c1) {
        const double c1 = check_continuity(spline, e, 1).residual;
        rec["c1_residual"] = c1;
        worst_c1 = std::max(worst_c1, c1);
      }
    }
    edges.push_back(rec);
  }
  json report;
  report["scheme"] = scheme_name(scheme);
  report["patches"] = spline.patches.size();
  report["degree"] = degree;
  report["edges"] = edges;
  json summary;
  if (check_c1) {
    summary["c1_residual"] = worst_c1;
    ok = ok && worst_c1 < tol.c1;
  } else {
    ok = ok && worst_normal < tol.g1_normal;
  }
  summary["normal_defect"] = worst_normal;

  if (!flags.data.empty()) {
    std::ifstream din = open_input(flags.data);
    const HermiteData data = resolve_hermite_data(read_hermite_file(din), spline.mesh);
    const auto per_vertex = vertex_interpolation(spline, data);
    json vertices = json::array();
    InterpolationReport all;
    for (std::size_t v = 0; v < per_vertex.size(); ++v) {
      const InterpolationReport& r = per_vertex[v];
      vertices.push_back({{"vertex", v}, {"position", r.position}, {"normal", r.normal}, {"curvature", r.curvature}});
      all.position = std::max(all.position, r.position);
      all.normal = std::max(all.normal, r.normal);
      all.curvature = std::max(all.curvature, r.curvature);
    }
    report["vertices"] = vertices;
    summary["position"] = all.position;
    summary["normal"] = all.normal;
    summary["curvature"] = all.curvature;
    ok = ok && all.position < tol.position && all.normal < tol.normal && all.curvature < tol.curvature;
  }
  report["summary"] = summary;
  report["tolerances"] = tol.to_json();
  report["within_tolerance"] = ok;

  if (flags.out.empty()) {
    out << report.dump(2) << "\n";
  } else {
    std::ofstream f = open_output(flags.out);
    f << report.dump(2) << "\n";
    out << "audit of " << spline.patches.size() << " patches: " << (ok ? "within tolerance" : "out of tolerance")
        << "\n";
  }
  return ok ? kOk : kNumerical;
}

bool is_input_error(ErrorKind kind) { return kind == ErrorKind::kFormat || kind == ErrorKind::kUsage; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite interpolation of surfaces by C1 quintic and G1 octic triangular splines", "hermite"};
  app.require_subcommand(1);

  CommonFlags common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "Configuration file (key = value lines)")->required();
    sub->add_option("--out", common.out, "Output directory");
    sub->add_option("--scheme", common.scheme, "c1-quintic or g1-octic; overrides the config");
    sub->add_option("--density", common.density, "Tessellation density (interpolate) or metric density (convergence)");
    sub->add_option("--tolerance-overrides", common.overrides, "Comma-separated name=value tolerance overrides");
  };
  CLI::App* interpolate = app.add_subcommand("interpolate", "Build a spline and write OBJ, control net and report");
  add_common(interpolate);
  CLI::App* convergence = app.add_subcommand("convergence", "Error against mesh size over uniform refinements");
  add_common(convergence);

  AuditFlags audit_flags;
  CLI::App* audit = app.add_subcommand("audit", "Continuity and interpolation residuals of a control-net file");
  audit->add_option("--net", audit_flags.net, "Control-net file")->required();
  audit->add_option("--data", audit_flags.data, "Hermite data file for interpolation residuals");
  audit->add_option("--scheme", audit_flags.scheme, "c1-quintic or g1-octic; default from the patch degree");
  audit->add_option("--out", audit_flags.out, "Write the JSON report here instead of stdout");
  audit->add_option("--tolerance-overrides", audit_flags.overrides, "Comma-separated name=value tolerance overrides");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*interpolate) return cmd_interpolate(common, out);
    if (*convergence) return cmd_convergence(common, out);
    return cmd_audit(audit_flags, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return is_input_error(e.kind()) ? kUsage : kNumerical;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hermite::cli
