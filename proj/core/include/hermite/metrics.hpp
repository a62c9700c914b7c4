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

#pragma once

#include <vector>

#include "hermite/datum.hpp"
#include "hermite/mesh.hpp"
#include "hermite/sampling.hpp"
#include "hermite/scheme.hpp"

namespace hermite {

inline constexpr int kDefaultDensity = 32;

struct SplineSamples {
  std::vector<Vec3> points;
  std::vector<int> patch;
  std::vector<Bary> bary;
};

// Uniform barycentric samples, `density` intervals per patch edge.
SplineSamples sample_spline(const Spline& spline, int density);

// Nearest-neighbor queries over a fixed point set, bucketed in a uniform grid.
class PointGrid {
 public:
  explicit PointGrid(std::vector<Vec3> points);
  // Index of the closest point to q.
  int nearest(const Vec3& q) const;
  const std::vector<Vec3>& points() const { return points_; }

 private:
  std::vector<Vec3> points_;
  Vec3 lo_ = Vec3::Zero();
  double cell_ = 1.0;
  Eigen::Vector3i dims_ = Eigen::Vector3i::Ones();
  std::vector<std::vector<int>> buckets_;

  Eigen::Vector3i cell_of(const Vec3& p) const;
};

// Symmetric Hausdorff estimate between two point sets (nearest neighbors).
double hausdorff_points(const std::vector<Vec3>& a, const std::vector<Vec3>& b);

// Closest point on the patch, Gauss-Newton in barycentric coordinates.
Bary project_to_patch(const TriPatch& patch, const Vec3& x, Bary start);

// Closest parameter on the analytic surface, Gauss-Newton in (u, v).
Vec2 project_to_surface(const AnalyticSurface& surface, const Vec3& x, Vec2 start);

// Two-sided Hausdorff estimate between the spline and the analytic surface
// over its parameter domain; sample distances are refined by projection.
double hausdorff_estimate(const Spline& spline, const AnalyticSurface& surface, int density = kDefaultDensity);

// max | |p| - R | over spline samples.
double radial_error(const Spline& spline, double radius, int density = kDefaultDensity);

// max |z - f(x, y)| over spline samples of a height-field spline.
double max_z_error(const Spline& spline, const AnalyticSurface& surface, int density = kDefaultDensity);

// Continuity audits.
double c1_residual(const Spline& spline);
// Max angle (rad) between the two patch normals along one edge (0 on the
// boundary) and along every edge.
double edge_normal_defect(const Spline& spline, int edge, int samples = 20);
double g1_normal_defect(const Spline& spline, int samples = 20);
// Max pointwise defect of the actual cross-boundary derivatives of the octic
// patches against lambda b + mu v and nu b + xi v.
double g1_identity_residual(const SchemeResult& result, int samples = 20);

struct InterpolationReport {
  double position = 0.0;   // max |p(corner) - P|
  double normal = 0.0;     // max normal angle (rad)
  double curvature = 0.0;  // max relative normal-curvature defect
};

// Checks every patch corner against its vertex datum, with `directions`
// tangent directions for the curvature form.
InterpolationReport interpolation_report(const Spline& spline, const HermiteData& data, int directions = 8);
// The same checks per vertex id.
std::vector<InterpolationReport> vertex_interpolation(const Spline& spline, const HermiteData& data,
                                                      int directions = 8);

// Normal curvature of the patch at parameter v in the 3D tangent direction u.
double patch_normal_curvature(const TriPatch& patch, const Bary& v, const Vec3& u);

// Angle between spline normal at each interior edge midpoint and the
// approximated midplane normal.
double midpoint_normal_defect(const Spline& spline, const HermiteData& data);

struct ConvergencePoint {
  int level = 0;
  double h = 0.0;
  double error = 0.0;
};

struct ConvergenceResult {
  std::vector<ConvergencePoint> points;
  double slope = 0.0;
  bool exact = false;  // all errors at rounding level; slope undefined
};

// Least-squares slope of log(error) against log(h).
ConvergenceResult fit_convergence(std::vector<ConvergencePoint> points);

enum class SchemeKind { kC1Quintic, kG1Octic };

SchemeResult build_scheme(SchemeKind scheme, const HermiteData& data, const Mesh& mesh);

struct ConvergenceOptions {
  int levels = 4;
  int base_cells = 2;  // grid cells per side at level 0 (grid surfaces)
  int density = 12;
};

// Sphere: icosahedral refinements, radial error. Other surfaces: uniform
// grids doubling per level, Hausdorff error. Needs at least 3 levels.
ConvergenceResult convergence_study(SchemeKind scheme, const AnalyticSurface& surface,
                                    const ConvergenceOptions& options);

// Domain triangulation used for a grid surface at the given cells per side.
DomainTriangulation surface_grid(const AnalyticSurface& surface, int nx, int ny);

// Icosahedron refined `level` times by edge midpoints, every level pushed
// onto the sphere of the given radius.
SurfaceMesh icosphere(double radius, int level);

// Benchmark meshes. Torus: 5 x 4 periodic grid whose tube rows sit half a
// step off the outer equator. Free-form: 4 x 4 grid (32 triangles). Scalar:
// 4 x 4 grid (32 triangles).
DomainTriangulation benchmark_grid(const AnalyticSurface& surface);

}  // namespace hermite
