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

#include "hermite/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include <Eigen/Dense>

#include "hermite/parallel.hpp"
#include "hermite/smoothness.hpp"

namespace hermite {
namespace {

double angle_between(const Vec3& a, const Vec3& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

Bary clamp_to_triangle(double s, double t) {
  s = std::max(s, 0.0);
  t = std::max(t, 0.0);
  if (s + t > 1.0) {
    const double excess = 0.5 * (s + t - 1.0);
    s -= excess;
    t -= excess;
    if (s < 0.0) {
      t = 1.0;
      s = 0.0;
    } else if (t < 0.0) {
      s = 1.0;
      t = 0.0;
    }
  }
  return {1.0 - s - t, s, t};
}

template <class F>
double parallel_max(int count, F&& f) {
  const int chunks = std::max(1, std::min(count, thread_count() * 4));
  std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
  parallel_for(chunks, [&](int c) {
    const int begin = static_cast<int>(static_cast<long long>(count) * c / chunks);
    const int end = static_cast<int>(static_cast<long long>(count) * (c + 1) / chunks);
    double m = 0.0;
    for (int i = begin; i < end; ++i) m = std::max(m, f(i));
    partial[c] = m;
  });
  double m = 0.0;
  for (double p : partial) m = std::max(m, p);
  return m;
}

Vec2 wrap_uv(const AnalyticSurface& s, Vec2 uv) {
  const Vec2 lo = s.lo();
  const Vec2 hi = s.hi();
  auto wrap = [](double x, double a, double b) {
    const double p = b - a;
    x = std::fmod(x - a, p);
    if (x < 0) x += p;
    return a + x;
  };
  uv.x() = s.periodic_u() ? wrap(uv.x(), lo.x(), hi.x()) : std::clamp(uv.x(), lo.x(), hi.x());
  uv.y() = s.periodic_v() ? wrap(uv.y(), lo.y(), hi.y()) : std::clamp(uv.y(), lo.y(), hi.y());
  return uv;
}

std::vector<Vec2> surface_params(const AnalyticSurface& surface, int res_u, int res_v) {
  std::vector<Vec2> uv;
  const Vec2 lo = surface.lo();
  const Vec2 hi = surface.hi();
  for (int j = 0; j <= res_v; ++j) {
    for (int i = 0; i <= res_u; ++i) {
      uv.emplace_back(lo.x() + (hi.x() - lo.x()) * i / res_u, lo.y() + (hi.y() - lo.y()) * j / res_v);
    }
  }
  return uv;
}

}  // namespace

SplineSamples sample_spline(const Spline& spline, int density) {
  if (spline.patches.empty()) raise(ErrorKind::kInvalidInput, "empty spline");
  if (density < 1) raise(ErrorKind::kInvalidInput, "density must be positive");
  SplineSamples out;
  for (int t = 0; t < static_cast<int>(spline.patches.size()); ++t) {
    for (int i = 0; i <= density; ++i) {
      for (int j = 0; j <= density - i; ++j) {
        const int k = density - i - j;
        const Bary b{static_cast<double>(i) / density, static_cast<double>(j) / density,
                     static_cast<double>(k) / density};
        out.points.push_back(eval_patch(spline.patches[t], b));
        out.patch.push_back(t);
        out.bary.push_back(b);
      }
    }
  }
  return out;
}

PointGrid::PointGrid(std::vector<Vec3> points) : points_(std::move(points)) {
  if (points_.empty()) raise(ErrorKind::kInvalidInput, "empty point set");
  Vec3 lo = points_.front();
  Vec3 hi = lo;
  for (const Vec3& p : points_) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  lo_ = lo;
  const Vec3 ext = (hi - lo).cwiseMax(1e-12);
  const double volume_per_point = ext.prod() / static_cast<double>(points_.size());
  cell_ = std::max({std::cbrt(2.0 * volume_per_point), ext.maxCoeff() / 256.0, 1e-12});
  for (int a = 0; a < 3; ++a) dims_(a) = std::max(1, static_cast<int>(std::ceil(ext(a) / cell_)) + 1);
  buckets_.resize(static_cast<std::size_t>(dims_.prod()));
  for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
    const Eigen::Vector3i c = cell_of(points_[i]);
    buckets_[(c.z() * dims_.y() + c.y()) * dims_.x() + c.x()].push_back(i);
  }
}

Eigen::Vector3i PointGrid::cell_of(const Vec3& p) const {
  Eigen::Vector3i c;
  for (int a = 0; a < 3; ++a) {
    c(a) = std::clamp(static_cast<int>(std::floor((p(a) - lo_(a)) / cell_)), 0, dims_(a) - 1);
  }
  return c;
}

int PointGrid::nearest(const Vec3& q) const {
  const Eigen::Vector3i c = cell_of(q);
  int best = -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  const int max_r = dims_.maxCoeff();
  for (int r = 0; r <= max_r; ++r) {
    for (int z = c.z() - r; z <= c.z() + r; ++z) {
      if (z < 0 || z >= dims_.z()) continue;
      for (int y = c.y() - r; y <= c.y() + r; ++y) {
        if (y < 0 || y >= dims_.y()) continue;
        for (int x = c.x() - r; x <= c.x() + r; ++x) {
          if (x < 0 || x >= dims_.x()) continue;
          if (std::max({std::abs(x - c.x()), std::abs(y - c.y()), std::abs(z - c.z())}) != r) continue;
          for (int i : buckets_[(z * dims_.y() + y) * dims_.x() + x]) {
            const double d2 = (points_[i] - q).squaredNorm();
            if (d2 < best_d2) {
              best_d2 = d2;
              best = i;
            }
          }
        }
      }
    }
    // Points outside the searched cube differ on some axis by at least the gap
    // from q to that face of the cube.
    double bound = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 3; ++a) {
      if (c(a) - r > 0) bound = std::min(bound, q(a) - (lo_(a) + (c(a) - r) * cell_));
      if (c(a) + r < dims_(a) - 1) bound = std::min(bound, lo_(a) + (c(a) + r + 1) * cell_ - q(a));
    }
    if (best >= 0 && (bound == std::numeric_limits<double>::infinity() || best_d2 <= bound * bound)) break;
  }
  return best;
}

double hausdorff_points(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  const PointGrid ga(a);
  const PointGrid gb(b);
  const double ab = parallel_max(static_cast<int>(a.size()), [&](int i) { return (b[gb.nearest(a[i])] - a[i]).norm(); });
  const double ba = parallel_max(static_cast<int>(b.size()), [&](int i) { return (a[ga.nearest(b[i])] - b[i]).norm(); });
  return std::max(ab, ba);
}

Bary project_to_patch(const TriPatch& patch, const Vec3& x, Bary start) {
  Bary b = start;
  const Bary ds = Bary::direction(0, 1);
  const Bary dt = Bary::direction(0, 2);
  for (int it = 0; it < 20; ++it) {
    const Vec3 p = eval_patch(patch, b);
    Eigen::Matrix<double, 3, 2> j;
    j << directional_derivative(patch, b, ds), directional_derivative(patch, b, dt);
    const Eigen::Matrix2d jtj = j.transpose() * j;
    if (std::abs(jtj.determinant()) <= 1e-300) break;
    const Eigen::Vector2d step = jtj.ldlt().solve(j.transpose() * (x - p));
    const Bary next = clamp_to_triangle(b.beta + step(0), b.gamma + step(1));
    const double moved = std::abs(next.beta - b.beta) + std::abs(next.gamma - b.gamma);
    if ((eval_patch(patch, next) - x).squaredNorm() > (p - x).squaredNorm()) break;
    b = next;
    if (moved < 1e-15) break;
  }
  return b;
}

Vec2 project_to_surface(const AnalyticSurface& surface, const Vec3& x, Vec2 start) {
  Vec2 uv = wrap_uv(surface, start);
  for (int it = 0; it < 30; ++it) {
    const SurfaceDerivatives s = surface.derivatives(uv);
    Eigen::Matrix<double, 3, 2> j;
    j << s.fu, s.fv;
    const Eigen::Matrix2d jtj = j.transpose() * j;
    if (std::abs(jtj.determinant()) <= 1e-300) break;
    const Eigen::Vector2d step = jtj.ldlt().solve(j.transpose() * (x - s.f));
    const Vec2 next = wrap_uv(surface, uv + step);
    if ((surface.point(next) - x).squaredNorm() > (s.f - x).squaredNorm()) break;
    const double moved = (next - uv).norm();
    uv = next;
    if (moved < 1e-15) break;
  }
  return uv;
}

double hausdorff_estimate(const Spline& spline, const AnalyticSurface& surface, int density) {
  if (spline.patches.empty()) raise(ErrorKind::kInvalidInput, "empty spline");
  if (density < 1) raise(ErrorKind::kInvalidInput, "density must be positive");
  const SplineSamples ss = sample_spline(spline, density);
  const int res = std::max(32, static_cast<int>(std::ceil(density * std::sqrt(spline.patches.size() / 2.0))));
  const auto uv = surface_params(surface, res, res);
  std::vector<Vec3> sp;
  sp.reserve(uv.size());
  for (const Vec2& p : uv) sp.push_back(surface.point(p));
  const PointGrid g_spline(ss.points);
  const PointGrid g_surface(sp);

  const double spline_to_surface = parallel_max(static_cast<int>(ss.points.size()), [&](int i) {
    const Vec3& x = ss.points[i];
    const int near = g_surface.nearest(x);
    double best = (sp[near] - x).norm();
    if (surface.kind() == SurfaceKind::kSphere) return std::abs(x.norm() - surface.radius());
    const Vec2 q = project_to_surface(surface, x, uv[near]);
    return std::min(best, (surface.point(q) - x).norm());
  });

  const Mesh& mesh = spline.mesh;
  const double surface_to_spline = parallel_max(static_cast<int>(sp.size()), [&](int i) {
    const Vec3& x = sp[i];
    const int near = g_spline.nearest(x);
    double best = (ss.points[near] - x).norm();
    const int t0 = ss.patch[near];
    std::set<int> candidates{t0};
    if (mesh.triangle_count() == static_cast<int>(spline.patches.size())) {
      for (int v : mesh.triangle(t0)) {
        for (int t : mesh.vertex_triangles(v)) candidates.insert(t);
      }
    }
    for (int t : candidates) {
      const Bary start = t == t0 ? ss.bary[near] : Bary{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
      const Bary b = project_to_patch(spline.patches[t], x, start);
      best = std::min(best, (eval_patch(spline.patches[t], b) - x).norm());
    }
    return best;
  });
  return std::max(spline_to_surface, surface_to_spline);
}

double radial_error(const Spline& spline, double radius, int density) {
  const SplineSamples ss = sample_spline(spline, density);
  return parallel_max(static_cast<int>(ss.points.size()),
                      [&](int i) { return std::abs(ss.points[i].norm() - radius); });
}

double max_z_error(const Spline& spline, const AnalyticSurface& surface, int density) {
  const SplineSamples ss = sample_spline(spline, density);
  return parallel_max(static_cast<int>(ss.points.size()), [&](int i) {
    const Vec3& p = ss.points[i];
    return std::abs(p.z() - surface.height(p.x(), p.y()));
  });
}

double c1_residual(const Spline& spline) {
  double res = 0.0;
  for (int e = 0; e < static_cast<int>(spline.mesh.edges().size()); ++e) {
    res = std::max(res, check_continuity(spline, e, 1).residual);
  }
  return res;
}

double edge_normal_defect(const Spline& spline, int edge, int samples) {
  const EdgeView view = spline.mesh.edge_view(edge);
  if (view.tri2 < 0) return 0.0;
  const TriPatch p1 = rotated(spline.patches[view.tri1], view.corner1);
  const TriPatch p2 = rotated(spline.patches[view.tri2], view.corner2);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = samples == 1 ? 0.5 : static_cast<double>(s) / (samples - 1);
    const Vec3 n1 = patch_normal(p1, {1.0 - t, 0.0, t});
    const Vec3 n2 = patch_normal(p2, {1.0 - t, t, 0.0});
    worst = std::max(worst, angle_between(n1, n2));
  }
  return worst;
}

double g1_normal_defect(const Spline& spline, int samples) {
  double worst = 0.0;
  for (int e = 0; e < static_cast<int>(spline.mesh.edges().size()); ++e) {
    worst = std::max(worst, edge_normal_defect(spline, e, samples));
  }
  return worst;
}

double g1_identity_residual(const SchemeResult& result, int samples) {
  const Spline& spline = result.spline;
  double res = 0.0;
  for (const auto& sol : result.edges) {
    if (!sol) continue;
    const EdgeView view = spline.mesh.edge_view(sol->edge);
    const TriPatch p1 = rotated(spline.patches[view.tri1], view.corner1);
    const TriPatch p2 = rotated(spline.patches[view.tri2], view.corner2);
    const VecField1D b = boundary_derivative(p1, {0, 2}, Bary::direction(0, 2));
    const VecField1D e = boundary_derivative(p1, {0, 2}, Bary::direction(0, 1));
    const VecField1D d = boundary_derivative(p2, {0, 1}, Bary::direction(0, 2));
    const ConnectingFunctionSet& c = sol->connection;
    for (int s = 0; s < samples; ++s) {
      const double t = samples == 1 ? 0.5 : static_cast<double>(s) / (samples - 1);
      const Vec3 bt = b.eval(t);
      const Vec3 vt = c.v.eval(t);
      res = std::max(res, (d.eval(t) - eval_scalar(c.lambda, t) * bt - eval_scalar(c.mu, t) * vt).norm());
      res = std::max(res, (e.eval(t) - eval_scalar(c.nu, t) * bt - eval_scalar(c.xi, t) * vt).norm());
    }
  }
  return res;
}

double patch_normal_curvature(const TriPatch& patch, const Bary& v, const Vec3& u) {
  const Bary ds = Bary::direction(0, 1);
  const Bary dt = Bary::direction(0, 2);
  Eigen::Matrix<double, 3, 2> j;
  j << directional_derivative(patch, v, ds), directional_derivative(patch, v, dt);
  const Eigen::Vector2d w = (j.transpose() * j).ldlt().solve(j.transpose() * u);
  const Bary dir{-(w(0) + w(1)), w(0), w(1)};
  const Vec3 first = directional_derivative(patch, v, dir);
  const Vec3 second = second_derivative(patch, v, dir, dir);
  return second.dot(patch_normal(patch, v)) / first.squaredNorm();
}

std::vector<InterpolationReport> vertex_interpolation(const Spline& spline, const HermiteData& data, int directions) {
  std::vector<InterpolationReport> out(data.vertices.size());
  for (int t = 0; t < spline.mesh.triangle_count(); ++t) {
    for (int c = 0; c < 3; ++c) {
      const int id = spline.mesh.triangle(t)[c];
      const HermiteVertexDatum& datum = data.vertices[id];
      const TriPatch& patch = spline.patches[t];
      const Bary corner = Bary::vertex(c);
      InterpolationReport& rep = out[id];
      rep.position = std::max(rep.position, (eval_patch(patch, corner) - datum.P).norm());
      rep.normal = std::max(rep.normal, angle_between(patch_normal(patch, corner), datum.n));
      const double scale = std::max(std::abs(datum.kappa1), std::abs(datum.kappa2));
      for (int k = 0; k < directions; ++k) {
        const double th = std::numbers::pi * k / directions;
        const Vec3 u = std::cos(th) * datum.u1 + std::sin(th) * datum.u2;
        const double defect = std::abs(patch_normal_curvature(patch, corner, u) - normal_curvature(datum, u));
        rep.curvature = std::max(rep.curvature, scale > 0.0 ? defect / scale : defect);
      }
    }
  }
  return out;
}

InterpolationReport interpolation_report(const Spline& spline, const HermiteData& data, int directions) {
  InterpolationReport all;
  for (const InterpolationReport& r : vertex_interpolation(spline, data, directions)) {
    all.position = std::max(all.position, r.position);
    all.normal = std::max(all.normal, r.normal);
    all.curvature = std::max(all.curvature, r.curvature);
  }
  return all;
}

double midpoint_normal_defect(const Spline& spline, const HermiteData& data) {
  double worst = 0.0;
  for (int e = 0; e < static_cast<int>(spline.mesh.edges().size()); ++e) {
    const EdgeView view = spline.mesh.edge_view(e);
    const TriPatch p1 = rotated(spline.patches[view.tri1], view.corner1);
    const Bary mid{0.5, 0.0, 0.5};
    const Vec3 b = directional_derivative(p1, mid, Bary::direction(0, 2));
    const Vec3 n = data.midplanes[e].n_pi - data.midplanes[e].n_pi.dot(b.normalized()) * b.normalized();
    worst = std::max(worst, angle_between(patch_normal(p1, mid), n));
  }
  return worst;
}

ConvergenceResult fit_convergence(std::vector<ConvergencePoint> points) {
  ConvergenceResult out;
  out.points = std::move(points);
  out.exact = true;
  for (const auto& p : out.points) out.exact = out.exact && p.error < 1e-12;
  if (out.exact || out.points.size() < 2) return out;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(out.points.size());
  for (const auto& p : out.points) {
    const double x = std::log(p.h);
    const double y = std::log(std::max(p.error, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  out.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return out;
}

SchemeResult build_scheme(SchemeKind scheme, const HermiteData& data, const Mesh& mesh) {
  return scheme == SchemeKind::kC1Quintic ? build_c1_quintic(data, mesh) : build_g1_octic(data, mesh);
}

DomainTriangulation surface_grid(const AnalyticSurface& surface, int nx, int ny) {
  switch (surface.kind()) {
    case SurfaceKind::kTorus: return periodic_grid_triangulation(surface.hi() - surface.lo(), nx, ny);
    case SurfaceKind::kSphere: raise(ErrorKind::kInvalidInput, "the sphere is meshed by icosahedral refinement");
    default: return grid_triangulation(surface.lo(), surface.hi(), nx, ny);
  }
}

SurfaceMesh icosphere(double radius, int level) {
  if (level < 0) raise(ErrorKind::kInvalidInput, "refinement level must be non-negative");
  SurfaceMesh sm = icosahedron();
  for (int l = 0; l <= level; ++l) {
    if (l > 0) sm = refine_midpoint(sm);
    for (Vec3& p : sm.positions) p = radius * p.normalized();
  }
  return sm;
}

DomainTriangulation benchmark_grid(const AnalyticSurface& surface) {
  switch (surface.kind()) {
    case SurfaceKind::kTorus: {
      const Vec2 period = surface.hi() - surface.lo();
      return periodic_grid_triangulation(period, 5, 4, surface.lo() + Vec2(0.0, period.y() / 8.0));
    }
    case SurfaceKind::kFreeform:
    case SurfaceKind::kScalar: return grid_triangulation(surface.lo(), surface.hi(), 4, 4);
    default: raise(ErrorKind::kInvalidInput, "no benchmark mesh for " + surface.name());
  }
}

ConvergenceResult convergence_study(SchemeKind scheme, const AnalyticSurface& surface,
                                    const ConvergenceOptions& options) {
  if (options.levels < 3) raise(ErrorKind::kInvalidInput, "convergence study needs at least 3 levels");
  std::vector<ConvergencePoint> points;
  if (surface.kind() == SurfaceKind::kSphere) {
    for (int level = 0; level < options.levels; ++level) {
      const SurfaceMesh sm = icosphere(surface.radius(), level);
      const Mesh mesh = Mesh::from_triangles(static_cast<int>(sm.positions.size()), sm.triangles);
      const HermiteData data = sample_sphere_mesh(surface.radius(), sm, mesh);
      double h = 0.0;
      for (const auto& e : mesh.edges()) h = std::max(h, (sm.positions[e.a] - sm.positions[e.b]).norm());
      const SchemeResult res = build_scheme(scheme, data, mesh);
      points.push_back({level, h, radial_error(res.spline, surface.radius(), options.density)});
    }
    return fit_convergence(std::move(points));
  }
  for (int level = 0; level < options.levels; ++level) {
    const int cells = options.base_cells << level;
    const Mesh mesh = Mesh::from_domain(surface_grid(surface, cells, cells));
    const HermiteData data = sample_on_domain(surface, mesh);
    const SchemeResult res = build_scheme(scheme, data, mesh);
    const double h = (surface.hi() - surface.lo()).maxCoeff() / cells;
    points.push_back({level, h, hausdorff_estimate(res.spline, surface, options.density)});
  }
  return fit_convergence(std::move(points));
}

}  // namespace hermite
