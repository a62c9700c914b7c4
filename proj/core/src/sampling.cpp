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

#include "hermite/sampling.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace hermite {
namespace {

constexpr double kPi = std::numbers::pi;

Vec3 any_perpendicular(const Vec3& n) {
  const Vec3 axis = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  return (axis - axis.dot(n) * n).normalized();
}

}  // namespace

AnalyticSurface AnalyticSurface::torus(double major, double minor) {
  if (!(minor > 0.0) || !(major > minor)) raise(ErrorKind::kInvalidInput, "torus needs R > r > 0");
  AnalyticSurface s;
  s.kind_ = SurfaceKind::kTorus;
  s.a_ = major;
  s.b_ = minor;
  s.lo_ = Vec2::Zero();
  s.hi_ = Vec2(2.0 * kPi, 2.0 * kPi);
  return s;
}

AnalyticSurface AnalyticSurface::freeform() {
  AnalyticSurface s;
  s.kind_ = SurfaceKind::kFreeform;
  s.lo_ = Vec2(-3.0, -3.0);
  s.hi_ = Vec2(3.0, 3.0);
  return s;
}

AnalyticSurface AnalyticSurface::scalar() {
  AnalyticSurface s;
  s.kind_ = SurfaceKind::kScalar;
  s.lo_ = Vec2(-2.0, -2.0);
  s.hi_ = Vec2(2.0, 2.0);
  return s;
}

AnalyticSurface AnalyticSurface::sphere(double radius) {
  if (!(radius > 0.0)) raise(ErrorKind::kInvalidInput, "sphere radius must be positive");
  AnalyticSurface s;
  s.kind_ = SurfaceKind::kSphere;
  s.a_ = radius;
  s.lo_ = Vec2::Zero();
  s.hi_ = Vec2(kPi, 2.0 * kPi);
  return s;
}

AnalyticSurface AnalyticSurface::plane(const Vec3& origin, const Vec3& du, const Vec3& dv, const Vec2& lo,
                                       const Vec2& hi) {
  if (du.cross(dv).norm() == 0.0) raise(ErrorKind::kInvalidInput, "plane spanning vectors are parallel");
  AnalyticSurface s;
  s.kind_ = SurfaceKind::kPlane;
  s.origin_ = origin;
  s.du_ = du;
  s.dv_ = dv;
  s.lo_ = lo;
  s.hi_ = hi;
  return s;
}

std::string AnalyticSurface::name() const {
  switch (kind_) {
    case SurfaceKind::kTorus: return "torus";
    case SurfaceKind::kFreeform: return "freeform";
    case SurfaceKind::kScalar: return "scalar";
    case SurfaceKind::kSphere: return "sphere";
    case SurfaceKind::kPlane: return "plane";
  }
  return "unknown";
}

Vec3 AnalyticSurface::point(const Vec2& uv) const { return derivatives(uv).f; }

double AnalyticSurface::height(double x, double y) const {
  if (kind_ == SurfaceKind::kScalar) return 0.5 * std::sin(x * y);
  if (kind_ == SurfaceKind::kPlane) {
    // Plane as a graph over its first two coordinates.
    Eigen::Matrix2d m;
    m << du_.x(), dv_.x(), du_.y(), dv_.y();
    const Vec2 st = m.inverse() * Vec2(x - origin_.x(), y - origin_.y());
    return origin_.z() + st.x() * du_.z() + st.y() * dv_.z();
  }
  raise(ErrorKind::kInvalidInput, name() + " is not a height field");
}

SurfaceDerivatives AnalyticSurface::derivatives(const Vec2& uv) const {
  const double u = uv.x();
  const double v = uv.y();
  SurfaceDerivatives s;
  switch (kind_) {
    case SurfaceKind::kTorus: {
      const double R = a_, r = b_;
      const double cu = std::cos(u), su = std::sin(u), cv = std::cos(v), sv = std::sin(v);
      const double w = R + r * cv;
      s.f = Vec3(w * cu, w * su, r * sv);
      s.fu = Vec3(-w * su, w * cu, 0.0);
      s.fv = Vec3(-r * sv * cu, -r * sv * su, r * cv);
      s.fuu = Vec3(-w * cu, -w * su, 0.0);
      s.fuv = Vec3(r * sv * su, -r * sv * cu, 0.0);
      s.fvv = Vec3(-r * cv * cu, -r * cv * su, -r * sv);
      break;
    }
    case SurfaceKind::kFreeform:
      s.f = Vec3(u + v * v / 12.0, v - std::cos(u), u * u / 3.0 + std::sin(v));
      s.fu = Vec3(1.0, std::sin(u), 2.0 * u / 3.0);
      s.fv = Vec3(v / 6.0, 1.0, std::cos(v));
      s.fuu = Vec3(0.0, std::cos(u), 2.0 / 3.0);
      s.fuv = Vec3::Zero();
      s.fvv = Vec3(1.0 / 6.0, 0.0, -std::sin(v));
      break;
    case SurfaceKind::kScalar: {
      const double c = std::cos(u * v), sn = std::sin(u * v);
      s.f = Vec3(u, v, 0.5 * sn);
      s.fu = Vec3(1.0, 0.0, 0.5 * v * c);
      s.fv = Vec3(0.0, 1.0, 0.5 * u * c);
      s.fuu = Vec3(0.0, 0.0, -0.5 * v * v * sn);
      s.fuv = Vec3(0.0, 0.0, 0.5 * c - 0.5 * u * v * sn);
      s.fvv = Vec3(0.0, 0.0, -0.5 * u * u * sn);
      break;
    }
    case SurfaceKind::kSphere: {
      const double R = a_;
      const double cu = std::cos(u), su = std::sin(u), cv = std::cos(v), sv = std::sin(v);
      s.f = R * Vec3(su * cv, su * sv, cu);
      s.fu = R * Vec3(cu * cv, cu * sv, -su);
      s.fv = R * Vec3(-su * sv, su * cv, 0.0);
      s.fuu = R * Vec3(-su * cv, -su * sv, -cu);
      s.fuv = R * Vec3(-cu * sv, cu * cv, 0.0);
      s.fvv = R * Vec3(-su * cv, -su * sv, 0.0);
      break;
    }
    case SurfaceKind::kPlane:
      s.f = origin_ + u * du_ + v * dv_;
      s.fu = du_;
      s.fv = dv_;
      s.fuu = s.fuv = s.fvv = Vec3::Zero();
      break;
  }
  return s;
}

HermiteVertexDatum sample_surface(const AnalyticSurface& surface, const Vec2& uv) {
  const double slack = 1e-9;
  const bool in_u = surface.periodic_u() || (uv.x() >= surface.lo().x() - slack && uv.x() <= surface.hi().x() + slack);
  const bool in_v = surface.periodic_v() || (uv.y() >= surface.lo().y() - slack && uv.y() <= surface.hi().y() + slack);
  if (!in_u || !in_v) raise(ErrorKind::kInvalidInput, "parameter outside the " + surface.name() + " domain");

  const SurfaceDerivatives s = surface.derivatives(uv);
  const Vec3 cross = s.fu.cross(s.fv);
  if (cross.norm() <= 1e-12 * std::max(1.0, s.fu.norm() * s.fv.norm())) {
    raise(ErrorKind::kSingularSample, "degenerate parameterization of " + surface.name());
  }
  HermiteVertexDatum datum;
  datum.P = s.f;
  datum.n = cross.normalized();
  Eigen::Matrix2d first;
  first << s.fu.dot(s.fu), s.fu.dot(s.fv), s.fu.dot(s.fv), s.fv.dot(s.fv);
  Eigen::Matrix2d second;
  second << s.fuu.dot(datum.n), s.fuv.dot(datum.n), s.fuv.dot(datum.n), s.fvv.dot(datum.n);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix2d> solver(second, first);
  const Eigen::Vector2d x = solver.eigenvectors().col(0);
  datum.u1 = (x(0) * s.fu + x(1) * s.fv).normalized();
  datum.u1 = (datum.u1 - datum.u1.dot(datum.n) * datum.n).normalized();
  datum.u2 = datum.n.cross(datum.u1);
  datum.kappa1 = solver.eigenvalues()(0);
  datum.kappa2 = solver.eigenvalues()(1);
  return datum;
}

EdgeMidplaneDatum sample_midplane(const AnalyticSurface& surface, const Vec2& uv_mid) {
  return {sample_surface(surface, uv_mid).n};
}

HermiteVertexDatum sample_sphere_point(double radius, const Vec3& dir) {
  if (dir.norm() == 0.0) raise(ErrorKind::kSingularSample, "zero direction on the sphere");
  HermiteVertexDatum datum;
  datum.n = dir.normalized();
  datum.P = radius * datum.n;
  datum.u1 = any_perpendicular(datum.n);
  datum.u2 = datum.n.cross(datum.u1);
  datum.kappa1 = datum.kappa2 = -1.0 / radius;
  return datum;
}

HermiteData sample_on_domain(const AnalyticSurface& surface, const Mesh& mesh) {
  if (!mesh.has_domain()) raise(ErrorKind::kInvalidInput, "mesh has no parameter positions");
  HermiteData data;
  data.vertices.resize(static_cast<std::size_t>(mesh.vertex_count()));
  std::vector<bool> done(data.vertices.size(), false);
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    for (int c = 0; c < 3; ++c) {
      const int v = mesh.triangle(t)[c];
      if (done[v]) continue;
      data.vertices[v] = sample_surface(surface, mesh.corner_positions(t)[c]);
      done[v] = true;
    }
  }
  for (const auto& e : mesh.edges()) {
    const auto& pos = mesh.corner_positions(e.sides[0].tri);
    const int c = e.sides[0].corner;
    data.midplanes.push_back(sample_midplane(surface, 0.5 * (pos[c] + pos[(c + 1) % 3])));
  }
  return data;
}

HermiteData sample_sphere_mesh(double radius, const SurfaceMesh& mesh, const Mesh& topology) {
  HermiteData data;
  for (const Vec3& p : mesh.positions) data.vertices.push_back(sample_sphere_point(radius, p));
  for (const auto& e : topology.edges()) {
    data.midplanes.push_back({(mesh.positions[e.a].normalized() + mesh.positions[e.b].normalized()).normalized()});
  }
  return data;
}

}  // namespace hermite
