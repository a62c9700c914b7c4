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

#include <string>

#include "hermite/datum.hpp"
#include "hermite/mesh.hpp"

namespace hermite {

enum class SurfaceKind { kTorus, kFreeform, kScalar, kSphere, kPlane };

struct SurfaceDerivatives {
  Vec3 f, fu, fv, fuu, fuv, fvv;
};

// Benchmark surfaces with closed-form derivatives. Normals are fu x fv.
class AnalyticSurface {
 public:
  static AnalyticSurface torus(double major = 2.0, double minor = 1.0);
  // (u + v^2/12, v - cos u, u^2/3 + sin v) on [-3,3]^2.
  static AnalyticSurface freeform();
  // Graph of 1/2 sin(uv) on [-2,2]^2.
  static AnalyticSurface scalar();
  // Polar angle u in [0, pi], azimuth v in [0, 2 pi].
  static AnalyticSurface sphere(double radius = 1.0);
  static AnalyticSurface plane(const Vec3& origin, const Vec3& du, const Vec3& dv, const Vec2& lo, const Vec2& hi);

  SurfaceKind kind() const { return kind_; }
  std::string name() const;
  Vec2 lo() const { return lo_; }
  Vec2 hi() const { return hi_; }
  bool periodic_u() const { return kind_ == SurfaceKind::kTorus; }
  bool periodic_v() const { return kind_ == SurfaceKind::kTorus || kind_ == SurfaceKind::kSphere; }
  double radius() const { return a_; }
  double minor_radius() const { return b_; }

  Vec3 point(const Vec2& uv) const;
  SurfaceDerivatives derivatives(const Vec2& uv) const;
  // Height of the scalar graph at (x, y).
  double height(double x, double y) const;

 private:
  SurfaceKind kind_ = SurfaceKind::kPlane;
  double a_ = 0.0;
  double b_ = 0.0;
  Vec3 origin_ = Vec3::Zero();
  Vec3 du_ = Vec3::UnitX();
  Vec3 dv_ = Vec3::UnitY();
  Vec2 lo_ = Vec2::Zero();
  Vec2 hi_ = Vec2::Ones();
};

HermiteVertexDatum sample_surface(const AnalyticSurface& surface, const Vec2& uv);
EdgeMidplaneDatum sample_midplane(const AnalyticSurface& surface, const Vec2& uv_mid);

// Exact data on the sphere of the given radius in direction `dir`.
HermiteVertexDatum sample_sphere_point(double radius, const Vec3& dir);

// Data at every vertex (first parameter position of each canonical id) and at
// every edge midpoint of a domain mesh.
HermiteData sample_on_domain(const AnalyticSurface& surface, const Mesh& mesh);

// Sphere data at the (normalized) vertices of a triangle mesh; midplanes use
// the normalized edge midpoints.
HermiteData sample_sphere_mesh(double radius, const SurfaceMesh& mesh, const Mesh& topology);

}  // namespace hermite
