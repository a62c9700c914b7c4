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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hermite/metrics.hpp"
#include "hermite/sampling.hpp"
#include "support.hpp"

namespace hermite {
namespace {

using testing::Rng;

constexpr double kPi = std::numbers::pi;

std::vector<AnalyticSurface> all_surfaces() {
  return {AnalyticSurface::torus(), AnalyticSurface::freeform(), AnalyticSurface::scalar(),
          AnalyticSurface::sphere(1.7),
          AnalyticSurface::plane({1, 2, 3}, {1, 0.5, 0}, {0, 1, 0.5}, {-1, -1}, {1, 1})};
}

Vec2 interior_param(Rng& rng, const AnalyticSurface& s) {
  const Vec2 lo = s.lo(), hi = s.hi();
  const Vec2 pad = 0.1 * (hi - lo);
  return {rng.uniform(lo.x() + pad.x(), hi.x() - pad.x()), rng.uniform(lo.y() + pad.y(), hi.y() - pad.y())};
}

template <class E>
void expect_error(ErrorKind kind, E&& fn) {
  try {
    fn();
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

TEST(Surfaces, DerivativesMatchFiniteDifferences) {
  Rng rng(5);
  const double h = 1e-4;
  for (const auto& s : all_surfaces()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Vec2 uv = interior_param(rng, s);
      const auto d = s.derivatives(uv);
      const Vec2 eu(h, 0), ev(0, h);
      auto p = [&](const Vec2& x) { return s.point(x); };
      EXPECT_LT((d.f - p(uv)).norm(), 1e-15);
      EXPECT_LT((d.fu - (p(uv + eu) - p(uv - eu)) / (2 * h)).norm(), 1e-6) << s.name();
      EXPECT_LT((d.fv - (p(uv + ev) - p(uv - ev)) / (2 * h)).norm(), 1e-6) << s.name();
      EXPECT_LT((d.fuu - (p(uv + eu) - 2 * p(uv) + p(uv - eu)) / (h * h)).norm(), 1e-5) << s.name();
      EXPECT_LT((d.fvv - (p(uv + ev) - 2 * p(uv) + p(uv - ev)) / (h * h)).norm(), 1e-5) << s.name();
      const Vec3 fuv = (p(uv + eu + ev) - p(uv + eu - ev) - p(uv - eu + ev) + p(uv - eu - ev)) / (4 * h * h);
      EXPECT_LT((d.fuv - fuv).norm(), 1e-5) << s.name();
    }
  }
}

// Normal-section curvature <c'', n> / |c'|^2 of the curve uv + s w, by
// central differences of surface points only.
double section_curvature(const AnalyticSurface& s, const Vec2& uv, const Vec2& w, const Vec3& n, Vec3* tangent) {
  const double h = 1e-4;
  const Vec3 a = s.point(uv - h * w), b = s.point(uv), c = s.point(uv + h * w);
  const Vec3 d1 = (c - a) / (2 * h);
  const Vec3 d2 = (c - 2 * b + a) / (h * h);
  *tangent = d1.normalized();
  return d2.dot(n) / d1.squaredNorm();
}

TEST(Sampling, CurvaturesMatchNormalSections) {
  Rng rng(6);
  for (const auto& s : all_surfaces()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Vec2 uv = interior_param(rng, s);
      const HermiteVertexDatum d = sample_surface(s, uv);
      const auto der = s.derivatives(uv);
      EXPECT_LT((d.n - der.fu.cross(der.fv).normalized()).norm(), 1e-12);
      for (int k = 0; k < 5; ++k) {
        const double t = rng.uniform(0.0, kPi);
        Vec3 tangent;
        const double expect = section_curvature(s, uv, Vec2(std::cos(t), std::sin(t)), d.n, &tangent);
        EXPECT_NEAR(normal_curvature(d, tangent), expect, 1e-5) << s.name();
      }
      EXPECT_LE(d.kappa1, d.kappa2 + 1e-14);
    }
  }
}

TEST(Sampling, PrincipalFrameIsOrthonormal) {
  Rng rng(7);
  for (const auto& s : all_surfaces()) {
    for (int trial = 0; trial < 20; ++trial) {
      const HermiteVertexDatum d = sample_surface(s, interior_param(rng, s));
      EXPECT_NEAR(d.n.norm(), 1.0, 1e-14);
      EXPECT_NEAR(d.u1.norm(), 1.0, 1e-14);
      EXPECT_NEAR(d.u2.norm(), 1.0, 1e-14);
      EXPECT_NEAR(d.u1.dot(d.u2), 0.0, 1e-14);
      EXPECT_NEAR(d.u1.dot(d.n), 0.0, 1e-14);
      EXPECT_NEAR(d.u2.dot(d.n), 0.0, 1e-14);
      EXPECT_NO_THROW(validate_datum(d));
    }
  }
}

TEST(Sampling, SphereHasUniformCurvature) {
  Rng rng(8);
  const auto s = AnalyticSurface::sphere(2.5);
  for (int trial = 0; trial < 20; ++trial) {
    const HermiteVertexDatum d = sample_surface(s, interior_param(rng, s));
    EXPECT_NEAR(d.P.norm(), 2.5, 1e-14);
    EXPECT_LT((d.n - d.P / 2.5).norm(), 1e-14);
    EXPECT_NEAR(d.kappa1, -1.0 / 2.5, 1e-12);
    EXPECT_NEAR(d.kappa2, -1.0 / 2.5, 1e-12);
  }
  const HermiteVertexDatum p = sample_sphere_point(2.0, Vec3(0, 3, 4));
  EXPECT_LT((p.P - Vec3(0, 1.2, 1.6)).norm(), 1e-14);
  EXPECT_EQ(p.kappa1, -0.5);
  EXPECT_NO_THROW(validate_datum(p));
}

TEST(Sampling, PlaneIsFlat) {
  const auto s = AnalyticSurface::plane({0, 0, 1}, {2, 0, 0}, {0, 3, 0}, {0, 0}, {1, 1});
  const HermiteVertexDatum d = sample_surface(s, {0.3, 0.4});
  EXPECT_LT((d.P - Vec3(0.6, 1.2, 1.0)).norm(), 1e-15);
  EXPECT_LT((d.n - Vec3::UnitZ()).norm(), 1e-15);
  EXPECT_EQ(d.kappa1, 0.0);
  EXPECT_EQ(d.kappa2, 0.0);
  EXPECT_NEAR(s.height(0.6, 1.2), 1.0, 1e-15);
}

TEST(Sampling, HeightFieldsAgreeWithPoints) {
  Rng rng(9);
  const auto s = AnalyticSurface::scalar();
  for (int trial = 0; trial < 20; ++trial) {
    const Vec2 uv = interior_param(rng, s);
    const Vec3 p = s.point(uv);
    EXPECT_NEAR(p.z(), s.height(p.x(), p.y()), 1e-15);
    EXPECT_NEAR(p.z(), 0.5 * std::sin(uv.x() * uv.y()), 1e-15);
  }
  const auto tilted = AnalyticSurface::plane({1, 2, 3}, {1, 0.5, 0.2}, {0, 1, -0.4}, {-1, -1}, {1, 1});
  for (int trial = 0; trial < 20; ++trial) {
    const Vec3 p = tilted.point(interior_param(rng, tilted));
    EXPECT_NEAR(p.z(), tilted.height(p.x(), p.y()), 1e-13);
  }
  expect_error(ErrorKind::kInvalidInput, [] { (void)AnalyticSurface::torus().height(0, 0); });
}

TEST(Sampling, Midplanes) {
  const auto plane = AnalyticSurface::plane({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0}, {1, 1});
  EXPECT_LT((sample_midplane(plane, {0.5, 0.5}).n_pi - Vec3::UnitZ()).norm(), 1e-15);
  const auto sphere = AnalyticSurface::sphere();
  const Vec2 uv(1.0, 2.0);
  EXPECT_LT((sample_midplane(sphere, uv).n_pi - sphere.point(uv)).norm(), 1e-14);
  EXPECT_LT((sample_midplane(AnalyticSurface::torus(), {0, 0}).n_pi - Vec3::UnitX()).norm(), 1e-15);
}

TEST(Sampling, OnDomainAgreesAcrossIdentifications) {
  const auto torus = AnalyticSurface::torus();
  const Mesh mesh = Mesh::from_domain(benchmark_grid(torus));
  const HermiteData data = sample_on_domain(torus, mesh);
  ASSERT_EQ(static_cast<int>(data.vertices.size()), mesh.vertex_count());
  ASSERT_EQ(data.midplanes.size(), mesh.edges().size());
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    for (int c = 0; c < 3; ++c) {
      const Vec3 p = torus.point(mesh.corner_positions(t)[c]);
      EXPECT_LT((p - data.vertices[mesh.triangle(t)[c]].P).norm(), 1e-12);
    }
  }
  for (std::size_t e = 0; e < mesh.edges().size(); ++e) {
    const auto& edge = mesh.edges()[e];
    EXPECT_NEAR(data.midplanes[e].n_pi.norm(), 1.0, 1e-14);
    // The midplane normal lies between the end normals.
    const Vec3 avg = data.vertices[edge.a].n + data.vertices[edge.b].n;
    EXPECT_GT(data.midplanes[e].n_pi.dot(avg), 0.0);
  }
}

TEST(Sampling, SphereMeshMidplanes) {
  const SurfaceMesh ico = icosphere(1.0, 1);
  const Mesh mesh = Mesh::from_triangles(static_cast<int>(ico.positions.size()), ico.triangles);
  const HermiteData data = sample_sphere_mesh(3.0, ico, mesh);
  for (std::size_t e = 0; e < mesh.edges().size(); ++e) {
    const auto& edge = mesh.edges()[e];
    const Vec3 n = data.midplanes[e].n_pi;
    EXPECT_NEAR(n.norm(), 1.0, 1e-14);
    EXPECT_NEAR(n.dot(data.vertices[edge.a].n), n.dot(data.vertices[edge.b].n), 1e-14);
  }
}

TEST(Sampling, Errors) {
  expect_error(ErrorKind::kInvalidInput, [] { sample_surface(AnalyticSurface::scalar(), {3.0, 0.0}); });
  expect_error(ErrorKind::kSingularSample, [] { sample_surface(AnalyticSurface::sphere(), {0.0, 1.0}); });
  expect_error(ErrorKind::kSingularSample, [] { sample_sphere_point(1.0, Vec3::Zero()); });
  expect_error(ErrorKind::kInvalidInput, [] { AnalyticSurface::torus(1.0, 2.0); });
  expect_error(ErrorKind::kInvalidInput, [] { AnalyticSurface::sphere(0.0); });
  expect_error(ErrorKind::kInvalidInput,
               [] { AnalyticSurface::plane({0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 0}, {1, 1}); });
  expect_error(ErrorKind::kInvalidInput,
               [] { sample_on_domain(AnalyticSurface::scalar(), Mesh::from_triangles(3, {{0, 1, 2}})); });
  // Periodic directions accept any parameter.
  EXPECT_NO_THROW(sample_surface(AnalyticSurface::torus(), {20.0, -7.0}));
}

}  // namespace
}  // namespace hermite
