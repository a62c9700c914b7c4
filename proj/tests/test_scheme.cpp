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

#include "hermite/metrics.hpp"
#include "hermite/scheme.hpp"
#include "hermite/smoothness.hpp"
#include "support.hpp"

namespace hermite {
namespace {

using testing::random_patch;
using testing::Rng;

AnalyticSurface tilted_plane() {
  return AnalyticSurface::plane({0.2, -0.1, 0.5}, {1.0, 0.3, -0.2}, {-0.1, 0.8, 0.4}, {-1, -1}, {1, 1});
}

struct Fixture {
  AnalyticSurface surface;
  Mesh mesh;
  HermiteData data;
};

Fixture on_grid(const AnalyticSurface& s, const DomainTriangulation& tri) {
  Fixture f{s, Mesh::from_domain(tri), {}};
  f.data = sample_on_domain(s, f.mesh);
  return f;
}

const SchemeResult& torus_c1() {
  static const Fixture f = on_grid(AnalyticSurface::torus(), benchmark_grid(AnalyticSurface::torus()));
  static const SchemeResult r = build_c1_quintic(f.data, f.mesh);
  return r;
}

const SchemeResult& torus_g1() {
  static const Fixture f = on_grid(AnalyticSurface::torus(), benchmark_grid(AnalyticSurface::torus()));
  static const SchemeResult r = build_g1_octic(f.data, f.mesh);
  return r;
}

const HermiteData& torus_data() {
  static const Fixture f = on_grid(AnalyticSurface::torus(), benchmark_grid(AnalyticSurface::torus()));
  return f.data;
}

TEST(C1Quintic, ReproducesPlane) {
  const Fixture f = on_grid(tilted_plane(), grid_triangulation({-1, -1}, {1, 1}, 3, 4));
  const SchemeResult r = build_c1_quintic(f.data, f.mesh);
  ASSERT_EQ(r.spline.degree(), 5);
  EXPECT_LT(hausdorff_estimate(r.spline, f.surface, 12), 1e-10);
}

TEST(G1Octic, ReproducesPlane) {
  const Fixture f = on_grid(tilted_plane(), grid_triangulation({-1, -1}, {1, 1}, 3, 4));
  const SchemeResult r = build_g1_octic(f.data, f.mesh);
  ASSERT_EQ(r.spline.degree(), 8);
  EXPECT_LT(hausdorff_estimate(r.spline, f.surface, 12), 1e-10);
}

TEST(C1Quintic, TorusContinuity) {
  const Spline& s = torus_c1().spline;
  for (int e = 0; e < static_cast<int>(s.mesh.edges().size()); ++e) {
    EXPECT_LT(check_continuity(s, e, 1).residual, 1e-9) << "edge " << e;
  }
  EXPECT_LT(c1_residual(s), 1e-9);
}

TEST(C1Quintic, TorusInterpolation) {
  const auto report = interpolation_report(torus_c1().spline, torus_data());
  EXPECT_LT(report.position, 1e-12);
  EXPECT_LT(report.normal, 1e-8);
  EXPECT_LT(report.curvature, 1e-6);
}

TEST(C1Quintic, MidpointPlanes) { EXPECT_LT(midpoint_normal_defect(torus_c1().spline, torus_data()), 1e-8); }

TEST(G1Octic, TorusContinuity) {
  const SchemeResult& r = torus_g1();
  EXPECT_LT(g1_normal_defect(r.spline), 1e-7);
  EXPECT_LT(g1_identity_residual(r), 1e-10);
  for (const auto& sol : r.edges) {
    ASSERT_TRUE(sol.has_value());
    EXPECT_LT(sol->fixed_row_residual, 1e-10);
    for (int m = 0; m < 4; ++m) {
      EXPECT_GT(sol->connection.mu[m], 0.0);
      EXPECT_LT(sol->connection.xi[m], 0.0);
    }
  }
}

TEST(G1Octic, TorusPositionalContinuity) {
  const Spline& s = torus_g1().spline;
  for (int e = 0; e < static_cast<int>(s.mesh.edges().size()); ++e) {
    const EdgeView view = s.mesh.edge_view(e);
    const TriPatch a = rotated(s.patches[view.tri1], view.corner1);
    const TriPatch b = rotated(s.patches[view.tri2], view.corner2);
    // Boundary row of tau1 from v0 to v2 equals that of tau2 from v0 to v2.
    for (int p = 0; p <= 8; ++p) EXPECT_LT((a(8 - p, 0, p) - b(8 - p, p, 0)).norm(), 1e-14);
  }
}

TEST(G1Octic, TorusInterpolation) {
  const auto report = interpolation_report(torus_g1().spline, torus_data());
  EXPECT_LT(report.position, 1e-12);
  EXPECT_LT(report.normal, 1e-8);
  EXPECT_LT(report.curvature, 1e-6);
}

TEST(G1Octic, MidpointPlanes) { EXPECT_LT(midpoint_normal_defect(torus_g1().spline, torus_data()), 1e-8); }

TEST(G1Octic, SphereOnAbstractMesh) {
  const SurfaceMesh ico = icosphere(1.5, 1);
  const Mesh mesh = Mesh::from_triangles(static_cast<int>(ico.positions.size()), ico.triangles);
  const HermiteData data = sample_sphere_mesh(1.5, ico, mesh);
  const SchemeResult r = build_g1_octic(data, mesh);
  EXPECT_LT(g1_normal_defect(r.spline), 1e-7);
  const auto report = interpolation_report(r.spline, data);
  EXPECT_LT(report.position, 1e-12);
  EXPECT_LT(report.normal, 1e-8);
  EXPECT_LT(report.curvature, 1e-6);
  EXPECT_LT(radial_error(r.spline, 1.5, 8), 0.05);
}

TEST(C1Quintic, RigidMotionEquivariance) {
  const Fixture f = on_grid(AnalyticSurface::scalar(), grid_triangulation({-2, -2}, {2, 2}, 3, 3));
  const Eigen::Matrix3d rot = Eigen::AngleAxisd(0.7, Vec3(1, 2, -1).normalized()).toRotationMatrix();
  const Vec3 shift(0.4, -1.0, 2.0);
  HermiteData moved = f.data;
  for (auto& v : moved.vertices) v = transform_datum(v, rot, shift);
  for (auto& m : moved.midplanes) m.n_pi = rot * m.n_pi;
  const SchemeResult a = build_c1_quintic(f.data, f.mesh);
  const SchemeResult b = build_c1_quintic(moved, f.mesh);
  for (int t = 0; t < f.mesh.triangle_count(); ++t) {
    for (std::size_t k = 0; k < a.spline.patches[t].size(); ++k) {
      const Vec3 expect = rot * a.spline.patches[t].values()[k] + shift;
      EXPECT_LT((b.spline.patches[t].values()[k] - expect).norm(), 1e-10);
    }
  }
}

TEST(Scheme, RejectsMismatchedData) {
  const Fixture f = on_grid(tilted_plane(), grid_triangulation({-1, -1}, {1, 1}, 2, 2));
  HermiteData short_data = f.data;
  short_data.vertices.pop_back();
  try {
    build_c1_quintic(short_data, f.mesh);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
  }
  HermiteData bad = f.data;
  bad.vertices[2].n = Vec3(1, 1, 0);
  try {
    build_g1_octic(bad, f.mesh);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
    EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos) << e.what();
  }
}

TEST(Scheme, C1NeedsDomain) {
  const Mesh mesh = Mesh::from_triangles(3, {{0, 1, 2}});
  try {
    build_c1_quintic(HermiteData{}, mesh);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
  }
}

// Indices of the octic net with every coordinate >= 2.
std::vector<MultiIndex> interior_indices() {
  std::vector<MultiIndex> out;
  for (const auto& m : multi_indices(8)) {
    if (std::min({m.i, m.j, m.k}) >= 2) out.push_back(m);
  }
  return out;
}

TEST(FillInterior, ReproducesElevatedQuintic) {
  Rng rng(91);
  for (int trial = 0; trial < 10; ++trial) {
    const TriPatch oct = elevate_patch(random_patch(rng, 5), 8);
    TriPatch cut = oct;
    for (const auto& m : interior_indices()) cut[m] = Vec3(99, 99, 99);
    const TriPatch filled = fill_interior(cut);
    for (const auto& m : interior_indices()) EXPECT_LT((filled[m] - oct[m]).norm(), 1e-10);
  }
}

TEST(FillInterior, PlanarBoundaryGivesPlanarInterior) {
  TriPatch lin(1);
  lin(1, 0, 0) = Vec3(0, 0, 1);
  lin(0, 1, 0) = Vec3(2, 0, 1);
  lin(0, 0, 1) = Vec3(0, 3, 1);
  const TriPatch filled = fill_interior(elevate_patch(lin, 8));
  for (const Vec3& c : filled.values()) EXPECT_NEAR(c.z(), 1.0, 1e-12);
}

TEST(FillInterior, MatchesDenseLeastSquares) {
  Rng rng(92);
  const auto octic_idx = multi_indices(8);
  const auto quintic_idx = multi_indices(5);
  // Elevation operator column by column from unit quintic nets.
  Eigen::MatrixXd elev(octic_idx.size(), quintic_idx.size());
  for (std::size_t c = 0; c < quintic_idx.size(); ++c) {
    TriPatch unit(5);
    unit.values()[c] = Vec3(1, 0, 0);
    const TriPatch up = elevate_patch(unit, 8);
    for (std::size_t r = 0; r < octic_idx.size(); ++r) elev(r, c) = up.values()[r].x();
  }
  std::vector<int> boundary;
  for (std::size_t r = 0; r < octic_idx.size(); ++r) {
    if (std::min({octic_idx[r].i, octic_idx[r].j, octic_idx[r].k}) <= 1) boundary.push_back(static_cast<int>(r));
  }
  ASSERT_EQ(boundary.size(), 39u);
  for (int trial = 0; trial < 5; ++trial) {
    TriPatch oct = elevate_patch(random_patch(rng, 5), 8);
    for (auto& c : oct.values()) c += 0.05 * rng.vec3();
    Eigen::MatrixXd a(boundary.size(), quintic_idx.size());
    Eigen::MatrixXd rhs(boundary.size(), 3);
    for (std::size_t r = 0; r < boundary.size(); ++r) {
      a.row(r) = elev.row(boundary[r]);
      rhs.row(r) = oct.values()[boundary[r]].transpose();
    }
    const Eigen::MatrixXd q = a.colPivHouseholderQr().solve(rhs);
    const Eigen::MatrixXd full = elev * q;
    const TriPatch filled = fill_interior(oct);
    for (std::size_t r = 0; r < octic_idx.size(); ++r) {
      const auto& m = octic_idx[r];
      if (std::min({m.i, m.j, m.k}) >= 2) {
        EXPECT_LT((filled.values()[r] - full.row(r).transpose()).norm(), 1e-10);
      } else {
        EXPECT_EQ(filled.values()[r], oct.values()[r]);
      }
    }
  }
}

TEST(LocalOffsets, TangentCoordinates) {
  HermiteVertexDatum d;
  d.P = Vec3(1, 1, 1);
  const auto o = local_offsets({Vec3(3, 1, 1), Vec3(1, 2, 1), Vec3(0, 0, 1)}, d);
  EXPECT_LT((o[0] - Vec2(2, 0)).norm(), 1e-15);
  EXPECT_LT((o[1] - Vec2(0, 1)).norm(), 1e-15);
  EXPECT_LT((o[2] - Vec2(-1, -1)).norm(), 1e-15);
}

}  // namespace
}  // namespace hermite
