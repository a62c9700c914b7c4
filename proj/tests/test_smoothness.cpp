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

#include "hermite/smoothness.hpp"
#include "support.hpp"

namespace hermite {
namespace {

using testing::random_fan;
using testing::Rng;

// Control point of the polynomial c + L(x) + B(x, x) over the fan triangle
// (0, b, c) with i, j, k copies of the corners in the blossom.
struct Quadratic {
  Vec3 c0;
  Eigen::Matrix<double, 3, 2> lin;
  std::array<Vec3, 3> quad;  // B(e1,e1), B(e1,e2), B(e2,e2)

  Vec3 bilinear(const Vec2& x, const Vec2& y) const {
    return x(0) * y(0) * quad[0] + (x(0) * y(1) + x(1) * y(0)) * quad[1] + x(1) * y(1) * quad[2];
  }
  Vec3 control(int d, const MultiIndex& m, const Vec2& b, const Vec2& c) const {
    const double nn = d * (d - 1);
    return c0 + (m.j * (lin * b) + m.k * (lin * c)) / d +
           (2.0 / nn) * (0.5 * m.j * (m.j - 1) * bilinear(b, b) + 0.5 * m.k * (m.k - 1) * bilinear(c, c) +
                         m.j * m.k * bilinear(b, c));
  }
};

Quadratic random_quadratic(Rng& rng) {
  Quadratic q;
  q.c0 = rng.vec3();
  q.lin.col(0) = rng.vec3();
  q.lin.col(1) = rng.vec3();
  for (auto& v : q.quad) v = rng.vec3();
  return q;
}

TEST(EdgePropagation, OrderZeroCopiesBoundary) {
  Rng rng(41);
  const TriPatch p1 = random_patch(rng, 5);
  for (const auto& [m, value] : cr_edge_propagate(p1, rng.point(), 0)) {
    EXPECT_EQ(m.k, 0);
    EXPECT_EQ(value, p1(m.i, 0, m.j));
  }
}

TEST(EdgePropagation, CoplanarLinearPatches) {
  TriPatch p1(1);
  p1(1, 0, 0) = Vec3(0, 0, 1);
  p1(0, 1, 0) = Vec3(1, 0, 1);
  p1(0, 0, 1) = Vec3(0, 1, 1);
  const TriPatch q = elevate_patch(p1, 5);
  for (const auto& [m, value] : cr_edge_propagate(q, Bary{0.7, -0.9, 1.2}, 1)) EXPECT_NEAR(value.z(), 1.0, 1e-15);
}

TEST(EdgePropagation, MatchesSummationOracle) {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const TriPatch p1 = random_patch(rng, 5);
    const Bary v3{rng.uniform(-1, 1), rng.uniform(-1.5, -0.2), 0.0};
    const Bary v{v3.alpha, v3.beta, 1.0 - v3.alpha - v3.beta};
    for (const auto& [m, value] : cr_edge_propagate(p1, v, 2)) {
      // (c1_{i0j})^{(k)}(v3) as a direct Bernstein sum of order k.
      TriPatch sub(m.k);
      sub.for_each_index([&](const MultiIndex& l) { sub[l] = p1(m.i + l.i, l.j, m.j + l.k); });
      EXPECT_LT((value - testing::direct_eval(sub, v)).norm(), 1e-12);
    }
  }
}

TEST(EdgePropagation, GlobalPolynomialIsReproducedToAllOrders) {
  Rng rng(43);
  const std::array<Vec2, 3> ref{Vec2(-3, -3), Vec2(3, -3), Vec2(0, 3)};
  const TriPatch g = random_patch(rng, 5);
  const Vec2 v0(0, 0), v1(1, -0.3), v2(0.2, 1), v3(-0.9, 0.4);
  const TriPatch p1 = testing::restrict_patch(g, ref, v0, v1, v2);
  const TriPatch p2 = testing::restrict_patch(g, ref, v0, v2, v3);
  Eigen::Matrix2d m;
  m.col(0) = v1 - v0;
  m.col(1) = v2 - v0;
  const Vec2 x = m.inverse() * (v3 - v0);
  const Bary apex{1 - x(0) - x(1), x(0), x(1)};
  for (const auto& [idx, value] : cr_edge_propagate(p1, apex, 5)) EXPECT_LT((value - p2[idx]).norm(), 1e-10);
}

TEST(EdgePropagation, RejectsOrderAboveDegree) {
  try {
    cr_edge_propagate(TriPatch(3), Bary{1, 0, 0}, 4);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidOrder);
  }
}

TEST(VertexPropagation, PlanarSeedStaysPlanar) {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.integer(3, 8);
    const bool closed = trial % 2 == 0;
    const auto offsets = random_fan(rng, n, closed);
    TriPatch seed(5, Vec3::Zero());
    seed(5, 0, 0) = Vec3(0, 0, 2);
    seed(4, 1, 0) = Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1), 2);
    seed(4, 0, 1) = Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1), 2);
    const auto prop = cr_vertex_propagate(offsets, closed, seed, 1);
    for (const TriPatch& net : prop.nets) {
      net.for_each_index([&](const MultiIndex& m) {
        if (m.j + m.k <= 1) { EXPECT_NEAR(net[m].z(), 2.0, 1e-12); }
      });
    }
  }
}

TEST(VertexPropagation, QuadraticSurfaceReproduced) {
  Rng rng(45);
  const int d = 5;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(3, 9);
    const bool closed = trial % 3 != 0;
    const auto o = random_fan(rng, n, closed);
    const Quadratic q = random_quadratic(rng);
    TriPatch seed(d, Vec3::Zero());
    seed.for_each_index([&](const MultiIndex& m) {
      if (m.j + m.k <= 2) seed[m] = q.control(d, m, o[0], o[1]);
    });
    const auto prop = cr_vertex_propagate(o, closed, seed, 2);
    const int tc = closed ? n : n - 1;
    ASSERT_EQ(static_cast<int>(prop.nets.size()), tc);
    for (int l = 0; l < tc; ++l) {
      prop.nets[l].for_each_index([&](const MultiIndex& m) {
        if (m.j + m.k <= 2) {
          EXPECT_LT((prop.nets[l][m] - q.control(d, m, o[l], o[(l + 1) % n])).norm(), 1e-10);
        }
      });
    }
    EXPECT_LT(prop.wrap_residual, 1e-10);
  }
}

TEST(VertexPropagation, SymmetricCellKeepsSymmetry) {
  std::vector<Vec2> o;
  for (int l = 0; l < 6; ++l) o.emplace_back(std::cos(l * std::numbers::pi / 3), std::sin(l * std::numbers::pi / 3));
  // Paraboloid z = x^2 + y^2 is invariant under rotation about z.
  Quadratic q;
  q.c0 = Vec3::Zero();
  q.lin << 1, 0, 0, 1, 0, 0;
  q.quad = {Vec3(0, 0, 1), Vec3::Zero(), Vec3(0, 0, 1)};
  TriPatch seed(5, Vec3::Zero());
  seed.for_each_index([&](const MultiIndex& m) {
    if (m.j + m.k <= 2) seed[m] = q.control(5, m, o[0], o[1]);
  });
  const auto prop = cr_vertex_propagate(o, true, seed, 2);
  const Eigen::Matrix3d rot = Eigen::AngleAxisd(std::numbers::pi / 3, Vec3::UnitZ()).toRotationMatrix();
  for (int l = 1; l < 6; ++l) {
    seed.for_each_index([&](const MultiIndex& m) {
      if (m.j + m.k <= 2) { EXPECT_LT((prop.nets[l][m] - rot * prop.nets[l - 1][m]).norm(), 1e-12); }
    });
  }
}

TEST(VertexPropagation, LinearInTheSeed) {
  Rng rng(46);
  const auto o = random_fan(rng, 7, true);
  TriPatch x(5, Vec3::Zero()), y(5, Vec3::Zero()), z(5, Vec3::Zero());
  const double a = 0.7, b = -1.3;
  x.for_each_index([&](const MultiIndex& m) {
    if (m.j + m.k <= 2) {
      x[m] = rng.vec3();
      y[m] = rng.vec3();
      z[m] = a * x[m] + b * y[m];
    }
  });
  const auto px = cr_vertex_propagate(o, true, x, 2);
  const auto py = cr_vertex_propagate(o, true, y, 2);
  const auto pz = cr_vertex_propagate(o, true, z, 2);
  for (std::size_t l = 0; l < pz.nets.size(); ++l) {
    pz.nets[l].for_each_index([&](const MultiIndex& m) {
      if (m.j + m.k <= 2) {
        EXPECT_LT((pz.nets[l][m] - (a * px.nets[l][m] + b * py.nets[l][m])).norm(), 1e-12);
      }
    });
  }
}

TEST(VertexPropagation, OrderOneIsRestrictionOfOrderTwo) {
  Rng rng(47);
  const auto o = random_fan(rng, 5, false);
  TriPatch seed(5, Vec3::Zero());
  seed.for_each_index([&](const MultiIndex& m) {
    if (m.j + m.k <= 2) seed[m] = rng.vec3();
  });
  const auto p1 = cr_vertex_propagate(o, false, seed, 1);
  const auto p2 = cr_vertex_propagate(o, false, seed, 2);
  for (std::size_t l = 0; l < p1.nets.size(); ++l) {
    p1.nets[l].for_each_index([&](const MultiIndex& m) {
      if (m.j + m.k <= 1) { EXPECT_LT((p1.nets[l][m] - p2.nets[l][m]).norm(), 1e-14); }
    });
  }
}

TEST(RingMatrix, AgreesWithPointPropagation) {
  Rng rng(48);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.integer(3, 8);
    const bool closed = trial % 2 == 0;
    const auto o = random_fan(rng, n, closed);
    TriPatch seed(5, Vec3::Zero());
    seed.for_each_index([&](const MultiIndex& m) {
      if (m.j + m.k <= 2) seed[m] = rng.vec3();
    });
    const std::array<Vec3, 6> sym{seed(5, 0, 0), seed(4, 1, 0), seed(4, 0, 1),
                                  seed(3, 2, 0), seed(3, 1, 1), seed(3, 0, 2)};
    const auto prop = cr_vertex_propagate(o, closed, seed, 2);
    const int tc = closed ? n : n - 1;
    for (int level = 1; level <= 2; ++level) {
      const Eigen::MatrixXd map = ring_propagation_matrix(o, closed, 5, level);
      const auto slots = ring_local_slots(tc, closed, 5, level);
      ASSERT_EQ(map.rows(), static_cast<Eigen::Index>(slots.size()));
      for (std::size_t s = 0; s < slots.size(); ++s) {
        Vec3 p = Vec3::Zero();
        for (int c = 0; c < 6; ++c) p += map(static_cast<Eigen::Index>(s), c) * sym[c];
        const LocalAlias& a = slots[s].front();
        EXPECT_LT((p - prop.nets[a.tri][a.index]).norm(), 1e-12);
      }
    }
  }
}

Spline two_patch_spline(const TriPatch& g, const std::array<Vec2, 3>& ref) {
  DomainTriangulation tri;
  tri.vertices = {Vec2(0, 0), Vec2(1, -0.3), Vec2(0.2, 1), Vec2(-0.9, 0.4)};
  tri.triangles = {{0, 1, 2}, {0, 2, 3}};
  Spline s;
  s.mesh = Mesh::from_domain(tri);
  for (const auto& t : tri.triangles) {
    s.patches.push_back(
        testing::restrict_patch(g, ref, tri.vertices[t[0]], tri.vertices[t[1]], tri.vertices[t[2]]));
  }
  return s;
}

TEST(ContinuityCheck, SmoothJoinAndPerturbation) {
  Rng rng(49);
  const std::array<Vec2, 3> ref{Vec2(-3, -3), Vec2(3, -3), Vec2(0, 3)};
  Spline s = two_patch_spline(random_patch(rng, 5), ref);
  const int e = s.mesh.find_edge(0, 2);
  ASSERT_GE(e, 0);
  for (int r = 0; r <= 5; ++r) EXPECT_LT(check_continuity(s, e, r).residual, 1e-10);

  // Move one second-row point of the second patch of the edge.
  const EdgeView view = s.mesh.edge_view(e);
  Vec3& target = s.patches[view.tri2][to_patch_index({3, 0, 2}, view.corner2)];
  const Vec3 before = target;
  const double delta = 1e-3;
  target = before + Vec3(delta, 0, 0);
  const double r1 = check_continuity(s, e, 2).residual;
  EXPECT_LT(check_continuity(s, e, 1).residual, 1e-10);
  EXPECT_NEAR(r1, delta, 1e-12);
  target = before + Vec3(0, 4 * delta, 0);
  EXPECT_NEAR(check_continuity(s, e, 2).residual, 4 * delta, 1e-12);
}

TEST(ContinuityCheck, FirstOrderPerturbation) {
  Rng rng(50);
  const std::array<Vec2, 3> ref{Vec2(-3, -3), Vec2(3, -3), Vec2(0, 3)};
  Spline s = two_patch_spline(random_patch(rng, 5), ref);
  const int e = s.mesh.find_edge(0, 2);
  const EdgeView view = s.mesh.edge_view(e);
  s.patches[view.tri2][to_patch_index({3, 1, 1}, view.corner2)] += Vec3(0, 0, 2e-4);
  EXPECT_LT(check_continuity(s, e, 0).residual, 1e-10);
  EXPECT_NEAR(check_continuity(s, e, 1).residual, 2e-4, 1e-12);
}

TEST(ContinuityCheck, ApexCoordinates) {
  Rng rng(51);
  const std::array<Vec2, 3> ref{Vec2(-3, -3), Vec2(3, -3), Vec2(0, 3)};
  const Spline s = two_patch_spline(random_patch(rng, 2), ref);
  const Bary apex = apex_in_first(s.mesh, s.mesh.find_edge(0, 2));
  EXPECT_NEAR(apex.sum(), 1.0, 1e-14);
  // Apex v3 = (-0.9, 0.4) in the frame (v0, v1, v2).
  const Vec2 p = apex.alpha * Vec2(0, 0) + apex.beta * Vec2(1, -0.3) + apex.gamma * Vec2(0.2, 1);
  EXPECT_LT((p - Vec2(-0.9, 0.4)).norm(), 1e-14);
}

}  // namespace
}  // namespace hermite
