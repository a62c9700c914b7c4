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

#include "hermite/smoothness.hpp"

#include <cmath>

namespace hermite {

Bary barycentric(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
  Eigen::Matrix2d m;
  m << b - a, c - a;
  const double det = m.determinant();
  const double scale = (b - a).squaredNorm() + (c - a).squaredNorm();
  if (std::abs(det) <= 1e-14 * scale) raise(ErrorKind::kTopology, "degenerate domain triangle");
  const Vec2 x = m.inverse() * (p - a);
  return {1.0 - x.x() - x.y(), x.x(), x.y()};
}

Bary next_fan_vertex(const std::vector<Vec2>& offsets, int l) {
  const int n = static_cast<int>(offsets.size());
  const Vec2 zero = Vec2::Zero();
  return barycentric(offsets[(l + 2) % n], zero, offsets[l % n], offsets[(l + 1) % n]);
}

Eigen::MatrixXd ring_propagation_matrix(const std::vector<Vec2>& offsets, bool closed, int degree, int level) {
  const int n = static_cast<int>(offsets.size());
  const int tc = closed ? n : n - 1;
  const auto slots = ring_local_slots(tc, closed, degree, level);
  const int d = degree;
  TriNet<SeedSymbols> seed(d);
  auto unit = [](int s) { return SeedSymbols::Unit(s); };
  seed(d, 0, 0) = unit(0);
  if (level >= 1) {
    seed(d - 1, 1, 0) = unit(1);
    seed(d - 1, 0, 1) = unit(2);
  }
  if (level >= 2) {
    seed(d - 2, 2, 0) = unit(3);
    seed(d - 2, 1, 1) = unit(4);
    seed(d - 2, 0, 2) = unit(5);
  }
  const auto prop = cr_vertex_propagate(offsets, closed, seed, level);
  Eigen::MatrixXd map(static_cast<Eigen::Index>(slots.size()), 6);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const LocalAlias& a = slots[s].front();
    map.row(static_cast<Eigen::Index>(s)) = prop.nets[a.tri][a.index].transpose();
  }
  return map;
}

Bary apex_in_first(const Mesh& mesh, int edge) {
  const EdgeView view = mesh.edge_view(edge);
  if (view.tri2 < 0) raise(ErrorKind::kTopology, "boundary edge has no second triangle");
  const auto& p1 = mesh.corner_positions(view.tri1);
  const auto& p2 = mesh.corner_positions(view.tri2);
  const Vec2 a = p1[view.corner1];
  const Vec2 b = p1[(view.corner1 + 1) % 3];
  const Vec2 c = p1[(view.corner1 + 2) % 3];
  const Vec2 apex = a + (p2[(view.corner2 + 2) % 3] - p2[view.corner2]);
  return barycentric(apex, a, b, c);
}

ContinuityReport check_continuity(const Spline& spline, int edge, int r) {
  ContinuityReport report;
  report.edge = edge;
  const EdgeView view = spline.mesh.edge_view(edge);
  if (view.tri2 < 0) return report;
  const TriPatch t1 = rotated(spline.patches[view.tri1], view.corner1);
  const TriPatch t2 = rotated(spline.patches[view.tri2], view.corner2);
  for (const auto& [m, value] : cr_edge_propagate(t1, apex_in_first(spline.mesh, edge), r)) {
    report.residual = std::max(report.residual, (t2[m] - value).norm());
  }
  return report;
}

}  // namespace hermite
