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

#include "hermite/referential.hpp"

#include <cmath>
#include <numbers>

namespace hermite {
namespace {

int opposite_vertex(const Mesh& mesh, const EdgeSide& side) {
  return mesh.triangle(side.tri)[(side.corner + 2) % 3];
}

void add(Stencil& s, int id, double w) { s.terms.emplace_back(id, w); }

// Adds w times the vertex across edge (x, y) from `inner`; a missing wing is
// replaced by the reflection x + y - inner.
void add_wing(Stencil& s, const Mesh& mesh, int x, int y, int inner, double w) {
  const int e = mesh.find_edge(x, y);
  if (e < 0) raise(ErrorKind::kTopology, "dangling edge in Butterfly stencil");
  const MeshEdge& edge = mesh.edge(e);
  if (!edge.boundary()) {
    for (const EdgeSide& side : edge.sides) {
      const int o = opposite_vertex(mesh, side);
      if (o != inner) {
        add(s, o, w);
        return;
      }
    }
  }
  add(s, x, w);
  add(s, y, w);
  add(s, inner, -w);
}

bool extraordinary(const CellIndex& cell) { return cell.closed && cell.n() != 6; }

void add_extraordinary(Stencil& s, const CellIndex& cell, int other, double scale) {
  const int k = cell.n();
  const auto weights = extraordinary_weights(k);
  int start = -1;
  for (int j = 0; j < k; ++j) {
    if (cell.fan[j] == other) start = j;
  }
  if (start < 0) raise(ErrorKind::kTopology, "edge endpoint missing from fan");
  add(s, cell.center, 0.75 * scale);
  for (int j = 0; j < k; ++j) add(s, cell.fan[(start + j) % k], weights[j] * scale);
}

// A boundary vertex with fewer than three triangles ends the boundary curve;
// the curve does not continue smoothly through it.
bool corner_vertex(const CellIndex& cell) { return !cell.closed && cell.triangle_count() < 3; }

int boundary_neighbor(const CellIndex& cell, int other) {
  const int front = cell.fan.front();
  const int back = cell.fan.back();
  return front == other ? back : front;
}

}  // namespace

double Stencil::weight_sum() const {
  double sum = 0.0;
  for (const auto& [id, w] : terms) sum += w;
  return sum;
}

Vec3 Stencil::apply(const std::vector<Vec3>& points) const {
  Vec3 acc = Vec3::Zero();
  for (const auto& [id, w] : terms) acc += w * points[id];
  return acc;
}

std::vector<double> extraordinary_weights(int valence) {
  const int k = valence;
  if (k < 3) raise(ErrorKind::kTopology, "interior vertex of valence below 3");
  if (k == 3) return {5.0 / 12.0, -1.0 / 12.0, -1.0 / 12.0};
  if (k == 4) return {3.0 / 8.0, 0.0, -1.0 / 8.0, 0.0};
  std::vector<double> s(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const double t = 2.0 * std::numbers::pi * j / k;
    s[j] = (0.25 + std::cos(t) + 0.5 * std::cos(2.0 * t)) / k;
  }
  return s;
}

Stencil butterfly_stencil(const Mesh& mesh, int edge) {
  const MeshEdge& e = mesh.edge(edge);
  const int a = e.a;
  const int b = e.b;
  Stencil s;
  const CellIndex ca = build_cell(mesh, a);
  const CellIndex cb = build_cell(mesh, b);
  if (e.boundary()) {
    if (ca.closed || cb.closed) raise(ErrorKind::kTopology, "boundary edge with interior endpoint");
    const bool end_a = corner_vertex(ca);
    const bool end_b = corner_vertex(cb);
    if (end_a && end_b) {
      add(s, a, 0.5);
      add(s, b, 0.5);
    } else if (end_a || end_b) {
      // Curve end: the 4-point rule with the missing point extrapolated by
      // the cubic through the end point and the three points behind it.
      const int end = end_a ? a : b;
      const int next = end_a ? b : a;
      const int p2 = boundary_neighbor(end_a ? cb : ca, end);
      const CellIndex c2 = build_cell(mesh, p2);
      if (corner_vertex(c2)) {
        add(s, end, 3.0 / 8.0);
        add(s, next, 3.0 / 4.0);
        add(s, p2, -1.0 / 8.0);
      } else {
        add(s, end, 5.0 / 16.0);
        add(s, next, 15.0 / 16.0);
        add(s, p2, -5.0 / 16.0);
        add(s, boundary_neighbor(c2, next), 1.0 / 16.0);
      }
    } else {
      add(s, a, 9.0 / 16.0);
      add(s, b, 9.0 / 16.0);
      add(s, boundary_neighbor(ca, b), -1.0 / 16.0);
      add(s, boundary_neighbor(cb, a), -1.0 / 16.0);
    }
    return s;
  }
  const bool xa = extraordinary(ca);
  const bool xb = extraordinary(cb);
  if (xa || xb) {
    const double scale = (xa && xb) ? 0.5 : 1.0;
    if (xa) add_extraordinary(s, ca, b, scale);
    if (xb) add_extraordinary(s, cb, a, scale);
    return s;
  }
  const int c = opposite_vertex(mesh, e.sides[0]);
  const int d = opposite_vertex(mesh, e.sides[1]);
  add(s, a, 0.5);
  add(s, b, 0.5);
  add(s, c, 0.125);
  add(s, d, 0.125);
  add_wing(s, mesh, a, c, b, -1.0 / 16.0);
  add_wing(s, mesh, b, c, a, -1.0 / 16.0);
  add_wing(s, mesh, a, d, b, -1.0 / 16.0);
  add_wing(s, mesh, b, d, a, -1.0 / 16.0);
  return s;
}

std::vector<Vec3> butterfly_step(const std::vector<Vec3>& points, const Mesh& mesh) {
  if (static_cast<int>(points.size()) != mesh.vertex_count()) {
    raise(ErrorKind::kInvalidInput, "one data point per vertex required");
  }
  std::vector<Vec3> mids(mesh.edges().size());
  for (std::size_t e = 0; e < mids.size(); ++e) {
    mids[e] = butterfly_stencil(mesh, static_cast<int>(e)).apply(points);
  }
  return mids;
}

Spline build_referential(const std::vector<Vec3>& points, const Mesh& mesh, int target_degree) {
  if (target_degree < 2) raise(ErrorKind::kInvalidDegree, "referential degree must be at least 2");
  const auto mids = butterfly_step(points, mesh);
  Spline spline;
  spline.mesh = mesh;
  for (int t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tr = mesh.triangle(t);
    TriPatch q(2);
    q(2, 0, 0) = points[tr[0]];
    q(0, 2, 0) = points[tr[1]];
    q(0, 0, 2) = points[tr[2]];
    auto edge_point = [&](int corner) {
      const Vec3& m = mids[mesh.edge_of(t, corner)];
      return Vec3(2.0 * m - 0.5 * (points[tr[corner]] + points[tr[(corner + 1) % 3]]));
    };
    q(1, 1, 0) = edge_point(0);
    q(0, 1, 1) = edge_point(1);
    q(1, 0, 1) = edge_point(2);
    spline.patches.push_back(elevate_patch(q, target_degree));
  }
  return spline;
}

}  // namespace hermite
