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

#include "hermite/scheme.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "hermite/hermite_rings.hpp"
#include "hermite/parallel.hpp"
#include "hermite/referential.hpp"
#include "hermite/smoothness.hpp"

namespace hermite {
namespace {

constexpr int kWireDegree = 5;
constexpr int kOcticDegree = 8;

template <class F>
auto with_context(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    raise(e.kind(), where + ": " + e.what());
  }
}

void require_data(const HermiteData& data, const Mesh& mesh) {
  if (static_cast<int>(data.vertices.size()) != mesh.vertex_count()) {
    raise(ErrorKind::kInvalidInput, "expected " + std::to_string(mesh.vertex_count()) + " vertex records, got " +
                                        std::to_string(data.vertices.size()));
  }
  if (data.midplanes.size() != mesh.edges().size()) {
    raise(ErrorKind::kInvalidInput, "expected " + std::to_string(mesh.edges().size()) + " edge records, got " +
                                        std::to_string(data.midplanes.size()));
  }
  for (std::size_t v = 0; v < data.vertices.size(); ++v) {
    with_context("vertex " + std::to_string(v), [&] {
      validate_datum(data.vertices[v], 1e-8);
      return 0;
    });
  }
}

VertexRings vertex_rings(const Spline& ref, const CellIndex& cell, const HermiteVertexDatum& datum,
                         const std::vector<Vec2>* domain_offsets) {
  VertexRings out;
  const Vec3& P = datum.P;
  out.targets1 = project_ring1(ring_points(ref, cell, 1), datum);
  std::vector<Vec2> offsets;
  if (domain_offsets != nullptr) {
    offsets = *domain_offsets;
    MinimizingRingProblem p1{out.targets1, P, 2,
                             ring_propagation_matrix(offsets, cell.closed, kWireDegree, 1)};
    out.ring1 = minimize_ring1(p1);
  } else {
    out.ring1 = out.targets1;
    offsets = local_offsets(out.ring1, datum);
  }
  CurvatureProjectionContext ctx{kWireDegree, out.ring1, datum, ring_points(ref, cell, 2), cell.closed};
  out.targets2 = project_ring2(ctx);
  MinimizingRingProblem p2{out.targets2, P, 3, ring_propagation_matrix(offsets, cell.closed, kWireDegree, 2)};
  out.ring2 = minimize_ring2(p2, out.ring1);

  TriPatch seed(kWireDegree);
  const int d = kWireDegree;
  seed(d, 0, 0) = P;
  seed(d - 1, 1, 0) = out.ring1[0];
  seed(d - 1, 0, 1) = out.ring1[1];
  seed(d - 2, 2, 0) = out.ring2[0];
  seed(d - 2, 1, 1) = out.ring2[1];
  seed(d - 2, 0, 2) = out.ring2[2];
  out.wrap_residual = cr_vertex_propagate(offsets, cell.closed, seed, 2).wrap_residual;
  return out;
}

// Fills D_2 of every vertex into the quintic wireframe.
std::vector<VertexRings> place_rings(Spline& wire, const Spline& ref, const HermiteData& data, bool use_domain) {
  const Mesh& mesh = wire.mesh;
  std::vector<VertexRings> rings(static_cast<std::size_t>(mesh.vertex_count()));
  std::vector<CellIndex> cells(rings.size());
  parallel_for(mesh.vertex_count(), [&](int v) {
    rings[v] = with_context("vertex " + std::to_string(v), [&] {
      cells[v] = build_cell(mesh, v);
      if (use_domain) {
        const auto offsets = cell_offsets(mesh, cells[v]);
        return vertex_rings(ref, cells[v], data.vertices[v], &offsets);
      }
      return vertex_rings(ref, cells[v], data.vertices[v], nullptr);
    });
  });
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    const Vec3 P = data.vertices[v].P;
    set_ring_points(wire, cells[v], 0, std::span<const Vec3>(&P, 1));
    set_ring_points(wire, cells[v], 1, rings[v].ring1);
    set_ring_points(wire, cells[v], 2, rings[v].ring2);
  }
  return rings;
}

// Moves the middle cross point of tau1 (local (2,1,2)) onto the plane where the
// cross-boundary derivative at the edge midpoint is orthogonal to the target
// normal. Returns the local tau1 net after the update.
TriPatch project_middle_point(Spline& wire, int edge, const Vec3& n_pi) {
  const EdgeView view = wire.mesh.edge_view(edge);
  TriPatch q1 = rotated(wire.patches[view.tri1], view.corner1);
  const EdgeParam along{0, 2};
  const Vec3 b_half = boundary_derivative(q1, along, Bary::direction(0, 2)).eval(0.5);
  const Vec3 n = midplane_normal(n_pi, b_half);
  const Vec3 e_half = boundary_derivative(q1, along, Bary::direction(0, 1)).eval(0.5);
  const double weight = kWireDegree * bernstein1(kWireDegree - 1, 2, 0.5);
  q1(2, 1, 2) -= (e_half.dot(n) / weight) * n;
  wire.patches[view.tri1][to_patch_index({2, 1, 2}, view.corner1)] = q1(2, 1, 2);
  return q1;
}

Eigen::MatrixXd elevation_matrix(int from, int to) {
  const auto count_from = static_cast<Eigen::Index>(TriNet<double>::count(from));
  const auto count_to = static_cast<Eigen::Index>(TriNet<double>::count(to));
  Eigen::MatrixXd m(count_to, count_from);
  for (Eigen::Index c = 0; c < count_from; ++c) {
    TriNet<double> unit(from, 0.0);
    unit.values()[c] = 1.0;
    const TriNet<double> up = elevate(unit, to);
    for (Eigen::Index r = 0; r < count_to; ++r) m(r, c) = up.values()[r];
  }
  return m;
}

}  // namespace

std::vector<Vec2> local_offsets(const std::vector<Vec3>& ring1, const HermiteVertexDatum& datum) {
  if (ring1.empty()) raise(ErrorKind::kInvalidInput, "empty ring");
  const Vec3 first = ring1.front() - datum.P;
  if (first.norm() == 0.0) raise(ErrorKind::kDegenerateDirection, "ring point coincides with P");
  const Vec3 e1 = (first - first.dot(datum.n) * datum.n).normalized();
  const Vec3 e2 = datum.n.cross(e1);
  std::vector<Vec2> out;
  for (const Vec3& c : ring1) out.emplace_back((c - datum.P).dot(e1), (c - datum.P).dot(e2));
  return out;
}

EdgeFrame edge_frame(const Spline& quintic, int edge) {
  const EdgeView view = quintic.mesh.edge_view(edge);
  if (view.tri2 < 0) raise(ErrorKind::kTopology, "boundary edge has no frame");
  const TriPatch q1 = rotated(quintic.patches[view.tri1], view.corner1);
  const TriPatch q2 = rotated(quintic.patches[view.tri2], view.corner2);
  EdgeFrame frame;
  frame.b = boundary_derivative(q1, EdgeParam{0, 2}, Bary::direction(0, 2));
  frame.e = boundary_derivative(q1, EdgeParam{0, 2}, Bary::direction(0, 1));
  frame.d = boundary_derivative(q2, EdgeParam{0, 1}, Bary::direction(0, 2));
  return frame;
}

TriPatch fill_interior(const TriPatch& octic) {
  if (octic.degree() != kOcticDegree) raise(ErrorKind::kInvalidDegree, "fill_interior expects an octic patch");
  static const Eigen::MatrixXd elev = elevation_matrix(kWireDegree, kOcticDegree);
  static const std::vector<int> boundary_rows = [] {
    std::vector<int> rows;
    const auto idx = multi_indices(kOcticDegree);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      if (std::min({idx[r].i, idx[r].j, idx[r].k}) <= 1) rows.push_back(static_cast<int>(r));
    }
    return rows;
  }();
  static const Eigen::MatrixXd fit = [] {
    Eigen::MatrixXd a(static_cast<Eigen::Index>(boundary_rows.size()), elev.cols());
    for (std::size_t r = 0; r < boundary_rows.size(); ++r) a.row(static_cast<Eigen::Index>(r)) = elev.row(boundary_rows[r]);
    // Least-squares pseudo-inverse of the restricted elevation operator.
    return Eigen::MatrixXd(a.completeOrthogonalDecomposition().pseudoInverse());
  }();

  Eigen::MatrixXd cb(static_cast<Eigen::Index>(boundary_rows.size()), 3);
  for (std::size_t r = 0; r < boundary_rows.size(); ++r) {
    cb.row(static_cast<Eigen::Index>(r)) = octic.values()[boundary_rows[r]].transpose();
  }
  const Eigen::MatrixXd q = fit * cb;
  const Eigen::MatrixXd full = elev * q;
  TriPatch out = octic;
  const auto idx = multi_indices(kOcticDegree);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    if (std::min({idx[r].i, idx[r].j, idx[r].k}) >= 2) {
      out.values()[r] = full.row(static_cast<Eigen::Index>(r)).transpose();
    }
  }
  return out;
}

SchemeResult build_c1_quintic(const HermiteData& data, const DomainTriangulation& tri) {
  return build_c1_quintic(data, Mesh::from_domain(tri));
}

SchemeResult build_c1_quintic(const HermiteData& data, const Mesh& mesh) {
  if (!mesh.has_domain()) raise(ErrorKind::kInvalidInput, "the C1 scheme needs a domain triangulation");
  require_data(data, mesh);
  SchemeResult result;
  result.referential = build_referential(data.points(), mesh, kWireDegree);
  result.spline = result.referential;
  result.rings = place_rings(result.spline, result.referential, data, true);

  Spline& s = result.spline;
  parallel_for(static_cast<int>(mesh.edges().size()), [&](int e) {
    with_context("edge " + std::to_string(e), [&] {
      const TriPatch q1 = project_middle_point(s, e, data.midplanes[e].n_pi);
      const EdgeView view = mesh.edge_view(e);
      if (view.tri2 >= 0) {
        const Bary v3 = apex_in_first(mesh, e);
        const Vec3 mate = v3.alpha * q1(3, 0, 2) + v3.beta * q1(2, 1, 2) + v3.gamma * q1(2, 0, 3);
        s.patches[view.tri2][to_patch_index({2, 2, 1}, view.corner2)] = mate;
      }
      return 0;
    });
  });
  return result;
}

SchemeResult build_g1_octic(const HermiteData& data, const Mesh& mesh) {
  require_data(data, mesh);
  SchemeResult result;
  result.referential = build_referential(data.points(), mesh, kWireDegree);
  Spline wire = result.referential;
  result.rings = place_rings(wire, result.referential, data, false);

  const int edge_count = static_cast<int>(mesh.edges().size());
  for (int e = 0; e < edge_count; ++e) {
    if (mesh.edge(e).boundary()) {
      with_context("edge " + std::to_string(e), [&] { return project_middle_point(wire, e, data.midplanes[e].n_pi); });
    }
  }

  Spline& octic = result.spline;
  octic.mesh = mesh;
  for (const TriPatch& p : wire.patches) octic.patches.push_back(elevate_patch(p, kOcticDegree));

  result.edges.assign(static_cast<std::size_t>(edge_count), std::nullopt);
  parallel_for(edge_count, [&](int e) {
    if (mesh.edge(e).boundary()) return;
    result.edges[e] = with_context("edge " + std::to_string(e), [&] {
      G1EdgeSolution sol;
      sol.edge = e;
      sol.frame = edge_frame(wire, e);
      check_orientation(sol.frame);
      sol.connection = default_connection(sol.frame);
      std::array<Vec3, 5> v;
      for (int l = 0; l < 5; ++l) v[l] = sol.connection.v.coeffs[l];
      sol.connection.v.coeffs[2] = midpoint_transversal(sol.frame, v, data.midplanes[e].n_pi);
      sol.cross = assemble_cross_derivatives(sol.frame, sol.connection);
      sol.fixed_row_residual = fixed_row_residual(sol.frame, sol.cross, sol.connection.r);

      const EdgeView view = mesh.edge_view(e);
      TriPatch& p1 = octic.patches[view.tri1];
      TriPatch& p2 = octic.patches[view.tri2];
      for (int l = 2; l <= 5; ++l) {
        const Vec3 base1 = p1[to_patch_index({8 - l, 0, l}, view.corner1)];
        p1[to_patch_index({7 - l, 1, l}, view.corner1)] = base1 + sol.cross.e_prime.coeffs[l] / kOcticDegree;
        const Vec3 base2 = p2[to_patch_index({8 - l, l, 0}, view.corner2)];
        p2[to_patch_index({7 - l, l, 1}, view.corner2)] = base2 + sol.cross.d_prime.coeffs[l] / kOcticDegree;
      }
      return sol;
    });
  });
  parallel_for(static_cast<int>(octic.patches.size()), [&](int t) { octic.patches[t] = fill_interior(octic.patches[t]); });
  return result;
}

}  // namespace hermite
