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

// Domain triangulations, optional vertex identification for closed
// topologies, domain cells (vertex fans) and the disk/ring index sets of a
// spline.

#pragma once

#include <array>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hermite/bezier.hpp"

namespace hermite {

// Input triangulation. Triangles are counterclockwise vertex-id triples.
// `vertices` holds 2D domain positions and may be empty for abstract meshes
// (the G1 scheme needs only connectivity). Each identification (keep, merge)
// declares vertex `merge` to be the same surface vertex as `keep`; the
// positions of the original ids are kept per triangle, which is what makes a
// periodic domain unfold consistently around every vertex.
struct DomainTriangulation {
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::pair<int, int>> identifications;
};

// One side of an edge: triangle `tri` traverses the edge counterclockwise
// from corner `corner` to corner `corner + 1 (mod 3)`.
struct EdgeSide {
  int tri = -1;
  int corner = -1;
};

struct MeshEdge {
  int a = -1;  // smaller canonical vertex id
  int b = -1;
  std::array<EdgeSide, 2> sides;

  bool boundary() const { return sides[1].tri < 0; }
};

// Orientation used by the edge smoothness conditions:
// tri1 = (v0, v1, v2) and tri2 = (v0, v2, v3), read cyclically from the given
// corners; the shared edge is (v0, v2).
struct EdgeView {
  int tri1 = -1;
  int corner1 = -1;
  int tri2 = -1;
  int corner2 = -1;
};

class Mesh {
 public:
  Mesh() = default;

  static Mesh from_domain(const DomainTriangulation& tri);
  static Mesh from_triangles(int vertex_count, std::vector<std::array<int, 3>> triangles);
  // Triangles with their own (unfolded) parameter positions per corner.
  static Mesh from_triangles(int vertex_count, std::vector<std::array<int, 3>> triangles,
                             std::vector<std::array<Vec2, 3>> corner_positions);

  int vertex_count() const { return vertex_count_; }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::array<int, 3>& triangle(int t) const { return triangles_[t]; }
  const std::vector<MeshEdge>& edges() const { return edges_; }
  const MeshEdge& edge(int e) const { return edges_[e]; }

  bool has_domain() const { return !corner_positions_.empty(); }
  const std::array<Vec2, 3>& corner_positions(int t) const { return corner_positions_[t]; }

  std::span<const int> vertex_triangles(int v) const { return vertex_triangles_[v]; }

  // Edge id for the unordered canonical pair, or -1.
  int find_edge(int a, int b) const;
  // Edge running from corner c to corner c+1 of triangle t.
  int edge_of(int t, int corner) const { return triangle_edges_[t][corner]; }

  EdgeView edge_view(int e) const;

  // Original (pre-identification) vertex ids of each triangle.
  const std::vector<std::array<int, 3>>& original_triangles() const { return original_triangles_; }
  int canonical(int original_id) const { return canonical_[original_id]; }

 private:
  void build_adjacency();

  int vertex_count_ = 0;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::array<int, 3>> original_triangles_;
  std::vector<std::array<Vec2, 3>> corner_positions_;
  std::vector<int> canonical_;
  std::vector<MeshEdge> edges_;
  std::vector<std::array<int, 3>> triangle_edges_;
  std::vector<std::vector<int>> vertex_triangles_;
  std::map<std::pair<int, int>, int> edge_lookup_;
};

// Fan around a vertex: triangles tau_l = (center, fan[l-1], fan[l]) for
// l = 1..triangle_count(), counterclockwise. For closed cells fan[n] == fan[0].
struct CellIndex {
  int center = -1;
  std::vector<int> fan;        // v_1..v_n
  std::vector<int> triangles;  // tau_1..tau_T
  std::vector<int> corners;    // corner of `center` inside each triangle
  bool closed = false;

  int n() const { return static_cast<int>(fan.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }
};

CellIndex build_cell(const Mesh& mesh, int v);

// Domain vectors v_l - v_0, l = 1..n, read from the triangles' unfolded corner
// positions. Requires a mesh with a domain.
std::vector<Vec2> cell_offsets(const Mesh& mesh, const CellIndex& cell);

// Cell-local multi-index (center, v_l, v_{l+1}) to the patch's own ordering.
MultiIndex to_patch_index(const MultiIndex& local, int center_corner);

struct Spline {
  Mesh mesh;
  std::vector<TriPatch> patches;  // one per triangle, corners in triangle order

  int degree() const { return patches.empty() ? 0 : patches.front().degree(); }
};

// Every (triangle, multi-index) that stores one ring position; points shared
// by two patches of the fan have two aliases.
struct RingSlot {
  std::vector<std::pair<int, MultiIndex>> aliases;
};

// Slots of R_level(v) ordered as c_1..c_n (level 1) or c_{n+1}..c_{n+n'}
// (level 2; n' = 2n for interior and 2n-1 for boundary vertices).
// Level 0 yields the single slot of P.
// Position of a ring point inside the cell: fan triangle and local multi-index
// (center corner first).
struct LocalAlias {
  int tri = 0;
  MultiIndex index;
};

// Ring slots in ring order (c_1..c_n for level 1, c_{n+1}..c_{n+n'} for level 2),
// each listing every local alias of the shared control point.
std::vector<std::vector<LocalAlias>> ring_local_slots(int triangle_count, bool closed, int degree, int level);

std::vector<RingSlot> ring_slots(const CellIndex& cell, int degree, int level);

std::vector<Vec3> ring_points(const Spline& spline, const CellIndex& cell, int level);
std::vector<Vec3> ring_points(const Spline& spline, int v, int level);
void set_ring_points(Spline& spline, const CellIndex& cell, int level, std::span<const Vec3> points);

// Uniform triangulations.
DomainTriangulation grid_triangulation(const Vec2& lo, const Vec2& hi, int nx, int ny);
// nx * ny distinct vertices; the last column and row are identified with the
// first (torus topology). Every vertex has six triangles. The grid starts at
// `origin`.
DomainTriangulation periodic_grid_triangulation(const Vec2& period, int nx, int ny,
                                                const Vec2& origin = Vec2::Zero());

// Closed abstract mesh with 3D vertex positions.
struct SurfaceMesh {
  std::vector<Vec3> positions;
  std::vector<std::array<int, 3>> triangles;
};

SurfaceMesh icosahedron();
// Splits every triangle into four through edge midpoints (positions averaged).
SurfaceMesh refine_midpoint(const SurfaceMesh& mesh);

}  // namespace hermite
