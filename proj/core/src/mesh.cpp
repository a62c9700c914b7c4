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

#include "hermite/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace hermite {
namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace

Mesh Mesh::from_domain(const DomainTriangulation& tri) {
  const int original_count = [&] {
    int m = static_cast<int>(tri.vertices.size());
    for (const auto& t : tri.triangles) {
      for (int id : t) m = std::max(m, id + 1);
    }
    return m;
  }();
  const bool with_domain = !tri.vertices.empty();

  std::vector<int> parent(static_cast<std::size_t>(original_count));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [keep, merge] : tri.identifications) {
    if (keep < 0 || merge < 0 || keep >= original_count || merge >= original_count) {
      raise(ErrorKind::kTopology, "identification refers to unknown vertex");
    }
    const int a = find_root(parent, keep);
    const int b = find_root(parent, merge);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  Mesh mesh;
  mesh.canonical_.assign(static_cast<std::size_t>(original_count), -1);
  std::vector<int> compact(static_cast<std::size_t>(original_count), -1);
  int next = 0;
  for (int id = 0; id < original_count; ++id) {
    const int root = find_root(parent, id);
    if (compact[root] < 0) compact[root] = next++;
    mesh.canonical_[id] = compact[root];
  }
  mesh.vertex_count_ = next;

  for (std::size_t t = 0; t < tri.triangles.size(); ++t) {
    const auto& orig = tri.triangles[t];
    std::array<int, 3> ids{};
    for (int c = 0; c < 3; ++c) {
      if (orig[c] < 0 || orig[c] >= original_count) {
        raise(ErrorKind::kTopology, "triangle " + std::to_string(t) + " refers to unknown vertex");
      }
      ids[c] = mesh.canonical_[orig[c]];
    }
    if (ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2]) {
      raise(ErrorKind::kTopology, "triangle " + std::to_string(t) + " collapses after identification");
    }
    if (with_domain) {
      if (std::max({orig[0], orig[1], orig[2]}) >= static_cast<int>(tri.vertices.size())) {
        raise(ErrorKind::kTopology, "triangle " + std::to_string(t) + " has a vertex without position");
      }
      std::array<Vec2, 3> pos{tri.vertices[orig[0]], tri.vertices[orig[1]], tri.vertices[orig[2]]};
      if (cross2(pos[1] - pos[0], pos[2] - pos[0]) <= 0.0) {
        raise(ErrorKind::kTopology, "triangle " + std::to_string(t) + " is degenerate or clockwise");
      }
      mesh.corner_positions_.push_back(pos);
    }
    mesh.triangles_.push_back(ids);
    mesh.original_triangles_.push_back(orig);
  }
  mesh.build_adjacency();
  return mesh;
}

Mesh Mesh::from_triangles(int vertex_count, std::vector<std::array<int, 3>> triangles) {
  DomainTriangulation tri;
  tri.triangles = std::move(triangles);
  Mesh mesh = from_domain(tri);
  if (mesh.vertex_count_ < vertex_count) {
    // Keep trailing isolated vertices addressable.
    for (int id = mesh.vertex_count_; id < vertex_count; ++id) mesh.canonical_.push_back(id);
    mesh.vertex_count_ = vertex_count;
    mesh.vertex_triangles_.resize(static_cast<std::size_t>(vertex_count));
  }
  return mesh;
}

Mesh Mesh::from_triangles(int vertex_count, std::vector<std::array<int, 3>> triangles,
                          std::vector<std::array<Vec2, 3>> corner_positions) {
  if (corner_positions.size() != triangles.size()) {
    raise(ErrorKind::kInvalidInput, "one set of corner positions per triangle required");
  }
  for (std::size_t t = 0; t < corner_positions.size(); ++t) {
    const auto& pos = corner_positions[t];
    if (cross2(pos[1] - pos[0], pos[2] - pos[0]) <= 0.0) {
      raise(ErrorKind::kTopology, "triangle " + std::to_string(t) + " is degenerate or clockwise");
    }
  }
  Mesh mesh = from_triangles(vertex_count, std::move(triangles));
  mesh.corner_positions_ = std::move(corner_positions);
  return mesh;
}

void Mesh::build_adjacency() {
  vertex_triangles_.assign(static_cast<std::size_t>(vertex_count_), {});
  triangle_edges_.assign(triangles_.size(), {-1, -1, -1});
  edges_.clear();
  edge_lookup_.clear();
  for (int t = 0; t < triangle_count(); ++t) {
    const auto& tr = triangles_[t];
    for (int c = 0; c < 3; ++c) {
      vertex_triangles_[tr[c]].push_back(t);
      const int x = tr[c];
      const int y = tr[(c + 1) % 3];
      const auto key = std::minmax(x, y);
      auto it = edge_lookup_.find(key);
      if (it == edge_lookup_.end()) {
        MeshEdge e;
        e.a = key.first;
        e.b = key.second;
        e.sides[0] = {t, c};
        edge_lookup_.emplace(key, static_cast<int>(edges_.size()));
        triangle_edges_[t][c] = static_cast<int>(edges_.size());
        edges_.push_back(e);
        continue;
      }
      MeshEdge& e = edges_[it->second];
      if (!e.boundary()) {
        raise(ErrorKind::kTopology, "edge (" + std::to_string(x) + "," + std::to_string(y) +
                                        ") is shared by more than two triangles");
      }
      const auto& other = triangles_[e.sides[0].tri];
      if (other[e.sides[0].corner] != y) {
        raise(ErrorKind::kTopology, "inconsistent orientation across edge (" + std::to_string(x) +
                                        "," + std::to_string(y) + ")");
      }
      e.sides[1] = {t, c};
      triangle_edges_[t][c] = it->second;
    }
  }
}

int Mesh::find_edge(int a, int b) const {
  auto it = edge_lookup_.find(std::minmax(a, b));
  return it == edge_lookup_.end() ? -1 : it->second;
}

EdgeView Mesh::edge_view(int e) const {
  const MeshEdge& edge = edges_[e];
  EdgeView view;
  view.tri1 = edge.sides[0].tri;
  view.corner1 = (edge.sides[0].corner + 1) % 3;
  view.tri2 = edge.sides[1].tri;
  view.corner2 = edge.sides[1].corner;
  return view;
}

CellIndex build_cell(const Mesh& mesh, int v) {
  if (v < 0 || v >= mesh.vertex_count()) raise(ErrorKind::kTopology, "unknown vertex " + std::to_string(v));
  struct Wedge {
    int tri;
    int corner;
    int a;
    int b;
  };
  std::vector<Wedge> wedges;
  for (int t : mesh.vertex_triangles(v)) {
    const auto& tr = mesh.triangle(t);
    for (int c = 0; c < 3; ++c) {
      if (tr[c] == v) wedges.push_back({t, c, tr[(c + 1) % 3], tr[(c + 2) % 3]});
    }
  }
  const std::string where = "vertex " + std::to_string(v);
  if (wedges.empty()) raise(ErrorKind::kTopology, where + " has no triangles");

  std::map<int, int> by_first;
  std::map<int, int> by_second;
  for (int w = 0; w < static_cast<int>(wedges.size()); ++w) {
    if (!by_first.emplace(wedges[w].a, w).second || !by_second.emplace(wedges[w].b, w).second) {
      raise(ErrorKind::kTopology, where + " is non-manifold");
    }
  }
  int start = -1;
  for (int w = 0; w < static_cast<int>(wedges.size()); ++w) {
    if (!by_second.contains(wedges[w].a)) {
      if (start >= 0) raise(ErrorKind::kTopology, where + " is non-manifold (several boundary fans)");
      start = w;
    }
  }
  CellIndex cell;
  cell.center = v;
  cell.closed = start < 0;
  if (cell.closed) {
    // Deterministic start: the wedge whose first fan vertex has the smallest id.
    start = by_first.begin()->second;
  }
  int cur = start;
  for (std::size_t step = 0; step < wedges.size(); ++step) {
    const Wedge& w = wedges[cur];
    cell.triangles.push_back(w.tri);
    cell.corners.push_back(w.corner);
    cell.fan.push_back(w.a);
    auto it = by_first.find(w.b);
    if (it == by_first.end()) {
      if (cell.closed) raise(ErrorKind::kTopology, where + " has a broken fan");
      cell.fan.push_back(w.b);
      break;
    }
    cur = it->second;
    if (cur == start) break;
  }
  if (cell.triangle_count() != static_cast<int>(wedges.size())) {
    raise(ErrorKind::kTopology, where + " is non-manifold (disconnected fan)");
  }
  return cell;
}

std::vector<Vec2> cell_offsets(const Mesh& mesh, const CellIndex& cell) {
  if (!mesh.has_domain()) raise(ErrorKind::kInvalidInput, "mesh has no domain positions");
  std::vector<Vec2> off(static_cast<std::size_t>(cell.n()));
  const int tcount = cell.triangle_count();
  for (int l = 0; l < tcount; ++l) {
    const auto& pos = mesh.corner_positions(cell.triangles[l]);
    const int c = cell.corners[l];
    const Vec2 first = pos[(c + 1) % 3] - pos[c];
    const Vec2 second = pos[(c + 2) % 3] - pos[c];
    if (l == 0) {
      off[0] = first;
    } else if ((off[l] - first).norm() > 1e-9 * (1.0 + first.norm())) {
      raise(ErrorKind::kTopology, "vertex " + std::to_string(cell.center) +
                                      ": identification is not translation-consistent");
    }
    const int nxt = cell.closed ? (l + 1) % cell.n() : l + 1;
    if (cell.closed && nxt == 0) {
      if ((off[0] - second).norm() > 1e-9 * (1.0 + second.norm())) {
        raise(ErrorKind::kTopology, "vertex " + std::to_string(cell.center) +
                                        ": identification is not translation-consistent");
      }
    } else {
      off[nxt] = second;
    }
  }
  return off;
}

MultiIndex to_patch_index(const MultiIndex& local, int center_corner) {
  int m[3];
  m[center_corner] = local.i;
  m[(center_corner + 1) % 3] = local.j;
  m[(center_corner + 2) % 3] = local.k;
  return {m[0], m[1], m[2]};
}

std::vector<std::vector<LocalAlias>> ring_local_slots(int triangle_count, bool closed, int degree, int level) {
  if (level < 0 || level > 2) raise(ErrorKind::kUnsupportedLevel, "ring level must be 0, 1 or 2");
  if (degree < 2 * level) raise(ErrorKind::kUnsupportedLevel, "degree too low for ring level");
  if (triangle_count < 1) raise(ErrorKind::kTopology, "cell without triangles");
  const int d = degree;
  const int tc = triangle_count;
  const int n = closed ? tc : tc + 1;
  // Triangle preceding tau_l (0-based), or -1.
  auto prev = [&](int l) { return l > 0 ? l - 1 : (closed ? tc - 1 : -1); };

  std::vector<std::vector<LocalAlias>> slots;
  if (level == 0) {
    std::vector<LocalAlias> s;
    for (int l = 0; l < tc; ++l) s.push_back({l, {d, 0, 0}});
    slots.push_back(std::move(s));
    return slots;
  }
  if (level == 1) {
    for (int l = 0; l < n; ++l) {
      std::vector<LocalAlias> s;
      if (l < tc) s.push_back({l, {d - 1, 1, 0}});
      if (const int p = prev(l); p >= 0) s.push_back({p, {d - 1, 0, 1}});
      slots.push_back(std::move(s));
    }
    return slots;
  }
  for (int l = 0; l < tc; ++l) {
    std::vector<LocalAlias> edge_slot{{l, {d - 2, 2, 0}}};
    if (const int p = prev(l); p >= 0) edge_slot.push_back({p, {d - 2, 0, 2}});
    slots.push_back(std::move(edge_slot));
    slots.push_back({{l, {d - 2, 1, 1}}});
  }
  if (!closed) slots.push_back({{tc - 1, {d - 2, 0, 2}}});
  return slots;
}

std::vector<RingSlot> ring_slots(const CellIndex& cell, int degree, int level) {
  std::vector<RingSlot> out;
  for (const auto& local : ring_local_slots(cell.triangle_count(), cell.closed, degree, level)) {
    RingSlot s;
    for (const auto& a : local) {
      s.aliases.emplace_back(cell.triangles[a.tri], to_patch_index(a.index, cell.corners[a.tri]));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Vec3> ring_points(const Spline& spline, const CellIndex& cell, int level) {
  std::vector<Vec3> out;
  for (const RingSlot& s : ring_slots(cell, spline.degree(), level)) {
    const auto& [t, m] = s.aliases.front();
    out.push_back(spline.patches[t][m]);
  }
  return out;
}

std::vector<Vec3> ring_points(const Spline& spline, int v, int level) {
  return ring_points(spline, build_cell(spline.mesh, v), level);
}

void set_ring_points(Spline& spline, const CellIndex& cell, int level, std::span<const Vec3> points) {
  const auto slots = ring_slots(cell, spline.degree(), level);
  if (slots.size() != points.size()) raise(ErrorKind::kInvalidInput, "ring size mismatch");
  for (std::size_t s = 0; s < slots.size(); ++s) {
    for (const auto& [t, m] : slots[s].aliases) spline.patches[t][m] = points[s];
  }
}

DomainTriangulation grid_triangulation(const Vec2& lo, const Vec2& hi, int nx, int ny) {
  if (nx < 1 || ny < 1) raise(ErrorKind::kInvalidInput, "grid needs at least one cell per side");
  DomainTriangulation tri;
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      tri.vertices.emplace_back(lo.x() + (hi.x() - lo.x()) * i / nx, lo.y() + (hi.y() - lo.y()) * j / ny);
    }
  }
  auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      tri.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tri.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return tri;
}

DomainTriangulation periodic_grid_triangulation(const Vec2& period, int nx, int ny, const Vec2& origin) {
  if (nx < 3 || ny < 3) raise(ErrorKind::kInvalidInput, "periodic grid needs at least 3x3 cells");
  DomainTriangulation tri = grid_triangulation(origin, origin + period, nx, ny);
  auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j <= ny; ++j) tri.identifications.emplace_back(id(0, j), id(nx, j));
  for (int i = 0; i <= nx; ++i) tri.identifications.emplace_back(id(i, 0), id(i, ny));
  return tri;
}

SurfaceMesh icosahedron() {
  const double p = (1.0 + std::sqrt(5.0)) / 2.0;
  SurfaceMesh m;
  m.positions = {{-1, p, 0}, {1, p, 0}, {-1, -p, 0}, {1, -p, 0}, {0, -1, p}, {0, 1, p},
                 {0, -1, -p}, {0, 1, -p}, {p, 0, -1}, {p, 0, 1}, {-p, 0, -1}, {-p, 0, 1}};
  for (Vec3& x : m.positions) x.normalize();
  m.triangles = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
                 {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
                 {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  return m;
}

SurfaceMesh refine_midpoint(const SurfaceMesh& mesh) {
  SurfaceMesh out;
  out.positions = mesh.positions;
  std::map<std::pair<int, int>, int> mid;
  auto midpoint = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto it = mid.find(key);
    if (it != mid.end()) return it->second;
    const int id = static_cast<int>(out.positions.size());
    out.positions.push_back(0.5 * (mesh.positions[a] + mesh.positions[b]));
    mid.emplace(key, id);
    return id;
  };
  for (const auto& t : mesh.triangles) {
    const int ab = midpoint(t[0], t[1]);
    const int bc = midpoint(t[1], t[2]);
    const int ca = midpoint(t[2], t[0]);
    out.triangles.push_back({t[0], ab, ca});
    out.triangles.push_back({ab, t[1], bc});
    out.triangles.push_back({ca, bc, t[2]});
    out.triangles.push_back({ab, bc, ca});
  }
  return out;
}

}  // namespace hermite
