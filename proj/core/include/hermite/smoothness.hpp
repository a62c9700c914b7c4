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

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hermite/bezier.hpp"
#include "hermite/mesh.hpp"

namespace hermite {

// Barycentric coordinates of p with respect to the triangle (a, b, c).
Bary barycentric(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c);

// Net re-indexed so that corner `corner` of the stored triangle comes first.
template <class T>
TriNet<T> rotated(const TriNet<T>& net, int corner) {
  TriNet<T> out(net.degree(), net.values()[0]);
  out.for_each_index([&](const MultiIndex& m) { out[m] = net[to_patch_index(m, corner)]; });
  return out;
}

// Inverse of rotated(): writes a local net back into triangle order.
template <class T>
void store_rotated(TriNet<T>& net, int corner, const TriNet<T>& local) {
  local.for_each_index([&](const MultiIndex& m) { net[to_patch_index(m, corner)] = local[m]; });
}

// Control points of tau2 = (v0, v2, v3) fixed by C^r continuity with
// p1 on tau1 = (v0, v1, v2): c2_{ijk} = (c1_{i0j})^{(k)}(v3), k <= r.
template <class T>
std::vector<std::pair<MultiIndex, T>> cr_edge_propagate(const TriNet<T>& p1, const Bary& v3, int r) {
  const int d = p1.degree();
  if (r < 0 || r > d) raise(ErrorKind::kInvalidOrder, "continuity order out of range");
  std::vector<std::pair<MultiIndex, T>> out;
  TriNet<T> level = p1;
  for (int k = 0; k <= r; ++k) {
    if (k > 0) level = de_casteljau_step(level, v3);
    for (int i = d - k; i >= 0; --i) {
      const int j = d - k - i;
      out.emplace_back(MultiIndex{i, j, k}, level[MultiIndex{i, 0, j}]);
    }
  }
  return out;
}

template <class T>
struct VertexPropagation {
  std::vector<TriNet<T>> nets;  // local nets of tau_1..tau_T, only D_r meaningful
  double wrap_residual = 0.0;   // closed cells: defect of the propagated seed
};

namespace detail {
template <class T>
double defect(const T& a, const T& b) {
  if constexpr (std::is_arithmetic_v<T>) {
    return std::abs(a - b);
  } else {
    return (a - b).norm();
  }
}
}  // namespace detail

// Barycentric coordinates of v_{l+2} with respect to tau_l = (0, o_l, o_{l+1}).
Bary next_fan_vertex(const std::vector<Vec2>& offsets, int l);

// Propagates the D_r seed of tau_1 around the cell (offsets o_1..o_n of the
// fan vertices relative to the center).
template <class T>
VertexPropagation<T> cr_vertex_propagate(const std::vector<Vec2>& offsets, bool closed, const TriNet<T>& seed,
                                         int r) {
  const int d = seed.degree();
  if (r < 0 || r > d) raise(ErrorKind::kInvalidOrder, "continuity order out of range");
  const int n = static_cast<int>(offsets.size());
  const int tc = closed ? n : n - 1;
  if (tc < 1 || (closed && n < 3)) raise(ErrorKind::kTopology, "cell too small");
  VertexPropagation<T> out;
  out.nets.push_back(seed);
  auto step = [&](const TriNet<T>& from, int l) {
    TriNet<T> next(d, from.values()[0]);
    const Bary v = next_fan_vertex(offsets, l);
    for (const auto& [m, value] : cr_edge_propagate(from, v, r)) {
      if (m.j + m.k <= r) next[m] = value;
    }
    return next;
  };
  for (int l = 0; l + 1 < tc; ++l) out.nets.push_back(step(out.nets.back(), l));
  if (closed) {
    const TriNet<T> wrapped = step(out.nets.back(), tc - 1);
    seed.for_each_index([&](const MultiIndex& m) {
      if (m.j + m.k <= r) out.wrap_residual = std::max(out.wrap_residual, detail::defect(wrapped[m], seed[m]));
    });
  }
  return out;
}

// Symbols of the D_2 seed: P, c_1, c_2 (ring 1) and c_{n+1}, c_{n+2}, c_{n+3}.
using SeedSymbols = Eigen::Matrix<double, 6, 1>;

// Linear map from the six seed symbols to the ring points of `level` in ring
// order; row l holds the weights of ring point l.
Eigen::MatrixXd ring_propagation_matrix(const std::vector<Vec2>& offsets, bool closed, int degree, int level);

struct ContinuityReport {
  double residual = 0.0;  // max Euclidean defect over the C^r identities
  int edge = -1;
};

// Thm-1 defect across an interior edge of a spline with domain positions.
ContinuityReport check_continuity(const Spline& spline, int edge, int r);

// Barycentric coordinates of v3 (apex of tau2) with respect to tau1 for an
// interior edge, from the domain positions.
Bary apex_in_first(const Mesh& mesh, int edge);

}  // namespace hermite
