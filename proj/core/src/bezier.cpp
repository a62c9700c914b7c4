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

#include "hermite/bezier.hpp"

#include <vector>

namespace hermite {

void require_point(const Bary& v) {
  if (std::abs(v.sum() - 1.0) > kBaryTolerance) {
    raise(ErrorKind::kInvalidInput, "barycentric coordinates must sum to 1");
  }
}

void require_direction(const Bary& v) {
  if (std::abs(v.sum()) > kBaryTolerance) {
    raise(ErrorKind::kInvalidDirection, "direction coordinates must sum to 0");
  }
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

double multinomial(int d, const MultiIndex& idx) {
  return binomial(d, idx.i) * binomial(d - idx.i, idx.j);
}

double bernstein(int degree, const MultiIndex& idx, const Bary& v) {
  if (idx.i < 0 || idx.j < 0 || idx.k < 0 || idx.order() != degree) {
    raise(ErrorKind::kInvalidIndex, "Bernstein index does not have order " + std::to_string(degree));
  }
  return multinomial(degree, idx) * std::pow(v.alpha, idx.i) * std::pow(v.beta, idx.j) *
         std::pow(v.gamma, idx.k);
}

double bernstein1(int degree, int m, double t) {
  if (m < 0 || m > degree) return 0.0;
  return binomial(degree, m) * std::pow(t, m) * std::pow(1.0 - t, degree - m);
}

std::vector<MultiIndex> multi_indices(int degree) {
  std::vector<MultiIndex> out;
  out.reserve(TriNet<double>::count(degree));
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; j <= degree - i; ++j) out.push_back({i, j, degree - i - j});
  }
  return out;
}

Vec3 eval_patch(const TriPatch& patch, const Bary& v) {
  require_point(v);
  return evaluate(patch, v);
}

TriPatch de_casteljau_points(const TriPatch& patch, const Bary& v, int steps) {
  if (steps < 0 || steps > patch.degree()) {
    raise(ErrorKind::kInvalidStep, "step count " + std::to_string(steps) + " outside [0, " +
                                       std::to_string(patch.degree()) + "]");
  }
  TriPatch cur = patch;
  for (int s = 0; s < steps; ++s) cur = de_casteljau_step(cur, v);
  return cur;
}

TriPatch elevate_patch(const TriPatch& patch, int target_degree) {
  return elevate(patch, target_degree);
}

Vec3 directional_derivative(const TriPatch& patch, const Bary& v, const Bary& u) {
  const int d = patch.degree();
  if (d == 0) return Vec3::Zero();
  std::vector<Bary> args(static_cast<std::size_t>(d), v);
  args[0] = u;
  return d * blossom(patch, std::span<const Bary>(args));
}

Vec3 second_derivative(const TriPatch& patch, const Bary& v, const Bary& u, const Bary& w) {
  const int d = patch.degree();
  if (d < 2) return Vec3::Zero();
  std::vector<Bary> args(static_cast<std::size_t>(d), v);
  args[0] = u;
  args[1] = w;
  return static_cast<double>(d) * (d - 1) * blossom(patch, std::span<const Bary>(args));
}

Vec3 patch_normal(const TriPatch& patch, const Bary& v) {
  const Vec3 du = directional_derivative(patch, v, Bary::direction(0, 1));
  const Vec3 dv = directional_derivative(patch, v, Bary::direction(0, 2));
  return du.cross(dv).normalized();
}

Vec3 VecField1D::eval(double t) const {
  // Univariate de Casteljau.
  std::vector<Vec3> work = coeffs;
  for (int r = degree(); r > 0; --r) {
    for (int m = 0; m < r; ++m) work[m] = (1.0 - t) * work[m] + t * work[m + 1];
  }
  return work.empty() ? Vec3::Zero() : work[0];
}

VecField1D elevate_field(const VecField1D& field, int times) {
  if (times < 0) raise(ErrorKind::kInvalidDegree, "negative elevation count");
  std::vector<Vec3> cur = field.coeffs;
  for (int s = 0; s < times; ++s) {
    const int n = static_cast<int>(cur.size()) - 1;
    std::vector<Vec3> next(cur.size() + 1);
    next[0] = cur[0];
    next[n + 1] = cur[n];
    for (int m = 1; m <= n; ++m) {
      const double a = static_cast<double>(m) / (n + 1);
      next[m] = a * cur[m - 1] + (1.0 - a) * cur[m];
    }
    cur = std::move(next);
  }
  return VecField1D(std::move(cur));
}

MultiIndex edge_row_index(int degree, const EdgeParam& edge, int row, int pos) {
  int c[3] = {0, 0, 0};
  c[edge.opposite()] = row;
  c[edge.to] = pos;
  c[edge.from] = degree - row - pos;
  return {c[0], c[1], c[2]};
}

VecField1D boundary_derivative(const TriPatch& patch, const EdgeParam& edge, const Bary& direction) {
  require_direction(direction);
  if (edge.from == edge.to || edge.from < 0 || edge.from > 2 || edge.to < 0 || edge.to > 2) {
    raise(ErrorKind::kInvalidInput, "edge must join two distinct corners");
  }
  const int d = patch.degree();
  if (d == 0) return VecField1D({Vec3::Zero()});
  const TriPatch step = de_casteljau_step(patch, direction);
  std::vector<Vec3> coeffs(static_cast<std::size_t>(d));
  for (int l = 0; l < d; ++l) coeffs[l] = d * step[edge_row_index(d - 1, edge, 0, l)];
  return VecField1D(std::move(coeffs));
}

}  // namespace hermite
