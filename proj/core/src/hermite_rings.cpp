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

#include "hermite/hermite_rings.hpp"

#include <cmath>

namespace hermite {
namespace {

std::vector<double> ring_weights(const MinimizingRingProblem& problem) {
  std::vector<double> w;
  for (const Vec3& c : problem.projected) {
    const double dist = (c - problem.base).squaredNorm();
    if (dist == 0.0) raise(ErrorKind::kDegenerateProjection, "projected ring point coincides with P");
    w.push_back(1.0 / dist);
  }
  return w;
}

// Weighted least squares over `free_cols` of the propagation map; the other
// columns carry fixed values.
std::vector<Vec3> solve_ring(const MinimizingRingProblem& problem, const std::vector<int>& free_cols,
                             const std::vector<std::pair<int, Vec3>>& fixed) {
  const Eigen::MatrixXd& map = problem.propagation;
  const auto rows = map.rows();
  if (rows != static_cast<Eigen::Index>(problem.projected.size())) {
    raise(ErrorKind::kInvalidInput, "propagation map does not match the ring size");
  }
  const auto w = ring_weights(problem);
  const auto nf = static_cast<Eigen::Index>(free_cols.size());
  Eigen::MatrixXd a(rows, nf);
  Eigen::MatrixXd rhs(rows, 3);
  for (Eigen::Index l = 0; l < rows; ++l) {
    const double sw = std::sqrt(w[l]);
    for (Eigen::Index c = 0; c < nf; ++c) a(l, c) = sw * map(l, free_cols[c]);
    Vec3 t = problem.projected[l];
    for (const auto& [col, value] : fixed) t -= map(l, col) * value;
    rhs.row(l) = sw * t.transpose();
  }
  const Eigen::MatrixXd normal = a.transpose() * a;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(normal);
  lu.setThreshold(1e-12);
  if (lu.rank() < nf) raise(ErrorKind::kRank, "minimizing ring normal equations are singular");
  const Eigen::MatrixXd x = lu.solve(a.transpose() * rhs);

  std::vector<Vec3> ring;
  for (Eigen::Index l = 0; l < rows; ++l) {
    Vec3 c = Vec3::Zero();
    for (const auto& [col, value] : fixed) c += map(l, col) * value;
    for (Eigen::Index k = 0; k < nf; ++k) c += map(l, free_cols[k]) * x.row(k).transpose();
    ring.push_back(c);
  }
  return ring;
}

}  // namespace

double ring_functional(const MinimizingRingProblem& problem, const std::vector<Vec3>& ring) {
  const auto w = ring_weights(problem);
  double phi = 0.0;
  for (std::size_t l = 0; l < ring.size(); ++l) phi += w[l] * (ring[l] - problem.projected[l]).squaredNorm();
  return phi;
}

std::vector<Vec3> project_ring1(const std::vector<Vec3>& referential, const HermiteVertexDatum& datum) {
  std::vector<Vec3> out;
  for (const Vec3& c : referential) {
    const Vec3 rel = c - datum.P;
    const Vec3 proj = rel - rel.dot(datum.n) * datum.n;
    if (proj.norm() <= 1e-12 * std::max(1.0, rel.norm())) {
      raise(ErrorKind::kDegenerateProjection, "referential point lies on the normal line");
    }
    out.push_back(datum.P + proj);
  }
  return out;
}

std::vector<Vec3> minimize_ring1(const MinimizingRingProblem& problem) {
  return solve_ring(problem, {1, 2}, {{0, problem.base}});
}

std::vector<double> curvature_offsets(const CurvatureProjectionContext& ctx) {
  const int n = static_cast<int>(ctx.ring1.size());
  const int count = static_cast<int>(ctx.referential.size());
  if (count != (ctx.closed ? 2 * n : 2 * n - 1)) raise(ErrorKind::kInvalidInput, "curvature ring size mismatch");
  const int d = ctx.degree;
  const Vec3& P = ctx.datum.P;
  const Vec3& nrm = ctx.datum.n;
  auto direction = [&](const Vec3& x) {
    const Vec3 rel = x - P;
    if (rel.norm() <= 1e-14 * std::max(1.0, P.norm())) {
      raise(ErrorKind::kDegenerateDirection, "ring point coincides with P");
    }
    return Vec3(rel.normalized());
  };
  std::vector<double> k(static_cast<std::size_t>(count), 0.0);
  std::vector<Vec3> targets(static_cast<std::size_t>(count));
  // Slot s (0-based) is c_{n+1+s}; even s are odd l-n and sit on fan edges.
  for (int s = 0; s < count; s += 2) {
    const Vec3& c = ctx.ring1[s / 2];
    k[s] = static_cast<double>(d) / (d - 1) * (c - P).squaredNorm() * normal_curvature(ctx.datum, direction(c));
    const Vec3& ref = ctx.referential[s];
    targets[s] = ref - ((ref - P).dot(nrm) - k[s]) * nrm;
  }
  for (int s = 1; s < count; s += 2) {
    const int prev = s - 1;
    const int next = (s + 1) % count;
    const Vec3 mid = 0.5 * (ctx.ring1[prev / 2] + ctx.ring1[next / 2]);
    const double kn = normal_curvature(ctx.datum, direction(mid));
    k[s] = 2.0 * d / (d - 1) * (mid - P).squaredNorm() * kn -
           0.5 * ((targets[prev] - ctx.ring1[prev / 2]).dot(nrm) + (targets[next] - ctx.ring1[next / 2]).dot(nrm));
  }
  return k;
}

std::vector<Vec3> project_ring2(const CurvatureProjectionContext& ctx) {
  const auto k = curvature_offsets(ctx);
  std::vector<Vec3> out;
  for (std::size_t s = 0; s < k.size(); ++s) {
    const Vec3& ref = ctx.referential[s];
    out.push_back(ref - ((ref - ctx.datum.P).dot(ctx.datum.n) - k[s]) * ctx.datum.n);
  }
  return out;
}

std::vector<Vec3> minimize_ring2(const MinimizingRingProblem& problem, const std::vector<Vec3>& ring1) {
  if (ring1.size() < 2) raise(ErrorKind::kInvalidInput, "ring 1 needs at least two points");
  return solve_ring(problem, {3, 4, 5}, {{0, problem.base}, {1, ring1[0]}, {2, ring1[1]}});
}

Vec3 midplane_normal(const Vec3& n_pi, const Vec3& b_half) {
  if (b_half.norm() == 0.0) raise(ErrorKind::kDegenerateMidplane, "boundary derivative vanishes at the midpoint");
  const Vec3 t = b_half.normalized();
  const Vec3 n = n_pi - n_pi.dot(t) * t;
  if (n.norm() <= 1e-12 * n_pi.norm()) raise(ErrorKind::kDegenerateMidplane, "target normal parallel to the edge");
  return n.normalized();
}

Vec3 midpoint_transversal(const EdgeFrame& frame, const std::array<Vec3, 5>& v, const Vec3& n_pi) {
  const Vec3 n = midplane_normal(n_pi, frame.b.eval(0.5));
  auto normal_part = [&](const Vec3& x) { return x.dot(n); };
  auto plane_part = [&](const Vec3& x) { return Vec3(x - x.dot(n) * n); };
  const double vn = -(normal_part(v[0]) + 4.0 * normal_part(v[1]) + 4.0 * normal_part(v[3]) + normal_part(v[4])) / 6.0;
  const Vec3 vp = (-plane_part(v[0]) + 4.0 * plane_part(v[1]) + 4.0 * plane_part(v[3]) - plane_part(v[4])) / 6.0;
  return vn * n + vp;
}

}  // namespace hermite
