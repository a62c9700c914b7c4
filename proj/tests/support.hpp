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

// Shared helpers for the test binaries: seeded random inputs and small
// oracles written without the library's Bernstein code.

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hermite/bezier.hpp"
#include "hermite/datum.hpp"
#include "hermite/g1_connection.hpp"

namespace hermite::testing {

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Vec3 vec3(double lo = -1.0, double hi = 1.0) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }
  Vec2 vec2(double lo = -1.0, double hi = 1.0) { return {uniform(lo, hi), uniform(lo, hi)}; }
  Vec3 unit() {
    Vec3 v;
    do v = vec3(); while (v.norm() < 0.1 || v.norm() > 1.0);
    return v.normalized();
  }
  Bary point() {
    const double a = uniform(0.0, 1.0);
    const double b = uniform(0.0, 1.0 - a);
    return {a, b, 1.0 - a - b};
  }
  Bary direction() {
    const double a = uniform(-1.0, 1.0);
    const double b = uniform(-1.0, 1.0);
    return {a, b, -a - b};
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Direct Bernstein summation; independent of the de Casteljau code.
inline Vec3 direct_eval(const TriPatch& p, const Bary& v) {
  const int d = p.degree();
  Vec3 acc = Vec3::Zero();
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d - i; ++j) {
      const int k = d - i - j;
      const double w = factorial(d) / (factorial(i) * factorial(j) * factorial(k)) * std::pow(v.alpha, i) *
                       std::pow(v.beta, j) * std::pow(v.gamma, k);
      acc += w * p(i, j, k);
    }
  }
  return acc;
}

inline double uni_bernstein(int n, int m, double t) {
  return factorial(n) / (factorial(m) * factorial(n - m)) * std::pow(t, m) * std::pow(1.0 - t, n - m);
}

inline double scalar_poly(const std::vector<double>& c, double t) {
  double acc = 0.0;
  const int n = static_cast<int>(c.size()) - 1;
  for (int m = 0; m <= n; ++m) acc += c[m] * uni_bernstein(n, m, t);
  return acc;
}

inline Vec3 vector_poly(const std::vector<Vec3>& c, double t) {
  Vec3 acc = Vec3::Zero();
  const int n = static_cast<int>(c.size()) - 1;
  for (int m = 0; m <= n; ++m) acc += c[m] * uni_bernstein(n, m, t);
  return acc;
}

inline TriPatch random_patch(Rng& rng, int degree) {
  TriPatch p(degree);
  for (auto& c : p.values()) c = rng.vec3();
  return p;
}

inline double angle(const Vec3& a, const Vec3& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

// Random datum with an orthonormal frame and curvatures in [-2, 2].
inline HermiteVertexDatum random_datum(Rng& rng) {
  HermiteVertexDatum d;
  d.P = rng.vec3(-2.0, 2.0);
  d.n = rng.unit();
  Vec3 t = rng.unit();
  d.u1 = (t - t.dot(d.n) * d.n).normalized();
  d.u2 = d.n.cross(d.u1);
  d.kappa1 = rng.uniform(-2.0, 2.0);
  d.kappa2 = rng.uniform(-2.0, 2.0);
  return d;
}

// Star of n fan directions around the origin; closed fans make a full turn,
// open fans span less than one. Every fan angle stays below pi.
inline std::vector<Vec2> random_fan(Rng& rng, int n, bool closed) {
  const int steps = closed ? n : n - 1;
  const double span = closed ? 2 * std::numbers::pi : rng.uniform(0.25, 0.45) * 2 * std::numbers::pi;
  std::vector<double> gaps;
  double total = 0.0;
  for (int l = 0; l < steps; ++l) {
    gaps.push_back(rng.uniform(0.7, 1.3));
    total += gaps.back();
  }
  std::vector<Vec2> out;
  double a = rng.uniform(0.0, 2 * std::numbers::pi);
  for (int l = 0; l < n; ++l) {
    const double r = rng.uniform(0.5, 1.5);
    out.emplace_back(r * std::cos(a), r * std::sin(a));
    if (l < steps) a += gaps[l] / total * span;
  }
  return out;
}

// Control net of a polynomial, given by its net `g` over the reference
// triangle (r0, r1, r2), re-expressed over the domain triangle (a, b, c).
inline TriPatch restrict_patch(const TriPatch& g, const std::array<Vec2, 3>& ref, const Vec2& a, const Vec2& b,
                               const Vec2& c) {
  auto bary = [&](const Vec2& p) {
    Eigen::Matrix2d m;
    m.col(0) = ref[1] - ref[0];
    m.col(1) = ref[2] - ref[0];
    const Vec2 x = m.inverse() * (p - ref[0]);
    return Bary{1.0 - x(0) - x(1), x(0), x(1)};
  };
  const Bary ba = bary(a), bb = bary(b), bc = bary(c);
  TriPatch out(g.degree());
  out.for_each_index([&](const MultiIndex& m) {
    std::vector<Bary> args;
    for (int s = 0; s < m.i; ++s) args.push_back(ba);
    for (int s = 0; s < m.j; ++s) args.push_back(bb);
    for (int s = 0; s < m.k; ++s) args.push_back(bc);
    out[m] = blossom(g, std::span<const Bary>(args));
  });
  return out;
}

// Edge frame (b, d, e) whose end rows come from local quadratics at both
// vertices, with e = g b + f d at each end (f < 0). Middle coefficients are
// free. This is the situation the G1 connection assumes: D_2 disks that are
// C2 at the vertices.
struct FrameParams {
  double f0, g0, f4, g4;
};

inline EdgeFrame vertex_consistent_frame(Rng& rng, const FrameParams& fp, double interior_noise = 0.3) {
  EdgeFrame frame;
  frame.b.coeffs.assign(5, Vec3::Zero());
  frame.d.coeffs.assign(5, Vec3::Zero());
  frame.e.coeffs.assign(5, Vec3::Zero());
  auto end_rows = [&](double f, double g, int l0, int l1, double sign) {
    Eigen::Matrix<double, 3, 2> jac;
    jac.col(0) = Vec3(1.5, 0, 0) + 0.3 * rng.vec3();
    jac.col(1) = Vec3(0, 1.5, 0) + 0.3 * rng.vec3();
    const std::array<Vec3, 3> hess{rng.vec3(), rng.vec3(), rng.vec3()};
    auto h = [&](const Vec2& x, const Vec2& y) {
      return Vec3(x(0) * y(0) * hess[0] + (x(0) * y(1) + x(1) * y(0)) * hess[1] + x(1) * y(1) * hess[2]);
    };
    const Vec2 w0(1, 0);
    const Vec2 w1(rng.uniform(-0.5, 0.5), rng.uniform(0.6, 1.4));
    const Vec2 w2 = g * w0 + f * w1;
    for (auto [field, w] : {std::pair{&frame.b, w0}, std::pair{&frame.d, w1}, std::pair{&frame.e, w2}}) {
      field->coeffs[l0] = jac * w;
      field->coeffs[l1] = jac * w + sign * 0.25 * h(w0, w);
    }
  };
  end_rows(fp.f0, fp.g0, 0, 1, 1.0);
  end_rows(fp.f4, fp.g4, 4, 3, -1.0);
  frame.b.coeffs[2] = 0.5 * (frame.b.coeffs[1] + frame.b.coeffs[3]) + 0.1 * rng.vec3();
  frame.d.coeffs[2] = 0.5 * (frame.d.coeffs[1] + frame.d.coeffs[3]) + interior_noise * rng.vec3();
  frame.e.coeffs[2] = 0.5 * (frame.e.coeffs[1] + frame.e.coeffs[3]) + interior_noise * rng.vec3();
  return frame;
}

inline FrameParams random_frame_params(Rng& rng) {
  return {rng.uniform(-2.0, -0.3), rng.uniform(-1.0, 1.0), rng.uniform(-2.0, -0.3), rng.uniform(-1.0, 1.0)};
}

}  // namespace hermite::testing
