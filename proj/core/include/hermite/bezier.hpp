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

// Barycentric and Bernstein machinery for triangular Bezier patches and
// univariate Bezier vector fields.
//
// Control nets are stored densely in lexicographic (i,j,k) order. The nets
// are templated on the value type so that the same de Casteljau code runs on
// points (Vec3), scalars, and symbolic linear forms; the latter is how the
// smoothness maps are turned into explicit weight matrices.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "hermite/error.hpp"

namespace hermite {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

inline constexpr double kBaryTolerance = 1e-12;

struct Bary {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  constexpr double operator[](int c) const { return c == 0 ? alpha : (c == 1 ? beta : gamma); }
  constexpr double sum() const { return alpha + beta + gamma; }

  static constexpr Bary vertex(int c) {
    return {c == 0 ? 1.0 : 0.0, c == 1 ? 1.0 : 0.0, c == 2 ? 1.0 : 0.0};
  }
  // Direction from corner `from` to corner `to`; its coordinates sum to zero.
  static constexpr Bary direction(int from, int to) {
    Bary d;
    d.set(to, 1.0);
    d.set(from, -1.0);
    return d;
  }
  constexpr void set(int c, double value) {
    if (c == 0) alpha = value;
    else if (c == 1) beta = value;
    else gamma = value;
  }
};

// Throws kInvalidInput unless the coordinates sum to one.
void require_point(const Bary& v);
// Throws kInvalidDirection unless the coordinates sum to zero.
void require_direction(const Bary& v);

struct MultiIndex {
  int i = 0;
  int j = 0;
  int k = 0;

  constexpr int order() const { return i + j + k; }
  constexpr int operator[](int c) const { return c == 0 ? i : (c == 1 ? j : k); }
  constexpr bool operator==(const MultiIndex&) const = default;
};

double binomial(int n, int k);
double multinomial(int d, const MultiIndex& idx);

// d!/(i! j! k!) alpha^i beta^j gamma^k. Throws kInvalidIndex if |idx| != d.
double bernstein(int degree, const MultiIndex& idx, const Bary& v);
// Univariate B^n_m(t).
double bernstein1(int degree, int m, double t);

namespace detail {
template <class T>
T zero_of() {
  if constexpr (std::is_arithmetic_v<T>) {
    return T{0};
  } else {
    return T::Zero();
  }
}
}  // namespace detail

template <class T>
class TriNet {
 public:
  TriNet() = default;
  explicit TriNet(int degree, const T& fill = detail::zero_of<T>())
      : degree_(degree), values_(count(degree), fill) {
    if (degree < 0) raise(ErrorKind::kInvalidDegree, "negative degree");
  }
  TriNet(int degree, std::vector<T> values) : degree_(degree), values_(std::move(values)) {
    if (degree < 0) raise(ErrorKind::kInvalidDegree, "negative degree");
    if (values_.size() != count(degree)) {
      raise(ErrorKind::kInvalidInput, "control net of degree " + std::to_string(degree) +
                                          " needs " + std::to_string(count(degree)) + " points");
    }
  }

  static constexpr std::size_t count(int degree) {
    return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
  }
  // Lexicographic position of (i,j,k) among multi-indices of order `degree`.
  static constexpr std::size_t index(int degree, const MultiIndex& m) {
    return static_cast<std::size_t>(m.i * (degree + 1) - m.i * (m.i - 1) / 2 + m.j);
  }
  static bool valid(int degree, const MultiIndex& m) {
    return m.i >= 0 && m.j >= 0 && m.k >= 0 && m.order() == degree;
  }

  int degree() const { return degree_; }
  std::size_t size() const { return values_.size(); }

  const T& operator[](const MultiIndex& m) const { return values_[index(degree_, m)]; }
  T& operator[](const MultiIndex& m) { return values_[index(degree_, m)]; }
  const T& operator()(int i, int j, int k) const { return (*this)[MultiIndex{i, j, k}]; }
  T& operator()(int i, int j, int k) { return (*this)[MultiIndex{i, j, k}]; }

  const T& at(const MultiIndex& m) const {
    if (!valid(degree_, m)) raise(ErrorKind::kInvalidIndex, "multi-index outside the net");
    return (*this)[m];
  }

  std::span<const T> values() const { return values_; }
  std::span<T> values() { return values_; }

  // Visits every multi-index in storage order.
  template <class F>
  void for_each_index(F&& f) const {
    for (int i = 0; i <= degree_; ++i) {
      for (int j = 0; j <= degree_ - i; ++j) f(MultiIndex{i, j, degree_ - i - j});
    }
  }

 private:
  int degree_ = 0;
  std::vector<T> values_;
};

using TriPatch = TriNet<Vec3>;

// All multi-indices of order d in storage order.
std::vector<MultiIndex> multi_indices(int degree);

// One de Casteljau step: net of degree d-1 whose entries are the barycentric
// combinations <v, (c_{i+e1}, c_{i+e2}, c_{i+e3})>. Works for directions too.
template <class T>
TriNet<T> de_casteljau_step(const TriNet<T>& net, const Bary& v) {
  if (net.degree() == 0) raise(ErrorKind::kInvalidStep, "cannot step a degree-0 net");
  TriNet<T> out(net.degree() - 1, net.values()[0]);
  out.for_each_index([&](const MultiIndex& m) {
    out[m] = v.alpha * net[MultiIndex{m.i + 1, m.j, m.k}] +
             v.beta * net[MultiIndex{m.i, m.j + 1, m.k}] +
             v.gamma * net[MultiIndex{m.i, m.j, m.k + 1}];
  });
  return out;
}

// Blossom evaluated at the given arguments (exactly `degree` of them, points
// or directions). Derivatives are scaled blossoms with directions in front.
template <class T>
T blossom(const TriNet<T>& net, std::span<const Bary> args) {
  if (static_cast<int>(args.size()) != net.degree()) {
    raise(ErrorKind::kInvalidInput, "blossom needs one argument per degree");
  }
  TriNet<T> cur = net;
  for (const Bary& a : args) cur = de_casteljau_step(cur, a);
  return cur.values()[0];
}

template <class T>
T evaluate(const TriNet<T>& net, const Bary& v) {
  TriNet<T> cur = net;
  while (cur.degree() > 0) cur = de_casteljau_step(cur, v);
  return cur.values()[0];
}

// One-step degree elevation applied `target - degree` times.
template <class T>
TriNet<T> elevate(const TriNet<T>& net, int target_degree) {
  if (target_degree < net.degree()) {
    raise(ErrorKind::kInvalidDegree, "cannot elevate degree " + std::to_string(net.degree()) +
                                         " to " + std::to_string(target_degree));
  }
  TriNet<T> cur = net;
  while (cur.degree() < target_degree) {
    const int d = cur.degree();
    TriNet<T> next(d + 1, cur.values()[0]);
    next.for_each_index([&](const MultiIndex& m) {
      T acc = detail::zero_of<T>();
      if (m.i > 0) acc += (static_cast<double>(m.i) / (d + 1)) * cur[MultiIndex{m.i - 1, m.j, m.k}];
      if (m.j > 0) acc += (static_cast<double>(m.j) / (d + 1)) * cur[MultiIndex{m.i, m.j - 1, m.k}];
      if (m.k > 0) acc += (static_cast<double>(m.k) / (d + 1)) * cur[MultiIndex{m.i, m.j, m.k - 1}];
      next[m] = acc;
    });
    cur = std::move(next);
  }
  return cur;
}

// Point on the patch, computed by repeated de Casteljau steps.
Vec3 eval_patch(const TriPatch& patch, const Bary& v);

// Intermediate de Casteljau points c^(k)_i(v), |i| = d - k.
TriPatch de_casteljau_points(const TriPatch& patch, const Bary& v, int steps);

TriPatch elevate_patch(const TriPatch& patch, int target_degree);

// D_u p(v).
Vec3 directional_derivative(const TriPatch& patch, const Bary& v, const Bary& u);
// D_u D_w p(v).
Vec3 second_derivative(const TriPatch& patch, const Bary& v, const Bary& u, const Bary& w);

// Unit normal of the patch at v, oriented along D_{e2-e1} p x D_{e3-e1} p.
Vec3 patch_normal(const TriPatch& patch, const Bary& v);

// Univariate Bezier vector field (b_l, d_l, e_l, v_l in the G1 analysis).
struct VecField1D {
  std::vector<Vec3> coeffs;

  VecField1D() = default;
  explicit VecField1D(std::vector<Vec3> c) : coeffs(std::move(c)) {}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Vec3 eval(double t) const;
};

VecField1D elevate_field(const VecField1D& field, int times);

// Oriented patch edge running from corner `from` to corner `to`.
struct EdgeParam {
  int from = 0;
  int to = 1;

  constexpr int opposite() const { return 3 - from - to; }
};

// Bezier coefficients (degree d-1) of D_u p restricted to the edge, with the
// edge parameter running from `edge.from` to `edge.to`.
VecField1D boundary_derivative(const TriPatch& patch, const EdgeParam& edge, const Bary& direction);

// Multi-index of the point that sits `row` steps away from the edge and `pos`
// steps from its start: row 0 is the boundary, positions 0..d-row.
MultiIndex edge_row_index(int degree, const EdgeParam& edge, int row, int pos);

}  // namespace hermite
