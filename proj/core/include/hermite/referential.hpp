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

#include <vector>

#include "hermite/mesh.hpp"

namespace hermite {

// Weights of the Butterfly rule for one edge: data point ids (or ghost
// combinations already expanded into ids) and their coefficients.
struct Stencil {
  std::vector<std::pair<int, double>> terms;

  double weight_sum() const;
  Vec3 apply(const std::vector<Vec3>& points) const;
};

// Extraordinary-vertex weights s_0..s_{k-1} (center weight 3/4 not included).
std::vector<double> extraordinary_weights(int valence);

Stencil butterfly_stencil(const Mesh& mesh, int edge);

// One Butterfly midpoint per mesh edge (indexed like mesh.edges()).
std::vector<Vec3> butterfly_step(const std::vector<Vec3>& points, const Mesh& mesh);

// Quadratic patches through the data points and the Butterfly midpoints,
// elevated to target_degree. Patch corners follow the triangle order.
Spline build_referential(const std::vector<Vec3>& points, const Mesh& mesh, int target_degree);

}  // namespace hermite
