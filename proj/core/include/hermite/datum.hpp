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

#include "hermite/bezier.hpp"

namespace hermite {

// Interpolation data at one vertex: point, unit normal, principal directions
// and the matching normal curvatures.
struct HermiteVertexDatum {
  Vec3 P = Vec3::Zero();
  Vec3 n = Vec3::UnitZ();
  Vec3 u1 = Vec3::UnitX();
  Vec3 u2 = Vec3::UnitY();
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

// Plane to approximate at an edge midpoint, given by its unit normal.
struct EdgeMidplaneDatum {
  Vec3 n_pi = Vec3::UnitZ();
};

// Vertex data indexed by canonical vertex id, midplanes by mesh edge id.
struct HermiteData {
  std::vector<HermiteVertexDatum> vertices;
  std::vector<EdgeMidplaneDatum> midplanes;

  std::vector<Vec3> points() const;
};

// Throws kInvalidInput when normals/directions are not unit or not orthogonal.
void validate_datum(const HermiteVertexDatum& datum, double tol = 1e-10);

// kappa1 <u,u1>^2 + kappa2 <u,u2>^2. Throws kInvalidDirection if u leaves the
// tangent plane by more than 1e-6.
double normal_curvature(const HermiteVertexDatum& datum, const Vec3& u);

// Rigid/affine helpers used by equivariance checks.
HermiteVertexDatum transform_datum(const HermiteVertexDatum& datum, const Eigen::Matrix3d& rotation,
                                   const Vec3& shift);

}  // namespace hermite
