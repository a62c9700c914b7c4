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

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "hermite/datum.hpp"
#include "hermite/g1_connection.hpp"

namespace hermite {

struct MinimizingRingProblem {
  std::vector<Vec3> projected;  // targets c^(p)_l in ring order
  Vec3 base = Vec3::Zero();     // P
  int free_count = 2;           // 2 for ring 1, 3 for ring 2
  Eigen::MatrixXd propagation;  // ring points from the six seed symbols
};

// Sum of |c_l - c^(p)_l|^2 / |c^(p)_l - P|^2.
double ring_functional(const MinimizingRingProblem& problem, const std::vector<Vec3>& ring);

// Orthogonal projection of the referential ring onto the tangent plane.
std::vector<Vec3> project_ring1(const std::vector<Vec3>& referential, const HermiteVertexDatum& datum);

// Ring-1 points that minimize the functional subject to C1 at the vertex.
std::vector<Vec3> minimize_ring1(const MinimizingRingProblem& problem);

struct CurvatureProjectionContext {
  int degree = 5;
  std::vector<Vec3> ring1;        // c_1..c_n, already in the tangent plane
  HermiteVertexDatum datum;
  std::vector<Vec3> referential;  // c^ref_{n+1}..c^ref_{n+n'}
  bool closed = true;
};

// Signed offsets k_l along n of the curvature ring targets.
std::vector<double> curvature_offsets(const CurvatureProjectionContext& ctx);

// Targets c^(p)_{n+1..n+n'} realizing the curvature form at the vertex.
std::vector<Vec3> project_ring2(const CurvatureProjectionContext& ctx);

// Ring-2 points minimizing the functional subject to C2 at the vertex, with P
// and ring 1 fixed. `ring1` must hold at least c_1, c_2.
std::vector<Vec3> minimize_ring2(const MinimizingRingProblem& problem, const std::vector<Vec3>& ring1);

// Unit normal of the plane through the midpoint approximating the target
// plane: n_pi with its b(1/2) component removed.
Vec3 midplane_normal(const Vec3& n_pi, const Vec3& b_half);

// v_2 such that <v(1/2), n> = 0 and the in-plane part of v is cubic.
Vec3 midpoint_transversal(const EdgeFrame& frame, const std::array<Vec3, 5>& v, const Vec3& n_pi);

}  // namespace hermite
