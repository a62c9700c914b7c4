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

#include <optional>
#include <vector>

#include "hermite/datum.hpp"
#include "hermite/g1_connection.hpp"
#include "hermite/mesh.hpp"

namespace hermite {

struct VertexRings {
  std::vector<Vec3> ring1;
  std::vector<Vec3> ring2;
  std::vector<Vec3> targets1;  // projected referential ring 1
  std::vector<Vec3> targets2;  // curvature ring targets
  double wrap_residual = 0.0;
};

struct G1EdgeSolution {
  int edge = -1;
  EdgeFrame frame;
  ConnectingFunctionSet connection;
  CrossDerivatives cross;
  double fixed_row_residual = 0.0;  // assembled rows vs. the wireframe data
};

struct SchemeResult {
  Spline spline;
  Spline referential;
  std::vector<VertexRings> rings;
  std::vector<std::optional<G1EdgeSolution>> edges;  // G1 only, interior edges
};

// C1 quintic spline over a planar (possibly identified) domain triangulation.
SchemeResult build_c1_quintic(const HermiteData& data, const DomainTriangulation& tri);
SchemeResult build_c1_quintic(const HermiteData& data, const Mesh& mesh);

// G1 octic spline over an abstract triangle mesh (no domain needed).
SchemeResult build_g1_octic(const HermiteData& data, const Mesh& mesh);

// Interior points (all indices >= 2) of an octic patch from its 39 boundary-
// near points, via the best quintic fit of those points.
TriPatch fill_interior(const TriPatch& octic);

// Local 2D coordinates of the projected ring in an orthonormal basis of the
// tangent plane; they define the local domain cell of a G1 vertex.
std::vector<Vec2> local_offsets(const std::vector<Vec3>& ring1, const HermiteVertexDatum& datum);

// Edge frame (b, d, e) of an interior edge from degree-5 patches.
EdgeFrame edge_frame(const Spline& quintic, int edge);

}  // namespace hermite
