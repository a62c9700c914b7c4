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

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hermite/datum.hpp"
#include "hermite/mesh.hpp"
#include "hermite/metrics.hpp"

namespace hermite {

// Mesh text format:
//   hermite-mesh 1
//   vertex <id> <u> <v>
//   triangle <a> <b> <c>
//   identify <keep> <merge>
// Blank lines and lines starting with '#' are ignored.
DomainTriangulation read_mesh(std::istream& in);
void write_mesh(std::ostream& out, const DomainTriangulation& tri);

// Hermite data format:
//   hermite-data 1
//   vertex <id> <P xyz> <n xyz> <u1 xyz> <u2 xyz> <kappa1> <kappa2>
//   edge <a> <b> <n_pi xyz>
//   triangle <a> <b> <c>            (optional connectivity)
struct HermiteFile {
  std::vector<HermiteVertexDatum> vertices;
  std::map<std::pair<int, int>, Vec3> edges;  // keyed by (min id, max id)
  std::vector<std::array<int, 3>> triangles;
};

HermiteFile read_hermite_file(std::istream& in);
void write_hermite_file(std::ostream& out, const HermiteData& data, const Mesh& mesh, bool with_triangles = true);
// Orders the edge records along mesh.edges(); every edge needs a record.
HermiteData resolve_hermite_data(const HermiteFile& file, const Mesh& mesh);

// Control-net format:
//   hermite-net 1
//   patches <count>
//   patch <tri> degree <d> vertices <a> <b> <c> [domain <u0> <v0> <u1> <v1> <u2> <v2>]
//   <x> <y> <z>                      (count(d) lines, storage order)
// All patches share one degree. Values are written with 17 significant digits.
void write_control_net(std::ostream& out, const Spline& spline);
Spline read_control_net(std::istream& in);

// Uniform barycentric tessellation of every patch.
void write_obj(std::ostream& out, const Spline& spline, int density);

void write_convergence_csv(std::ostream& out, const ConvergenceResult& result);

}  // namespace hermite
