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

#include "hermite/datum.hpp"

#include <cmath>

namespace hermite {

std::vector<Vec3> HermiteData::points() const {
  std::vector<Vec3> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(v.P);
  return out;
}

void validate_datum(const HermiteVertexDatum& datum, double tol) {
  auto unit = [&](const Vec3& v, const char* name) {
    if (std::abs(v.norm() - 1.0) > std::max(tol, 1e-12)) {
      raise(ErrorKind::kInvalidInput, std::string(name) + " is not a unit vector");
    }
  };
  unit(datum.n, "normal");
  unit(datum.u1, "principal direction u1");
  unit(datum.u2, "principal direction u2");
  if (std::abs(datum.u1.dot(datum.u2)) > tol || std::abs(datum.u1.dot(datum.n)) > tol ||
      std::abs(datum.u2.dot(datum.n)) > tol) {
    raise(ErrorKind::kInvalidInput, "principal frame is not orthonormal");
  }
}

double normal_curvature(const HermiteVertexDatum& datum, const Vec3& u) {
  if (std::abs(u.dot(datum.n)) > 1e-6) {
    raise(ErrorKind::kInvalidDirection, "direction is not tangent");
  }
  const double a = u.dot(datum.u1);
  const double b = u.dot(datum.u2);
  return datum.kappa1 * a * a + datum.kappa2 * b * b;
}

HermiteVertexDatum transform_datum(const HermiteVertexDatum& datum, const Eigen::Matrix3d& rotation,
                                   const Vec3& shift) {
  HermiteVertexDatum out = datum;
  out.P = rotation * datum.P + shift;
  out.n = rotation * datum.n;
  out.u1 = rotation * datum.u1;
  out.u2 = rotation * datum.u2;
  return out;
}

}  // namespace hermite
