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

#include "hermite/error.hpp"

namespace hermite {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidIndex: return "invalid-index";
    case ErrorKind::kInvalidStep: return "invalid-step";
    case ErrorKind::kInvalidDegree: return "invalid-degree";
    case ErrorKind::kInvalidDirection: return "invalid-direction";
    case ErrorKind::kInvalidOrder: return "invalid-order";
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kTopology: return "topology";
    case ErrorKind::kUnsupportedLevel: return "unsupported-level";
    case ErrorKind::kCollinearFrame: return "collinear-frame";
    case ErrorKind::kOrientation: return "orientation";
    case ErrorKind::kDegenerateTransversal: return "degenerate-transversal";
    case ErrorKind::kDegenerateProjection: return "degenerate-projection";
    case ErrorKind::kDegenerateDirection: return "degenerate-direction";
    case ErrorKind::kDegenerateMidplane: return "degenerate-midplane";
    case ErrorKind::kRank: return "rank";
    case ErrorKind::kSingularSample: return "singular-sample";
    case ErrorKind::kFormat: return "format";
    case ErrorKind::kUsage: return "usage";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hermite
