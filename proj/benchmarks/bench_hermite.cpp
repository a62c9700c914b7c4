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

#include <benchmark/benchmark.h>

#include "hermite/bezier.hpp"
#include "hermite/metrics.hpp"
#include "hermite/sampling.hpp"
#include "hermite/scheme.hpp"

namespace {

using namespace hermite;

TriPatch sample_patch(int degree) {
  TriPatch p(degree);
  const auto idx = multi_indices(degree);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    const double x = static_cast<double>(idx[r].j) / degree, y = static_cast<double>(idx[r].k) / degree;
    p.values()[r] = Vec3(x, y, std::sin(3 * x) * std::cos(2 * y));
  }
  return p;
}

void BM_EvalPatch(benchmark::State& state) {
  const TriPatch p = sample_patch(static_cast<int>(state.range(0)));
  const Bary v(0.2, 0.3, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(eval_patch(p, v));
}
BENCHMARK(BM_EvalPatch)->Arg(5)->Arg(8);

void BM_ElevateQuinticToOctic(benchmark::State& state) {
  const TriPatch p = sample_patch(5);
  for (auto _ : state) benchmark::DoNotOptimize(elevate_patch(p, 8));
}
BENCHMARK(BM_ElevateQuinticToOctic);

struct TorusCase {
  AnalyticSurface surface = AnalyticSurface::torus(2.0, 1.0);
  Mesh mesh;
  HermiteData data;
  explicit TorusCase(int cells) {
    mesh = Mesh::from_domain(periodic_grid_triangulation(surface.hi() - surface.lo(), cells, cells, surface.lo()));
    data = sample_on_domain(surface, mesh);
  }
};

void BM_BuildScheme(benchmark::State& state, SchemeKind kind) {
  const TorusCase c(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_scheme(kind, c.data, c.mesh));
  state.SetItemsProcessed(state.iterations() * c.mesh.triangle_count());
}
BENCHMARK_CAPTURE(BM_BuildScheme, c1_quintic, SchemeKind::kC1Quintic)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildScheme, g1_octic, SchemeKind::kG1Octic)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Hausdorff(benchmark::State& state) {
  const TorusCase c(5);
  const Spline spline = build_scheme(SchemeKind::kC1Quintic, c.data, c.mesh).spline;
  const int density = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_estimate(spline, c.surface, density));
}
BENCHMARK(BM_Hausdorff)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
