// Copyright 2026 The qbell Authors
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

#include "qbell/corsets.hpp"
#include "qbell/fme.hpp"
#include "qbell/lp.hpp"
#include "qbell/numkernel.hpp"
#include "qbell/polytope.hpp"

namespace qbell {
namespace {

void BM_LemmaTwoVertices(benchmark::State& state) {
  const HPolytope p = to_hpolytope(build_named_system("lemma2"));
  for (auto _ : state) benchmark::DoNotOptimize(h_to_v(p));
}
BENCHMARK(BM_LemmaTwoVertices)->Unit(benchmark::kMillisecond);

void BM_CutFacets(benchmark::State& state) {
  const VPolytope v = cut_polytope_vertices({Graph::complete_bipartite(3, 3), CutVariant::kZeroOne});
  for (auto _ : state) benchmark::DoNotOptimize(v_to_h(v));
}
BENCHMARK(BM_CutFacets)->Unit(benchmark::kMillisecond);

void BM_EliminateAngles(benchmark::State& state) {
  const LinSystem s = build_named_system("cor33_angles");
  const bool prune = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(eliminate(s, {"alpha", "beta", "gamma"}, prune));
}
BENCHMARK(BM_EliminateAngles)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Implies(benchmark::State& state) {
  const LinSystem s = build_named_system("tlm_full");
  const LinIneq q = s.inequalities().front();
  for (auto _ : state) benchmark::DoNotOptimize(implies(s, q));
}
BENCHMARK(BM_Implies)->Unit(benchmark::kMicrosecond);

void BM_Cor33Feasibility(benchmark::State& state) {
  const Correlation c = sample_quantum(3, 3, 6, 11);
  for (auto _ : state) benchmark::DoNotOptimize(cor33_feasibility(c));
}
BENCHMARK(BM_Cor33Feasibility)->Unit(benchmark::kMillisecond);

void BM_MinEigenvalue(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m.set(i, j, 1.0 / static_cast<double>(1 + i + j));
  }
  for (auto _ : state) benchmark::DoNotOptimize(min_eigenvalue(m));
}
BENCHMARK(BM_MinEigenvalue)->Arg(3)->Arg(6)->Arg(12);

}  // namespace
}  // namespace qbell

BENCHMARK_MAIN();
