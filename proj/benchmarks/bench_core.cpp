// Copyright 2026 The bihom Authors. All rights reserved.
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

#include <random>

#include "bihom/cohomology.hpp"
#include "bihom/corpus.hpp"
#include "bihom/deformation.hpp"
#include "bihom/genderiv.hpp"
#include "bihom/linalg.hpp"
#include "bihom/representation.hpp"

namespace {

using namespace bihom;

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = Rational(num(rng), den(rng));
      m(r, c).canonicalize();
    }
  }
  return m;
}

void BM_RankNullspace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  // Rank-deficient: the last rows repeat the first ones.
  Matrix m = random_matrix(n, n, 7);
  for (std::size_t r = n / 2; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = m(r - n / 2, c);
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank_nullspace(m));
}
BENCHMARK(BM_RankNullspace)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ComplexReportD2(benchmark::State& state) {
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  const Representation adj = adjoint(d2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(complex_report(d2, adj, n));
}
BENCHMARK(BM_ComplexReportD2)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ComplexReportSemidirect(benchmark::State& state) {
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  const BiHomAlgebra big = semidirect(d2, coadjoint(d2));
  const Representation adj = adjoint(big);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(complex_report(big, adj, n));
}
BENCHMARK(BM_ComplexReportSemidirect)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_TrivializeE1(benchmark::State& state) {
  const BiHomAlgebra e1 = corpus::idempotent_line();
  TruncatedDeformation d{e1, {}};
  Multilinear d1(2, 1, 1);
  d1.at({0, 0}, 0) = 1;
  d.terms.push_back(d1);
  const auto order = static_cast<std::size_t>(state.range(0));
  while (d.order() < order) d.terms.push_back(*extend_one_order(d));
  for (auto _ : state) benchmark::DoNotOptimize(trivialize(d, order));
}
BENCHMARK(BM_TrivializeE1)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SgderSpace(benchmark::State& state) {
  const BiHomAlgebra d2 = corpus::twisted_dual_numbers();
  const BiHomAlgebra big = semidirect(d2, adjoint(d2));
  for (auto _ : state) benchmark::DoNotOptimize(sgder_space(big, {1, -1}));
}
BENCHMARK(BM_SgderSpace)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
