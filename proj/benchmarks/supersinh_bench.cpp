// Copyright 2026 The supersinh Authors
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

#include "supersinh/fieldcalc.hpp"
#include "supersinh/grassmann.hpp"
#include "supersinh/reduction.hpp"
#include "supersinh/superspace.hpp"
#include "supersinh/symalg.hpp"

namespace {

using namespace supersinh;

Supernumber dense_value(std::mt19937_64& rng, unsigned n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Supernumber v(n);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    v.coeff(m) = d(rng);
  }
  return v;
}

void BM_SupernumberProduct(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(7);
  const Supernumber a = dense_value(rng, n);
  const Supernumber b = dense_value(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmul(a, b));
  }
}
BENCHMARK(BM_SupernumberProduct)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_SuperfieldSinh(benchmark::State& state) {
  const Supernumber v =
      Supernumber::body_element(4, 0.8) + Supernumber::monomial(4, 0b0011, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gsinh(v));
  }
}
BENCHMARK(BM_SuperfieldSinh);

void BM_ResidualPoint(benchmark::State& state) {
  std::mt19937_64 rng(20260815);
  const SuperPolynomial p = random_superpolynomial(rng, 2, 3, 6);
  const Superfield f = from_polynomial(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shg_residual_point(f, 0.4, -0.7));
  }
}
BENCHMARK(BM_ResidualPoint);

void BM_ResidualSurvey(benchmark::State& state) {
  std::mt19937_64 rng(20260815);
  const SuperPolynomial p = random_superpolynomial(rng, 2, 3, 6);
  const Superfield f = from_polynomial(p);
  const Window w{-1.0, 1.0, -1.0, 1.0};
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(shg_residual(f, w, g, g));
  }
}
BENCHMARK(BM_ResidualSurvey)->Arg(11)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_BracketTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_table1(2, 1e-12));
  }
}
BENCHMARK(BM_BracketTable);

void BM_TravellingWaveSolve(benchmark::State& state) {
  TravellingWaveInput in;
  in.steps = static_cast<int>(state.range(0));
  in.alpha0 = Supernumber::body_element(2, 0.8);
  in.dalpha0 = Supernumber::body_element(2, 0.3);
  in.eta0 = Supernumber::monomial(2, 0b01, 0.4);
  in.lambda0 = Supernumber::monomial(2, 0b10, 0.7);
  in.C0 = Supernumber::monomial(2, 0b11, 0.28);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_S4(in));
  }
}
BENCHMARK(BM_TravellingWaveSolve)
    ->Arg(500)
    ->Arg(2000)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
