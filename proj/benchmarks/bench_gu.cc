// Copyright 2026 The guframe Authors.
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
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "guframe/abelian.h"
#include "guframe/frame.h"
#include "guframe/gu.h"
#include "guframe/lsguf.h"
#include "guframe/matops.h"

namespace guframe {
namespace {

GUFrame MakeFrame(int n, int m) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  const GroupSpec spec = GroupSpec::Cyclic(n);
  std::vector<int> characters(m);
  for (int k = 0; k < m; ++k) characters[k] = (k * 7) % n;
  ComplexVector phi(m);
  for (int k = 0; k < m; ++k) phi(k) = Complex(normal(rng), normal(rng));
  return GUFrame(UnitaryRep::FromCharacters(spec, characters), phi);
}

void BM_FtMatrix(benchmark::State& state) {
  const GroupSpec spec({2, static_cast<int>(state.range(0)) / 2});
  for (auto _ : state) benchmark::DoNotOptimize(ft_matrix(spec));
}
BENCHMARK(BM_FtMatrix)->Arg(16)->Arg(64)->Arg(256);

void BM_GuSpectral(benchmark::State& state) {
  const GUFrame g = MakeFrame(static_cast<int>(state.range(0)),
                              static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(gu_spectral(g));
}
BENCHMARK(BM_GuSpectral)->Args({64, 4})->Args({64, 16})->Args({256, 16});

void BM_DirectDual(benchmark::State& state) {
  const Frame f = synthesize(MakeFrame(static_cast<int>(state.range(0)),
                                       static_cast<int>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(dual_frame(f));
}
BENCHMARK(BM_DirectDual)->Args({64, 4})->Args({64, 16})->Args({256, 16});

void BM_ScLsguf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = 8;
  const GUFrame g = MakeFrame(n, m);
  const Frame f = synthesize(g);
  const ComplexMatrix gram = gram_matrix(f.matrix());
  const TargetGram target =
      build_target_gram(gram.row(0).transpose(), g.rep().spec());
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  ComplexMatrix noisy = f.matrix();
  for (Eigen::Index i = 0; i < noisy.size(); ++i) {
    noisy(i) += 0.1 * Complex(normal(rng), normal(rng));
  }
  const Frame input(noisy);
  for (auto _ : state) benchmark::DoNotOptimize(sc_lsguf(input, target, 1.0));
}
BENCHMARK(BM_ScLsguf)->Arg(32)->Arg(128);

}  // namespace
}  // namespace guframe

BENCHMARK_MAIN();
