// Copyright 2026-present the vidrec project
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


// Parallel kernels against their serial references on a synthetic corpus.

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "vidrec/similarity.hpp"
#include "vidrec/vectorizer.hpp"

namespace {

// Zipf-ish token draws so a few terms are shared widely.
std::vector<vidrec::Document> synthetic_corpus(std::size_t docs) {
  std::mt19937_64 rng(docs);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> length(8, 40);
  std::vector<vidrec::Document> corpus(docs);
  for (std::size_t d = 0; d < docs; ++d) {
    corpus[d].video_id = d;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) {
      const auto term = static_cast<std::size_t>(20000.0 * u(rng) * u(rng) * u(rng));
      corpus[d].tokens.push_back("t" + std::to_string(term));
    }
  }
  return corpus;
}

void BM_Fit(benchmark::State& state) {
  auto corpus = synthetic_corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vidrec::fit(corpus));
}

void BM_FitSerial(benchmark::State& state) {
  auto corpus = synthetic_corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vidrec::fit_serial(corpus));
}

void BM_SimilarityMatrix(benchmark::State& state) {
  auto model = vidrec::fit(synthetic_corpus(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(vidrec::similarity_matrix(model.vectors()));
}

void BM_SimilarityMatrixSerial(benchmark::State& state) {
  auto model = vidrec::fit(synthetic_corpus(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(vidrec::similarity_matrix_serial(model.vectors()));
  }
}

}  // namespace

BENCHMARK(BM_Fit)->Arg(1000)->Arg(4803)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FitSerial)->Arg(1000)->Arg(4803)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimilarityMatrix)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimilarityMatrixSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
