// Copyright 2026 The askframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <askframe/evalkit.hpp>
#include <askframe/records.hpp>

#include <benchmark/benchmark.h>

#include <random>

#include "bench_data.hpp"

using namespace askframe;
using askframe::bench::data_path;

static void BM_McNemarExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mcnemar_counts(n / 3, n - n / 3, n + 1));
}
BENCHMARK(BM_McNemarExact)->Arg(24)->Arg(200)->Arg(5000);

static void BM_McNemarChiSquare(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mcnemar_counts(40, 10));
}
BENCHMARK(BM_McNemarChiSquare);

static void BM_McNemarVectors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::vector<bool> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = rng() % 2;
    b[i] = rng() % 2;
  }
  for (auto _ : state) benchmark::DoNotOptimize(mcnemar(a, b));
}
BENCHMARK(BM_McNemarVectors)->Arg(472)->Arg(100000);

static void BM_CompareLexica(benchmark::State& state) {
  auto corpus = load_corpus(data_path("corpus/minicorpus.jsonl")).records;
  auto gt = load_ground_truth_file(data_path("corpus/minicorpus_gt.jsonl"));
  Lexicon t = load_lexicon_file(data_path("lexicon/thesaurus_seed.txt"), LexiconFormat::kFlatList);
  Lexicon s = load_lexicon_file(data_path("lexicon/stylus_seed.tsv"), LexiconFormat::kNormalized);
  Lexicon l = load_lexicon_file(data_path("lexicon/lcs_plus_seed.tsv"), LexiconFormat::kNormalized);
  VariantTable variants = load_variants_file(data_path("variants.txt"));
  CompareSetup setup;
  setup.variants = &variants;
  for (auto _ : state) benchmark::DoNotOptimize(compare_lexica(corpus, gt, {&t, &s, &l}, setup));
}
BENCHMARK(BM_CompareLexica)->UseRealTime();
