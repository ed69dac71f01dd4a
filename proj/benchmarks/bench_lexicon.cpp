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

#include <askframe/lexicon.hpp>
#include <askframe/morphvar.hpp>

#include <benchmark/benchmark.h>

#include "bench_data.hpp"

using namespace askframe;
using askframe::bench::data_path;

static void BM_LoadNormalizedLexicon(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(load_lexicon_file(data_path("lexicon/stylus_seed.tsv"), LexiconFormat::kNormalized));
}
BENCHMARK(BM_LoadNormalizedLexicon);

static void BM_LoadVariants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load_variants_file(data_path("variants.txt")));
}
BENCHMARK(BM_LoadVariants);

static void BM_ApplyLedger(benchmark::State& state) {
  Lexicon base = load_lexicon_file(data_path("lexicon/stylus_seed.tsv"), LexiconFormat::kNormalized);
  AdaptationLedger ledger = load_ledger_file(data_path("lexicon/stylus_to_lcs_plus.ledger"));
  for (auto _ : state) benchmark::DoNotOptimize(apply_ledger(base, ledger));
}
BENCHMARK(BM_ApplyLedger);

static void BM_DiffLexica(benchmark::State& state) {
  Lexicon from = load_lexicon_file(data_path("lexicon/stylus_seed.tsv"), LexiconFormat::kNormalized);
  Lexicon to = load_lexicon_file(data_path("lexicon/lcs_plus_seed.tsv"), LexiconFormat::kNormalized);
  for (auto _ : state) benchmark::DoNotOptimize(diff_lexica(from, to));
}
BENCHMARK(BM_DiffLexica);

static void BM_Normalize(benchmark::State& state) {
  VariantTable table = load_variants_file(data_path("variants.txt"));
  const char* words[] = {"reference", "winner", "payment", "clicking", "zorbification"};
  for (auto _ : state)
    for (const char* w : words) benchmark::DoNotOptimize(normalize(table, w));
}
BENCHMARK(BM_Normalize);
