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

#include <askframe/detect.hpp>
#include <askframe/pipeline.hpp>
#include <askframe/records.hpp>
#include <askframe/respond.hpp>
#include <askframe/textseg.hpp>

#include <benchmark/benchmark.h>

#include "bench_data.hpp"

using namespace askframe;
using askframe::bench::data_path;

namespace {

struct Fixture {
  Lexicon lexicon = load_lexicon_file(data_path("lexicon/lcs_plus_seed.tsv"), LexiconFormat::kNormalized);
  VariantTable variants = load_variants_file(data_path("variants.txt"));
  std::vector<CorpusRecord> corpus = load_corpus(data_path("corpus/minicorpus.jsonl")).records;
  std::vector<ResponseTemplate> templates = load_templates_file(data_path("templates.txt"));
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

}  // namespace

static void BM_Segment(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state)
    for (const CorpusRecord& r : f.corpus) benchmark::DoNotOptimize(segment(r.message_id, r.text()));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.corpus.size()));
}
BENCHMARK(BM_Segment);

static void BM_SegmentAndTag(benchmark::State& state) {
  const Fixture& f = fixture();
  for (auto _ : state)
    for (const CorpusRecord& r : f.corpus) {
      Message m = segment(r.message_id, r.text());
      for (Clause& c : m.clauses) benchmark::DoNotOptimize(tag(std::move(c), f.lexicon, f.variants));
    }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.corpus.size()));
}
BENCHMARK(BM_SegmentAndTag);

static void BM_DetectTaggedClauses(benchmark::State& state) {
  const Fixture& f = fixture();
  std::vector<Clause> clauses;
  for (const CorpusRecord& r : f.corpus)
    for (Clause& c : segment(r.message_id, r.text()).clauses) clauses.push_back(tag(std::move(c), f.lexicon, f.variants));
  for (auto _ : state)
    for (const Clause& c : clauses) benchmark::DoNotOptimize(detect_events(c, f.lexicon, f.variants));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(clauses.size()));
}
BENCHMARK(BM_DetectTaggedClauses);

static void BM_Pipeline(benchmark::State& state) {
  const Fixture& f = fixture();
  PipelineSetup setup{&f.lexicon, &f.variants, nullptr, {}};
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(f.corpus, setup, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.corpus.size()));
}
BENCHMARK(BM_Pipeline)->Arg(1)->Arg(4)->UseRealTime();

static void BM_Respond(benchmark::State& state) {
  const Fixture& f = fixture();
  PipelineSetup setup{&f.lexicon, &f.variants, nullptr, {}};
  std::vector<TopSelection> selections;
  for (const AnalyzedMessage& m : run_pipeline(f.corpus, setup)) selections.push_back(m.detection.selection());
  for (auto _ : state)
    for (const TopSelection& s : selections) benchmark::DoNotOptimize(generate_response(s, f.templates));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(selections.size()));
}
BENCHMARK(BM_Respond);
