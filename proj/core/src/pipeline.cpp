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

#include <askframe/error.hpp>
#include <askframe/pipeline.hpp>
#include <askframe/topask.hpp>

#include <algorithm>
#include <future>
#include <thread>

namespace askframe {

namespace {

const Analyzer& analyzer_of(const PipelineSetup& setup) {
  return setup.analyzer ? *setup.analyzer : default_analyzer();
}

void check(const PipelineSetup& setup) {
  if (!setup.lexicon || !setup.variants) throw Error("pipeline setup needs a lexicon and a variant table");
}

template <typename In, typename Fn>
std::vector<AnalyzedMessage> run_chunks(const std::vector<In>& items, unsigned threads, Fn fn) {
  std::vector<AnalyzedMessage> out(items.size());
  if (items.empty()) return out;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t workers = std::min<std::size_t>(threads, items.size());
  std::size_t chunk = (items.size() + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t start = 0; start < items.size(); start += chunk) {
    std::size_t stop = std::min(items.size(), start + chunk);
    jobs.push_back(std::async(std::launch::async, [&, start, stop] {
      for (std::size_t i = start; i < stop; ++i) out[i] = fn(items[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace

Message segment_record(const CorpusRecord& record, const Analyzer& analyzer) {
  return analyzer.segment(record.message_id, record.text());
}

AnalyzedMessage detect_message(const Message& segmented, const PipelineSetup& setup) {
  check(setup);
  const Analyzer& analyzer = analyzer_of(setup);
  AnalyzedMessage out;
  out.message.message_id = segmented.message_id;
  out.message.raw_text = segmented.raw_text;
  std::vector<AskFramingEvent> events;
  for (const Clause& c : segmented.clauses) {
    Clause tagged = analyzer.tag(c, *setup.lexicon, *setup.variants);
    for (AskFramingEvent& e : detect_events(tagged, *setup.lexicon, *setup.variants, setup.detect))
      events.push_back(std::move(e));
    out.message.clauses.push_back(std::move(tagged));
  }
  TopSelection top = select_top(events, segmented.message_id);
  out.detection = make_detection_record(segmented.clauses.size(), top, std::move(events));
  return out;
}

AnalyzedMessage analyze_record(const CorpusRecord& record, const PipelineSetup& setup) {
  return detect_message(segment_record(record, analyzer_of(setup)), setup);
}

std::vector<AnalyzedMessage> run_pipeline(const std::vector<CorpusRecord>& corpus,
                                          const PipelineSetup& setup, unsigned threads) {
  check(setup);
  return run_chunks(corpus, threads, [&](const CorpusRecord& r) { return analyze_record(r, setup); });
}

std::vector<AnalyzedMessage> run_pipeline(const std::vector<Message>& segmented,
                                          const PipelineSetup& setup, unsigned threads) {
  check(setup);
  return run_chunks(segmented, threads, [&](const Message& m) { return detect_message(m, setup); });
}

}  // namespace askframe
