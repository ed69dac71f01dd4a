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

#pragma once

#include <askframe/detect.hpp>
#include <askframe/records.hpp>
#include <askframe/textseg.hpp>

#include <cstddef>
#include <vector>

namespace askframe {

struct PipelineSetup {
  const Lexicon* lexicon = nullptr;
  const VariantTable* variants = nullptr;
  const Analyzer* analyzer = nullptr;  // default_analyzer() when null
  DetectOptions detect;
};

struct AnalyzedMessage {
  Message message;  // tagged clauses
  DetectionRecord detection;
};

Message segment_record(const CorpusRecord& record, const Analyzer& analyzer);

// Tags an already segmented message and runs detection and top selection.
AnalyzedMessage detect_message(const Message& segmented, const PipelineSetup& setup);
AnalyzedMessage analyze_record(const CorpusRecord& record, const PipelineSetup& setup);

// Messages are processed concurrently in chunks; results keep input order.
// threads == 0 picks std::thread::hardware_concurrency().
std::vector<AnalyzedMessage> run_pipeline(const std::vector<CorpusRecord>& corpus,
                                          const PipelineSetup& setup, unsigned threads = 0);
std::vector<AnalyzedMessage> run_pipeline(const std::vector<Message>& segmented,
                                          const PipelineSetup& setup, unsigned threads = 0);

}  // namespace askframe
