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

#include <askframe/respond.hpp>
#include <askframe/topask.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace askframe {

struct CorpusRecord {
  std::string message_id;
  std::optional<std::string> subject;
  std::string body;

  // Subject and body joined by a blank line; the body alone without a subject.
  std::string text() const;

  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

struct RecordIssue {
  std::size_t line = 0;  // 1-based; 0 when the issue names a file
  std::string reason;
};

struct CorpusLoad {
  std::vector<CorpusRecord> records;
  std::vector<RecordIssue> skipped;
};

// Malformed lines and duplicate ids are skipped and reported; blank lines are ignored.
CorpusLoad load_corpus_jsonl(std::istream& in);
// A JSON Lines file, or a directory holding one plain-text file per message
// (file name = message_id, read in name order). Throws Error if unreadable.
CorpusLoad load_corpus(const std::string& path);
void write_corpus_jsonl(std::ostream& out, const std::vector<CorpusRecord>& records);

// Per-message detection output.
struct DetectionRecord {
  std::string message_id;
  std::size_t clause_count = 0;
  std::vector<AskFramingEvent> events;
  std::optional<ScoredEvent> top_ask;
  std::optional<ScoredEvent> top_framing;

  TopSelection selection() const;
};

DetectionRecord make_detection_record(std::size_t clause_count, const TopSelection& selection,
                                      std::vector<AskFramingEvent> events);

std::string to_json_line(const DetectionRecord& record);
std::string to_json_line(const ResponsePlan& plan);

// Throws ParseError on any malformed line.
std::vector<DetectionRecord> load_detections_jsonl(std::istream& in);
void write_detections_jsonl(std::ostream& out, const std::vector<DetectionRecord>& records);
void write_responses_jsonl(std::ostream& out, const std::vector<ResponsePlan>& plans);

}  // namespace askframe
