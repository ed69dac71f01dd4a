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
#include <askframe/records.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"

using namespace askframe;
using askframe::testing::data_path;
using askframe::testing::lcs_plus;
using askframe::testing::variants;

namespace fs = std::filesystem;

TEST_CASE("corpus lines: malformed records are skipped and reported") {
  std::istringstream in(
      "{\"message_id\":\"a\",\"body\":\"Hi.\"}\n"
      "{\"message_id\":\"b\",\"body\":\n"
      "\n"
      "{\"message_id\":\"c\",\"subject\":\"Win\",\"body\":\"Now.\"}\n"
      "{\"message_id\":\"a\",\"body\":\"again\"}\n"
      "[1,2]\n"
      "{\"message_id\":\"d\"}\n");
  CorpusLoad load = load_corpus_jsonl(in);
  REQUIRE(load.records.size() == 2);
  CHECK(load.records[1].text() == "Win\n\nNow.");
  REQUIRE(load.skipped.size() == 4);
  CHECK(load.skipped[0].line == 2);
  CHECK(load.skipped[1].line == 5);
  CHECK(load.skipped[2].line == 6);
  CHECK(load.skipped[3].line == 7);
}

TEST_CASE("corpus round-trip") {
  std::vector<CorpusRecord> records = {{"a", std::nullopt, "Hi.\nThere"}, {"b", "Subj", "\"quoted\""}};
  std::ostringstream out;
  write_corpus_jsonl(out, records);
  std::istringstream in(out.str());
  CHECK(load_corpus_jsonl(in).records == records);
}

TEST_CASE("directory corpus reads one message per file") {
  fs::path dir = fs::temp_directory_path() / "askframe_dir_corpus";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "m2") << "Send money now.";
  std::ofstream(dir / "m1") << "Hello.";
  CorpusLoad load = load_corpus(dir.string());
  REQUIRE(load.records.size() == 2);
  CHECK(load.records[0].message_id == "m1");
  CHECK(load.records[1].body == "Send money now.");
  fs::remove_all(dir);
  CHECK_THROWS_AS(load_corpus((dir / "missing.jsonl").string()), Error);
}

TEST_CASE("detection records round-trip through JSON lines") {
  std::vector<CorpusRecord> corpus = load_corpus(data_path("corpus/minicorpus.jsonl")).records;
  PipelineSetup setup{&lcs_plus(), &variants(), nullptr, {}};
  std::vector<DetectionRecord> records;
  for (const AnalyzedMessage& m : run_pipeline(corpus, setup)) records.push_back(m.detection);
  std::ostringstream out;
  write_detections_jsonl(out, records);
  std::istringstream in(out.str());
  std::vector<DetectionRecord> again = load_detections_jsonl(in);
  REQUIRE(again.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(again[i].events == records[i].events);
    CHECK(to_json_line(again[i]) == to_json_line(records[i]));
  }
  std::istringstream bad("{\"message_id\":\"x\"}\n");
  CHECK_THROWS_AS(load_detections_jsonl(bad), ParseError);
}

TEST_CASE("pipeline keeps input order whatever the thread count") {
  std::vector<CorpusRecord> corpus = load_corpus(data_path("corpus/minicorpus.jsonl")).records;
  PipelineSetup setup{&lcs_plus(), &variants(), nullptr, {}};
  auto one = run_pipeline(corpus, setup, 1);
  for (unsigned threads : {2u, 3u, 8u, 64u}) {
    auto many = run_pipeline(corpus, setup, threads);
    REQUIRE(many.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      CHECK(many[i].detection.message_id == corpus[i].message_id);
      CHECK(to_json_line(many[i].detection) == to_json_line(one[i].detection));
    }
  }
  CHECK(run_pipeline(std::vector<CorpusRecord>{}, setup).empty());
  PipelineSetup broken;
  CHECK_THROWS_AS(run_pipeline(corpus, broken), Error);
}
