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

// Runs the askframe binary end to end and checks exit codes and outputs.

#include <askframe/pipeline.hpp>
#include <askframe/records.hpp>
#include <askframe/respond.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "fixtures.hpp"

using namespace askframe;
using askframe::testing::data_path;
using askframe::testing::read_file;

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

struct ScratchDir {
  fs::path path = fs::temp_directory_path() / ("askframe_cli_" + std::to_string(::getpid()));
  ScratchDir() { fs::create_directories(path); }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

fs::path scratch() {
  static const ScratchDir dir;
  return dir.path;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

Run run_cli(const std::string& args) {
  fs::path err = scratch() / "stderr.txt";
  std::string cmd = std::string("\"") + ASKFRAME_CLI + "\" " + args + " 2>\"" + err.string() + "\"";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = read_file(err.string());
  return r;
}

std::string config() { return "--config \"" + data_path("askframe.json") + "\""; }

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("detect over the reference emails") {
  Run r = run_cli(config() + " detect \"" + data_path("corpus/reference_emails.jsonl") + "\"");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 3);
  CHECK(r.out.find("\"lemma\":\"paste\"") != std::string::npos);
}

TEST_CASE("detect on an empty corpus") {
  write(scratch() / "empty.jsonl", "");
  Run r = run_cli(config() + " detect \"" + (scratch() / "empty.jsonl").string() + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("detect skips a malformed line and exits 1") {
  std::string corpus = read_file(data_path("corpus/reference_emails.jsonl"));
  std::size_t second = corpus.find('\n') + 1;
  corpus.insert(second, "{\"message_id\": \"broken\", \"body\": 42}\n");
  write(scratch() / "faulty.jsonl", corpus);
  Run r = run_cli(config() + " detect \"" + (scratch() / "faulty.jsonl").string() + "\"");
  CHECK(r.code == 1);
  CHECK(lines(r.out) == 3);
  CHECK(r.err.find("faulty.jsonl:2") != std::string::npos);
}

TEST_CASE("usage, configuration and I/O failures exit 2") {
  CHECK(run_cli(config() + " detect /nonexistent/corpus.jsonl").code == 2);
  write(scratch() / "bad.json", "{\"lexicon\": 3}");
  CHECK(run_cli("--config \"" + (scratch() / "bad.json").string() + "\" detect \"" +
                 data_path("corpus/reference_emails.jsonl") + "\"").code == 2);
  write(scratch() / "typo.json", "{\"lexicn\": \"x\"}");
  CHECK(run_cli("--config \"" + (scratch() / "typo.json").string() + "\" detect \"" +
                 data_path("corpus/reference_emails.jsonl") + "\"").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli(config() + " --alpha 2 eval \"" + data_path("corpus/minicorpus.jsonl") + "\"").code == 2);
}

TEST_CASE("respond gives one plan per message and matches the library") {
  fs::path det = scratch() / "det.jsonl";
  REQUIRE(run_cli(config() + " --out \"" + det.string() + "\" detect \"" + data_path("corpus/minicorpus.jsonl") + "\"").code == 0);
  Run r = run_cli(config() + " respond \"" + det.string() + "\"");
  CHECK(r.code == 0);
  CorpusLoad corpus = load_corpus(data_path("corpus/minicorpus.jsonl"));
  CHECK(lines(r.out) == corpus.records.size());

  Lexicon lex = load_lexicon_file(data_path("lexicon/lcs_plus_seed.tsv"), LexiconFormat::kNormalized);
  VariantTable variants = load_variants_file(data_path("variants.txt"));
  auto templates = load_templates_file(data_path("templates.txt"));
  PipelineSetup setup{&lex, &variants, nullptr, {}};
  std::ostringstream expected_det, expected_resp;
  for (const AnalyzedMessage& m : run_pipeline(corpus.records, setup)) {
    expected_det << to_json_line(m.detection) << '\n';
    expected_resp << to_json_line(generate_response(m.detection.selection(), templates)) << '\n';
  }
  CHECK(read_file(det.string()) == expected_det.str());
  CHECK(r.out == expected_resp.str());
}

TEST_CASE("respond edge cases") {
  write(scratch() / "nodet.jsonl", "");
  Run empty = run_cli(config() + " respond \"" + (scratch() / "nodet.jsonl").string() + "\"");
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  CHECK(run_cli(config() + " --templates /nonexistent/t.txt respond \"" + (scratch() / "nodet.jsonl").string() + "\"").code == 2);
}

TEST_CASE("eval report structure") {
  fs::path json_out = scratch() / "report.json";
  Run r = run_cli(config() + " --out \"" + json_out.string() + "\" eval \"" + data_path("corpus/minicorpus.jsonl") + "\"");
  CHECK(r.code == 0);
  for (const char* name : {"thesaurus", "stylus", "lcs_plus"}) CHECK(r.out.find(name) != std::string::npos);
  std::string report = read_file(json_out.string());
  for (const char* cond : {"\"Ask\"", "\"Framing\"", "\"TopAsk\""}) CHECK(report.find(cond) != std::string::npos);
  CHECK(report.find("\"mcnemar\"") != std::string::npos);
}

TEST_CASE("eval with the same lexicon twice gives p = 1") {
  std::string lex = data_path("lexicon/lcs_plus_seed.tsv");
  Run r = run_cli(config() + " --lexicon \"" + lex + "\" --lexicon \"" + lex + "\" eval \"" +
                   data_path("corpus/minicorpus.jsonl") + "\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("b=  0 c=  0  p=1.0000") != std::string::npos);
}

TEST_CASE("eval failures") {
  CHECK(run_cli(config() + " eval \"" + data_path("corpus/minicorpus.jsonl") + "\" --gt /nonexistent/gt.jsonl").code == 2);
  std::string gt = read_file(data_path("corpus/minicorpus_gt.jsonl"));
  std::size_t cut = gt.find('\n', gt.find('\n') + 1) + 1;
  write(scratch() / "short_gt.jsonl", gt.substr(0, cut) + gt.substr(gt.find('\n', cut) + 1));
  Run r = run_cli(config() + " eval \"" + data_path("corpus/minicorpus.jsonl") + "\" --gt \"" +
                   (scratch() / "short_gt.jsonl").string() + "\"");
  CHECK(r.code == 2);
  CHECK(r.err.find("t1b#0") != std::string::npos);
}

TEST_CASE("lexicon subcommands") {
  Run diff = run_cli("lexicon diff \"" + data_path("lexicon/stylus_seed.tsv") + "\" \"" +
                      data_path("lexicon/lcs_plus_seed.tsv") + "\"");
  CHECK(diff.code == 0);
  CHECK(diff.out.find("PERFORM         44       6") != std::string::npos);
  CHECK(diff.out.find("LOSE            11     174") != std::string::npos);

  write(scratch() / "empty.ledger", "");
  Run same = run_cli("lexicon apply \"" + data_path("lexicon/lcs_plus_seed.tsv") + "\" \"" +
                      (scratch() / "empty.ledger").string() + "\"");
  CHECK(same.code == 0);
  CHECK(same.out == read_file(data_path("lexicon/lcs_plus_seed.tsv")));

  Run applied = run_cli("lexicon apply \"" + data_path("lexicon/stylus_seed.tsv") + "\" \"" +
                         data_path("lexicon/stylus_to_lcs_plus.ledger") + "\"");
  CHECK(applied.out == read_file(data_path("lexicon/lcs_plus_seed.tsv")));

  write(scratch() / "dup.tsv", "GIVE\t13.2\t\tdonate\nGIVE\t13.2\t\tdonate\n");
  Run dup = run_cli("lexicon validate \"" + (scratch() / "dup.tsv").string() + "\"");
  CHECK(dup.code == 2);
  CHECK(dup.err.find("donate") != std::string::npos);
  CHECK(dup.err.find("duplicate") != std::string::npos);
  CHECK(run_cli("lexicon validate \"" + data_path("lexicon/thesaurus_seed.txt") + "\"").code == 0);
}

TEST_CASE("end-to-end runs are byte-identical") {
  std::string corpus = "\"" + data_path("corpus/minicorpus.jsonl") + "\"";
  CHECK(run_cli(config() + " detect " + corpus).out == run_cli(config() + " --threads 3 detect " + corpus).out);
  CHECK(run_cli(config() + " eval " + corpus).out == run_cli(config() + " eval " + corpus).out);
}
