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
#include <askframe/records.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "strings.hpp"

namespace askframe {

using nlohmann::json;
namespace fs = std::filesystem;

std::string CorpusRecord::text() const {
  if (!subject || subject->empty()) return body;
  return *subject + "\n\n" + body;
}

CorpusLoad load_corpus_jsonl(std::istream& in) {
  CorpusLoad out;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    auto skip = [&](std::string reason) { out.skipped.push_back({line_no, std::move(reason)}); };
    if (j.is_discarded()) {
      skip("invalid JSON");
      continue;
    }
    if (!j.is_object()) {
      skip("record is not a JSON object");
      continue;
    }
    auto id = j.find("message_id");
    if (id == j.end() || !id->is_string() || id->get<std::string>().empty()) {
      skip("missing or non-string message_id");
      continue;
    }
    auto body = j.find("body");
    if (body == j.end() || !body->is_string()) {
      skip("missing or non-string body");
      continue;
    }
    CorpusRecord r;
    r.message_id = id->get<std::string>();
    r.body = body->get<std::string>();
    if (auto s = j.find("subject"); s != j.end() && !s->is_null()) {
      if (!s->is_string()) {
        skip("non-string subject");
        continue;
      }
      r.subject = s->get<std::string>();
    }
    if (!seen.insert(r.message_id).second) {
      skip("duplicate message_id '" + r.message_id + "'");
      continue;
    }
    out.records.push_back(std::move(r));
  }
  if (in.bad()) throw Error("read failure while loading corpus");
  return out;
}

CorpusLoad load_corpus(const std::string& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path, ec))
      if (entry.is_regular_file()) files.push_back(entry.path());
    if (ec) throw Error("cannot read corpus directory '" + path + "': " + ec.message());
    std::sort(files.begin(), files.end());
    CorpusLoad out;
    for (const fs::path& f : files) {
      std::ifstream in(f, std::ios::binary);
      if (!in) {
        out.skipped.push_back({0, "cannot read " + f.string()});
        continue;
      }
      std::ostringstream body;
      body << in.rdbuf();
      out.records.push_back({f.filename().string(), std::nullopt, body.str()});
    }
    return out;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus '" + path + "'");
  return load_corpus_jsonl(in);
}

void write_corpus_jsonl(std::ostream& out, const std::vector<CorpusRecord>& records) {
  for (const CorpusRecord& r : records) {
    json j = {{"message_id", r.message_id}};
    if (r.subject) j["subject"] = *r.subject;
    j["body"] = r.body;
    out << j.dump() << '\n';
  }
}

TopSelection DetectionRecord::selection() const {
  TopSelection s = select_top(events, message_id);
  s.top_ask = top_ask;
  s.top_framing = top_framing;
  return s;
}

DetectionRecord make_detection_record(std::size_t clause_count, const TopSelection& selection,
                                      std::vector<AskFramingEvent> events) {
  DetectionRecord r;
  r.message_id = selection.message_id;
  r.clause_count = clause_count;
  r.events = std::move(events);
  r.top_ask = selection.top_ask;
  r.top_framing = selection.top_framing;
  return r;
}

namespace {

template <typename T>
json optional_string(const std::optional<T>& v) {
  return v ? json(std::string(*v)) : json(nullptr);
}

json event_json(const AskFramingEvent& e) {
  json slots = {{"ask_type", to_string(e.slots.ask_type)},
                {"context", e.slots.context ? json(to_string(*e.slots.context)) : json(nullptr)},
                {"target", optional_string(e.slots.target)},
                {"object", optional_string(e.slots.object)}};
  return {{"clause", e.clause_ordinal},
          {"kind", to_string(e.kind())},
          {"category", to_string(e.category)},
          {"trigger",
           {{"surface", e.trigger.surface},
            {"lemma", e.trigger.lemma},
            {"class_id", e.trigger.class_id},
            {"token", e.trigger.token_index},
            {"length", e.trigger.token_count}}},
          {"slots", slots},
          {"confidence", e.confidence},
          {"provenance", to_string(e.provenance)}};
}

json scored_json(const std::optional<ScoredEvent>& s) {
  if (!s) return nullptr;
  json j = event_json(s->event);
  j["score"] = s->score;
  return j;
}

[[noreturn]] void bad(const std::string& what, std::size_t line_no, const std::string& line) {
  throw ParseError(what, line_no, line);
}

template <typename T, typename Parse>
T parse_enum(const json& j, const char* key, Parse parse, std::size_t line_no,
             const std::string& line) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) bad(std::string("missing field '") + key + "'", line_no, line);
  auto v = parse(it->get<std::string>());
  if (!v) bad(std::string("bad value for '") + key + "'", line_no, line);
  return *v;
}

std::optional<std::string> opt_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

AskFramingEvent parse_event(const json& j, const std::string& message_id, std::size_t line_no,
                            const std::string& line) {
  AskFramingEvent e;
  e.message_id = message_id;
  e.clause_ordinal = j.at("clause").get<std::size_t>();
  e.category = parse_enum<Category>(j, "category", parse_category, line_no, line);
  const json& t = j.at("trigger");
  e.trigger.surface = t.at("surface").get<std::string>();
  e.trigger.lemma = t.at("lemma").get<std::string>();
  e.trigger.class_id = t.at("class_id").get<std::string>();
  e.trigger.token_index = t.at("token").get<std::size_t>();
  e.trigger.token_count = t.at("length").get<std::size_t>();
  const json& s = j.at("slots");
  e.slots.ask_type = parse_enum<Category>(s, "ask_type", parse_category, line_no, line);
  if (auto c = opt_string(s, "context")) {
    auto ctx = parse_context(*c);
    if (!ctx) bad("bad context tag", line_no, line);
    e.slots.context = *ctx;
  }
  e.slots.target = opt_string(s, "target");
  e.slots.object = opt_string(s, "object");
  e.confidence = j.at("confidence").get<double>();
  e.provenance = parse_enum<Provenance>(j, "provenance", parse_provenance, line_no, line);
  return e;
}

std::optional<ScoredEvent> parse_scored(const json& j, const std::string& message_id,
                                        std::size_t line_no, const std::string& line) {
  if (j.is_null()) return std::nullopt;
  return ScoredEvent{parse_event(j, message_id, line_no, line), j.at("score").get<double>()};
}

}  // namespace

std::string to_json_line(const DetectionRecord& r) {
  json events = json::array();
  for (const AskFramingEvent& e : r.events) events.push_back(event_json(e));
  json j = {{"message_id", r.message_id},
            {"clauses", r.clause_count},
            {"events", events},
            {"top_ask", scored_json(r.top_ask)},
            {"top_framing", scored_json(r.top_framing)}};
  return j.dump();
}

std::string to_json_line(const ResponsePlan& p) {
  auto cat = [](const std::optional<Category>& c) {
    return c ? json(std::string(to_string(*c))) : json(nullptr);
  };
  json j = {{"message_id", p.message_id},
            {"template_id", p.template_id},
            {"text", p.rendered_text},
            {"ask", cat(p.ask)},
            {"framing", cat(p.framing)},
            {"band", to_string(p.band)},
            {"confidence", p.confidence}};
  return j.dump();
}

std::vector<DetectionRecord> load_detections_jsonl(std::istream& in) {
  std::vector<DetectionRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) bad("invalid detection record", line_no, line);
    try {
      DetectionRecord r;
      r.message_id = j.at("message_id").get<std::string>();
      r.clause_count = j.at("clauses").get<std::size_t>();
      for (const json& e : j.at("events")) r.events.push_back(parse_event(e, r.message_id, line_no, line));
      r.top_ask = parse_scored(j.at("top_ask"), r.message_id, line_no, line);
      r.top_framing = parse_scored(j.at("top_framing"), r.message_id, line_no, line);
      out.push_back(std::move(r));
    } catch (const json::exception& e) {
      bad(std::string("malformed detection record: ") + e.what(), line_no, line);
    }
  }
  if (in.bad()) throw Error("read failure while loading detections");
  return out;
}

void write_detections_jsonl(std::ostream& out, const std::vector<DetectionRecord>& records) {
  for (const DetectionRecord& r : records) out << to_json_line(r) << '\n';
}

void write_responses_jsonl(std::ostream& out, const std::vector<ResponsePlan>& plans) {
  for (const ResponsePlan& p : plans) out << to_json_line(p) << '\n';
}

}  // namespace askframe
