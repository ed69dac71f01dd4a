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
#include <askframe/evalkit.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "strings.hpp"

namespace askframe {

using nlohmann::json;

std::string_view to_string(OutputType t) noexcept {
  switch (t) {
    case OutputType::kAsk: return "Ask";
    case OutputType::kFraming: return "Framing";
    case OutputType::kTopAsk: return "TopAsk";
  }
  return "Ask";
}

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& o) noexcept {
  tp += o.tp;
  fp += o.fp;
  fn += o.fn;
  tn += o.tn;
  return *this;
}

PRF prf(const ConfusionCounts& c) noexcept {
  PRF r;
  r.precision_undefined = c.tp + c.fp == 0;
  r.recall_undefined = c.tp + c.fn == 0;
  if (!r.precision_undefined) r.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  if (!r.recall_undefined) r.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  if (r.precision + r.recall > 0.0) r.f = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

// ---- ground truth I/O

namespace {

std::string clause_id(std::string_view message_id, std::size_t ordinal) {
  return std::string(message_id) + "#" + std::to_string(ordinal);
}

}  // namespace

std::vector<GroundTruthRecord> load_ground_truth(std::istream& in) {
  std::vector<GroundTruthRecord> out;
  std::set<std::pair<std::string, std::size_t>> seen;
  std::set<std::string> tops;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError("invalid ground-truth record", line_no, line);
    GroundTruthRecord r;
    try {
      r.message_id = j.at("message_id").get<std::string>();
      r.clause_ordinal = j.at("clause_ordinal").get<std::size_t>();
      if (auto t = j.find("clause_text"); t != j.end() && !t->is_null())
        r.clause_text = t->get<std::string>();
      for (const json& l : j.at("labels")) {
        auto kind = parse_kind(l.at("kind").get<std::string>());
        auto cat = parse_category(l.at("category").get<std::string>());
        if (!kind || !cat) throw ParseError("unknown label kind or category", line_no, line);
        if (kind_of(*cat) != *kind) throw ParseError("label kind contradicts category", line_no, line);
        std::string trigger;
        if (auto t = l.find("trigger"); t != l.end() && !t->is_null()) trigger = t->get<std::string>();
        r.labels.push_back({*kind, *cat, detail::normalize_lemma(trigger)});
      }
      if (auto t = j.find("top_ask"); t != j.end()) r.top_ask = t->get<bool>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed ground-truth record: ") + e.what(), line_no, line);
    }
    if (!seen.insert({r.message_id, r.clause_ordinal}).second)
      throw ParseError("duplicate record for clause " + clause_id(r.message_id, r.clause_ordinal),
                       line_no, line);
    if (r.top_ask) {
      if (std::none_of(r.labels.begin(), r.labels.end(),
                       [](const GoldLabel& l) { return l.kind == Kind::kAsk; }))
        throw ParseError("top_ask set on a clause without an ask label", line_no, line);
      if (!tops.insert(r.message_id).second)
        throw ParseError("second top_ask in message " + r.message_id, line_no, line);
    }
    out.push_back(std::move(r));
  }
  if (in.bad()) throw Error("read failure while loading ground truth");
  return out;
}

std::vector<GroundTruthRecord> load_ground_truth_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open ground-truth file '" + path + "'");
  return load_ground_truth(in);
}

void write_ground_truth(std::ostream& out, const std::vector<GroundTruthRecord>& records) {
  for (const GroundTruthRecord& r : records) {
    json labels = json::array();
    for (const GoldLabel& l : r.labels)
      labels.push_back({{"kind", to_string(l.kind)},
                        {"category", to_string(l.category)},
                        {"trigger", l.trigger}});
    json j = {{"message_id", r.message_id},
              {"clause_ordinal", r.clause_ordinal},
              {"labels", labels},
              {"top_ask", r.top_ask}};
    if (r.clause_text) j["clause_text"] = *r.clause_text;
    out << j.dump() << '\n';
  }
}

// ---- scoring

namespace {

using LabelKey = std::pair<Category, std::string>;

std::map<LabelKey, std::size_t> key_counts(const std::vector<SystemLabel>& labels, bool strict) {
  std::map<LabelKey, std::size_t> out;
  for (const SystemLabel& l : labels) ++out[{l.category, strict ? l.trigger : std::string()}];
  return out;
}

}  // namespace

bool unit_correct(const LabelUnit& unit, const ScoringOptions& options) {
  return key_counts(unit.system, options.strict_trigger) == key_counts(unit.gold, options.strict_trigger);
}

ConfusionCounts score_unit(const LabelUnit& unit, const ScoringOptions& options) {
  ConfusionCounts c;
  if (unit.system.empty() && unit.gold.empty()) {
    c.tn = 1;
    return c;
  }
  if (options.granularity == Granularity::kPerClause) {
    if (unit_correct(unit, options)) {
      c.tp = 1;
    } else {
      c.fp = unit.system.empty() ? 0 : 1;
      c.fn = unit.gold.empty() ? 0 : 1;
    }
    return c;
  }
  // Labels match on an equivalence key, so the maximum matching is the sum of
  // per-key minima.
  auto sys = key_counts(unit.system, options.strict_trigger);
  auto gold = key_counts(unit.gold, options.strict_trigger);
  std::size_t matched = 0;
  for (const auto& [key, n] : sys)
    if (auto it = gold.find(key); it != gold.end()) matched += std::min(n, it->second);
  c.tp = matched;
  c.fp = unit.system.size() - matched;
  c.fn = unit.gold.size() - matched;
  return c;
}

namespace {

using GtIndex = std::map<std::pair<std::string, std::size_t>, const GroundTruthRecord*>;

GtIndex index_gt(const std::vector<DetectionRecord>& system, const std::vector<GroundTruthRecord>& gt) {
  std::set<std::string> messages;
  for (const DetectionRecord& r : system) messages.insert(r.message_id);
  GtIndex index;
  for (const GroundTruthRecord& g : gt) {
    std::string id = clause_id(g.message_id, g.clause_ordinal);
    if (!messages.count(g.message_id)) throw AlignmentError(id, "ground truth references unknown message");
    if (!index.emplace(std::make_pair(g.message_id, g.clause_ordinal), &g).second)
      throw AlignmentError(id, "duplicate ground-truth record");
  }
  for (const DetectionRecord& r : system) {
    for (std::size_t i = 0; i < r.clause_count; ++i)
      if (!index.count({r.message_id, i}))
        throw AlignmentError(clause_id(r.message_id, i), "no ground-truth record");
  }
  for (const auto& [key, g] : index) {
    auto it = std::find_if(system.begin(), system.end(),
                           [&](const DetectionRecord& r) { return r.message_id == key.first; });
    if (key.second >= it->clause_count)
      throw AlignmentError(clause_id(key.first, key.second), "ground-truth clause beyond segmentation");
  }
  return index;
}

}  // namespace

void check_alignment(const std::vector<AnalyzedMessage>& system,
                     const std::vector<GroundTruthRecord>& gt) {
  std::vector<DetectionRecord> records;
  for (const AnalyzedMessage& m : system) records.push_back(m.detection);
  GtIndex index = index_gt(records, gt);
  for (const AnalyzedMessage& m : system) {
    for (const Clause& c : m.message.clauses) {
      const GroundTruthRecord* g = index.at({m.message.message_id, c.ordinal});
      if (g->clause_text && *g->clause_text != c.text)
        throw AlignmentError(clause_id(m.message.message_id, c.ordinal),
                             "clause text differs from segmentation ('" + *g->clause_text +
                                 "' vs '" + c.text + "')");
    }
  }
}

std::vector<LabelUnit> label_units(const std::vector<DetectionRecord>& system,
                                   const std::vector<GroundTruthRecord>& gt, OutputType type) {
  GtIndex index = index_gt(system, gt);
  std::vector<LabelUnit> units;
  for (const DetectionRecord& r : system) {
    if (type == OutputType::kTopAsk) {
      LabelUnit u;
      if (r.top_ask) u.system.push_back({r.top_ask->event.category, r.top_ask->event.trigger.lemma});
      for (std::size_t i = 0; i < r.clause_count; ++i) {
        const GroundTruthRecord* g = index.at({r.message_id, i});
        if (!g->top_ask) continue;
        auto ask = std::find_if(g->labels.begin(), g->labels.end(),
                                [](const GoldLabel& l) { return l.kind == Kind::kAsk; });
        u.gold.push_back({ask->category, ask->trigger});
      }
      units.push_back(std::move(u));
      continue;
    }
    Kind kind = type == OutputType::kAsk ? Kind::kAsk : Kind::kFraming;
    std::vector<LabelUnit> clauses(r.clause_count);
    for (const AskFramingEvent& e : r.events)
      if (e.kind() == kind && e.clause_ordinal < clauses.size())
        clauses[e.clause_ordinal].system.push_back({e.category, e.trigger.lemma});
    for (std::size_t i = 0; i < r.clause_count; ++i)
      for (const GoldLabel& l : index.at({r.message_id, i})->labels)
        if (l.kind == kind) clauses[i].gold.push_back({l.category, l.trigger});
    for (LabelUnit& u : clauses) units.push_back(std::move(u));
  }
  return units;
}

ConfusionCounts score_condition(const std::vector<DetectionRecord>& system,
                                const std::vector<GroundTruthRecord>& gt, OutputType type,
                                const ScoringOptions& options) {
  ConfusionCounts total;
  for (const LabelUnit& u : label_units(system, gt, type)) total += score_unit(u, options);
  return total;
}

std::vector<bool> decision_vector(const std::vector<DetectionRecord>& system,
                                  const std::vector<GroundTruthRecord>& gt, OutputType type,
                                  const ScoringOptions& options) {
  std::vector<bool> out;
  for (const LabelUnit& u : label_units(system, gt, type)) out.push_back(unit_correct(u, options));
  return out;
}

// ---- reports

namespace {

std::vector<DetectionRecord> detections_of(const std::vector<AnalyzedMessage>& system) {
  std::vector<DetectionRecord> out;
  out.reserve(system.size());
  for (const AnalyzedMessage& m : system) out.push_back(m.detection);
  return out;
}

}  // namespace

EvalReport evaluate(std::string lexicon_name, const std::vector<AnalyzedMessage>& system,
                    const std::vector<GroundTruthRecord>& gt, const ScoringOptions& options) {
  check_alignment(system, gt);
  std::vector<DetectionRecord> records = detections_of(system);
  EvalReport report;
  report.lexicon_name = std::move(lexicon_name);
  report.message_count = system.size();
  for (const DetectionRecord& r : records) report.clause_count += r.clause_count;
  for (OutputType t : kAllOutputTypes) {
    ConditionReport& c = report.conditions[static_cast<std::size_t>(t)];
    c.type = t;
    c.counts = score_condition(records, gt, t, options);
    c.scores = prf(c.counts);
  }
  return report;
}

Comparison compare_lexica(const std::vector<CorpusRecord>& corpus,
                          const std::vector<GroundTruthRecord>& gt,
                          const std::vector<const Lexicon*>& lexica, const CompareSetup& setup) {
  if (lexica.size() < 2) throw Error("compare_lexica needs at least two lexica");
  if (!setup.variants) throw Error("compare_lexica needs a variant table");
  const Analyzer& analyzer = setup.analyzer ? *setup.analyzer : default_analyzer();
  std::vector<Message> segmented;
  segmented.reserve(corpus.size());
  for (const CorpusRecord& r : corpus) segmented.push_back(segment_record(r, analyzer));

  Comparison out;
  out.alpha = setup.alpha;
  std::vector<std::vector<DetectionRecord>> runs;
  for (const Lexicon* lex : lexica) {
    PipelineSetup ps{lex, setup.variants, &analyzer, setup.detect};
    std::vector<AnalyzedMessage> system = run_pipeline(segmented, ps, setup.threads);
    out.reports.push_back(evaluate(lex->name(), system, gt, setup.scoring));
    runs.push_back(detections_of(system));
  }
  for (std::size_t a = 0; a < lexica.size(); ++a) {
    for (std::size_t b = a + 1; b < lexica.size(); ++b) {
      for (OutputType t : kAllOutputTypes) {
        PairwiseTest test;
        test.a = a;
        test.b = b;
        test.type = t;
        test.result = mcnemar(decision_vector(runs[a], gt, t, setup.scoring),
                              decision_vector(runs[b], gt, t, setup.scoring));
        test.significant = test.result.p_value < setup.alpha;
        out.tests.push_back(test);
      }
    }
  }
  return out;
}

void write_report_json(std::ostream& out, const Comparison& cmp) {
  json reports = json::array();
  for (const EvalReport& r : cmp.reports) {
    json conditions = json::object();
    for (const ConditionReport& c : r.conditions) {
      conditions[std::string(to_string(c.type))] = {
          {"tp", c.counts.tp},
          {"fp", c.counts.fp},
          {"fn", c.counts.fn},
          {"tn", c.counts.tn},
          {"precision", c.scores.precision},
          {"recall", c.scores.recall},
          {"f", c.scores.f},
          {"precision_undefined", c.scores.precision_undefined},
          {"recall_undefined", c.scores.recall_undefined}};
    }
    reports.push_back({{"lexicon", r.lexicon_name},
                       {"messages", r.message_count},
                       {"clauses", r.clause_count},
                       {"conditions", conditions}});
  }
  json tests = json::array();
  for (const PairwiseTest& t : cmp.tests) {
    tests.push_back({{"a", cmp.reports[t.a].lexicon_name},
                     {"b", cmp.reports[t.b].lexicon_name},
                     {"condition", to_string(t.type)},
                     {"b_count", t.result.b},
                     {"c_count", t.result.c},
                     {"statistic", t.result.statistic},
                     {"p_value", t.result.p_value},
                     {"method", to_string(t.result.method)},
                     {"significant", t.significant}});
  }
  json j = {{"alpha", cmp.alpha}, {"reports", reports}, {"mcnemar", tests}};
  out << j.dump(2) << '\n';
}

void write_report_text(std::ostream& out, const Comparison& cmp) {
  out << std::fixed;
  for (const EvalReport& r : cmp.reports) {
    out << r.lexicon_name << " (" << r.message_count << " messages, " << r.clause_count
        << " clauses)\n";
    out << "  " << std::left << std::setw(10) << "" << std::right << std::setw(7) << "P"
        << std::setw(7) << "R" << std::setw(7) << "F" << std::setw(6) << "TP" << std::setw(6)
        << "FP" << std::setw(6) << "FN" << std::setw(6) << "TN" << '\n';
    for (const ConditionReport& c : r.conditions) {
      out << "  " << std::left << std::setw(10) << (std::string(to_string(c.type)) + ":")
          << std::right << std::setprecision(3) << std::setw(7) << c.scores.precision
          << std::setw(7) << c.scores.recall << std::setw(7) << c.scores.f << std::setw(6)
          << c.counts.tp << std::setw(6) << c.counts.fp << std::setw(6) << c.counts.fn
          << std::setw(6) << c.counts.tn;
      if (c.scores.precision_undefined) out << "  (P undefined)";
      if (c.scores.recall_undefined) out << "  (R undefined)";
      out << '\n';
    }
    out << '\n';
  }
  out << "McNemar (alpha " << std::setprecision(3) << cmp.alpha << ")\n";
  for (const PairwiseTest& t : cmp.tests) {
    std::ostringstream pair;
    pair << cmp.reports[t.a].lexicon_name << " vs " << cmp.reports[t.b].lexicon_name;
    out << "  " << std::left << std::setw(26) << pair.str() << std::setw(9) << to_string(t.type)
        << std::right << " b=" << std::setw(3) << t.result.b << " c=" << std::setw(3) << t.result.c
        << "  p=" << std::setprecision(4) << t.result.p_value << "  " << std::left
        << std::setw(15) << to_string(t.result.method)
        << (t.significant ? "significant" : "n.s.") << '\n';
  }
  out << std::defaultfloat;
}

}  // namespace askframe
