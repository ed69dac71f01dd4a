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

#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace askframe;
using askframe::testing::brute_force_matching;

namespace {

std::vector<GroundTruthRecord> parse_gt(const std::string& text) {
  std::istringstream in(text);
  return load_ground_truth(in);
}

AskFramingEvent ev(std::size_t clause, Category c, std::string lemma) {
  AskFramingEvent e;
  e.message_id = "m";
  e.clause_ordinal = clause;
  e.category = c;
  e.trigger.lemma = std::move(lemma);
  e.slots.ask_type = c;
  e.confidence = 1.0;
  return e;
}

DetectionRecord record(std::string id, std::size_t clauses, std::vector<AskFramingEvent> events) {
  for (AskFramingEvent& e : events) e.message_id = id;
  TopSelection top = select_top(events, id);
  return make_detection_record(clauses, top, std::move(events));
}

GroundTruthRecord gold(std::string id, std::size_t clause, std::vector<GoldLabel> labels, bool top = false) {
  return {std::move(id), clause, std::nullopt, std::move(labels), top};
}

ConfusionCounts oracle_counts(const std::vector<LabelUnit>& units, bool strict) {
  ConfusionCounts c;
  for (const LabelUnit& u : units) {
    if (u.system.empty() && u.gold.empty()) {
      ++c.tn;
      continue;
    }
    std::size_t m = brute_force_matching(u.system.size(), u.gold.size(), [&](std::size_t i, std::size_t j) {
      return u.system[i].category == u.gold[j].category && (!strict || u.system[i].trigger == u.gold[j].trigger);
    });
    c.tp += m;
    c.fp += u.system.size() - m;
    c.fn += u.gold.size() - m;
  }
  return c;
}

}  // namespace

TEST_CASE("single clause match and miss") {
  std::vector<DetectionRecord> sys = {record("m", 3, {ev(0, Category::kPerform, "click")})};
  auto gt = std::vector<GroundTruthRecord>{gold("m", 0, {{Kind::kAsk, Category::kPerform, "click"}}),
                                           gold("m", 1, {}), gold("m", 2, {})};
  ConfusionCounts c = score_condition(sys, gt, OutputType::kAsk);
  CHECK(c == ConfusionCounts{1, 0, 0, 2});
  gt[1].labels.push_back({Kind::kAsk, Category::kGive, "send"});
  c = score_condition(sys, gt, OutputType::kAsk);
  CHECK(c.fn == 1);
  CHECK(c.tn == 1);
}

TEST_CASE("top ask scoring per message") {
  std::vector<DetectionRecord> sys = {record("a", 1, {ev(0, Category::kPerform, "click")}),
                                      record("b", 1, {ev(0, Category::kGive, "send")}),
                                      record("c", 1, {})};
  auto gt = std::vector<GroundTruthRecord>{gold("a", 0, {{Kind::kAsk, Category::kPerform, "click"}}, true),
                                           gold("b", 0, {{Kind::kAsk, Category::kPerform, "pay"}}, true),
                                           gold("c", 0, {})};
  CHECK(score_condition(sys, gt, OutputType::kTopAsk) == ConfusionCounts{1, 1, 1, 1});
}

TEST_CASE("strict mode needs the trigger") {
  std::vector<DetectionRecord> sys = {record("m", 1, {ev(0, Category::kPerform, "click")})};
  auto gt = std::vector<GroundTruthRecord>{gold("m", 0, {{Kind::kAsk, Category::kPerform, "press"}})};
  CHECK(score_condition(sys, gt, OutputType::kAsk).tp == 1);
  ScoringOptions strict;
  strict.strict_trigger = true;
  CHECK(score_condition(sys, gt, OutputType::kAsk, strict) == ConfusionCounts{0, 1, 1, 0});
}

TEST_CASE("per-clause granularity") {
  ScoringOptions per_clause;
  per_clause.granularity = Granularity::kPerClause;
  LabelUnit u{{{Category::kPerform, "a"}, {Category::kPerform, "b"}}, {{Category::kPerform, "a"}}};
  CHECK(score_unit(u, per_clause) == ConfusionCounts{0, 1, 1, 0});
  CHECK(score_unit(u) == ConfusionCounts{1, 1, 0, 0});
}

TEST_CASE("ground truth errors") {
  std::vector<DetectionRecord> sys = {record("m", 2, {})};
  CHECK_THROWS_AS(score_condition(sys, {gold("x", 0, {})}, OutputType::kAsk), AlignmentError);
  CHECK_THROWS_AS(score_condition(sys, {gold("m", 0, {}), gold("m", 0, {}), gold("m", 1, {})}, OutputType::kAsk),
                  AlignmentError);
  CHECK_THROWS_AS(score_condition(sys, {gold("m", 0, {})}, OutputType::kAsk), AlignmentError);
  CHECK_THROWS_AS(parse_gt("{\"message_id\":\"m\",\"clause_ordinal\":0,\"labels\":[]}\n"
                           "{\"message_id\":\"m\",\"clause_ordinal\":0,\"labels\":[]}\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_gt("{\"message_id\":\"m\",\"clause_ordinal\":0,\"labels\":"
                           "[{\"kind\":\"ask\",\"category\":\"LOSE\",\"trigger\":\"x\"}]}\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_gt("{\"message_id\":\"m\",\"clause_ordinal\":0,\"labels\":[],\"top_ask\":true}\n"), ParseError);
  CHECK_THROWS_AS(parse_gt("not json\n"), ParseError);
}

TEST_CASE("ground truth round-trip") {
  auto gt = std::vector<GroundTruthRecord>{gold("m", 0, {{Kind::kAsk, Category::kPerform, "click"}}, true),
                                           gold("m", 1, {{Kind::kFraming, Category::kLose, "lose"}})};
  gt[1].clause_text = "or lose money.";
  std::ostringstream out;
  write_ground_truth(out, gt);
  CHECK(parse_gt(out.str()) == gt);
}

TEST_CASE("prf examples") {
  PRF a = prf({3, 1, 6, 0});
  CHECK(a.precision == doctest::Approx(0.75));
  CHECK(a.recall == doctest::Approx(1.0 / 3.0));
  CHECK(a.f == doctest::Approx(6.0 / 13.0));
  CHECK_FALSE(a.degenerate());
  PRF z = prf({0, 0, 0, 10});
  CHECK(z.precision == 0.0);
  CHECK(z.recall == 0.0);
  CHECK(z.f == 0.0);
  CHECK(z.degenerate());
  PRF p = prf({5, 0, 0, 2});
  CHECK(p.precision == 1.0);
  CHECK(p.recall == 1.0);
  CHECK(p.f == 1.0);
}

TEST_CASE("scoring matches a brute-force matcher on random instances") {
  std::mt19937 rng(29);
  for (int round = 0; round < 1000; ++round) {
    std::size_t clauses = 1 + rng() % 6;
    std::vector<AskFramingEvent> events;
    std::vector<GroundTruthRecord> gt;
    for (std::size_t k = 0; k < clauses; ++k) {
      GroundTruthRecord g = gold("m", k, {});
      for (std::size_t n = rng() % 3; n > 0; --n) {
        Category c = kAllCategories[rng() % 4];
        g.labels.push_back({kind_of(c), c, "t" + std::to_string(rng() % 2)});
      }
      for (std::size_t n = rng() % 3; n > 0; --n)
        events.push_back(ev(k, kAllCategories[rng() % 4], "t" + std::to_string(rng() % 2)));
      gt.push_back(std::move(g));
    }
    std::vector<DetectionRecord> sys = {record("m", clauses, events)};
    for (bool strict : {false, true}) {
      ScoringOptions opts;
      opts.strict_trigger = strict;
      for (OutputType t : {OutputType::kAsk, OutputType::kFraming}) {
        auto units = label_units(sys, gt, t);
        ConfusionCounts got = score_condition(sys, gt, t, opts);
        CHECK(got == oracle_counts(units, strict));
        CHECK(got.total() >= clauses);
        CHECK(got.total() == oracle_counts(units, strict).total());
        PRF s = prf(got);
        CHECK(s.precision >= 0.0);
        CHECK(s.precision <= 1.0);
        CHECK(s.recall >= 0.0);
        CHECK(s.recall <= 1.0);
        CHECK(s.f <= std::max(s.precision, s.recall) + 1e-15);
        if (s.precision + s.recall > 0.0)
          CHECK(askframe::testing::rel_close(s.f, 2.0 * s.precision * s.recall / (s.precision + s.recall), 1e-12));
      }
    }
  }
}

TEST_CASE("reference result rows satisfy the F identity to rounding") {
  struct Row {
    double p, r, f;
  };
  const Row rows[] = {{0.273, 0.042, 0.072}, {0.265, 0.360, 0.305}, {0.273, 0.057, 0.094},
                      {0.333, 0.104, 0.159}, {0.298, 0.636, 0.406}, {0.571, 0.151, 0.239},
                      {0.667, 0.411, 0.508}, {0.600, 0.600, 0.600}, {0.692, 0.340, 0.456}};
  for (const Row& row : rows) CHECK(2.0 * row.p * row.r / (row.p + row.r) == doctest::Approx(row.f).epsilon(0.005));
}
