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
#include <askframe/respond.hpp>

#include <doctest.h>

#include <optional>
#include <sstream>

#include "fixtures.hpp"

using namespace askframe;
using askframe::testing::data_path;
using askframe::testing::lcs_plus;
using askframe::testing::variants;

namespace {

const std::vector<ResponseTemplate>& bundled() {
  static const std::vector<ResponseTemplate> t = load_templates_file(data_path("templates.txt"));
  return t;
}

std::vector<ResponseTemplate> parse(const std::string& text) {
  std::istringstream in(text);
  return load_templates(in);
}

ResponsePlan respond_to(const std::string& body) {
  PipelineSetup setup{&lcs_plus(), &variants(), nullptr, {}};
  AnalyzedMessage m = analyze_record({"m", std::nullopt, body}, setup);
  return generate_response(m.detection.selection(), bundled());
}

ScoredEvent event(Category c, std::string lemma, double confidence, bool object) {
  AskFramingEvent e;
  e.message_id = "m";
  e.category = c;
  e.trigger = {lemma, lemma, "1", 0, 1};
  e.slots.ask_type = c;
  if (object) e.slots.object = "thing";
  e.confidence = confidence;
  return {e, score(e)};
}

}  // namespace

TEST_CASE("expected responses for the reference emails") {
  CHECK(respond_to("It is a pleasure to inform you that you have won 1.7Eu. Contact me. (jw11@example.com)")
            .rendered_text == "I will contact asap.");
  CHECK(respond_to("You won $1K. Did you send money? Do that by 9pm or lose money. Respond asap.")
            .rendered_text == "I would respond, but I need more info.");
  ResponsePlan c = respond_to(
      "Get 20% discount. Check eligibility or paste this link: http://deals.example.com/claim. Sign up for email alerts.");
  CHECK(c.rendered_text == "Thanks, need more info before I paste link");
  CHECK(c.band == Band::kMid);
}

TEST_CASE("empty selection asks for clarification") {
  TopSelection empty;
  empty.message_id = "e";
  ResponsePlan p = generate_response(empty, bundled());
  CHECK(p.rendered_text.find("please clarify") != std::string::npos);
  CHECK(p.band == Band::kLow);
  CHECK_FALSE(p.ask);
  CHECK_FALSE(p.framing);
}

TEST_CASE("bands") {
  CHECK(band_of(0.7) == Band::kHigh);
  CHECK(band_of(0.69) == Band::kMid);
  CHECK(band_of(0.4) == Band::kMid);
  CHECK(band_of(0.39) == Band::kLow);
  CHECK(band_of(0.5, {0.9, 0.6}) == Band::kLow);
}

TEST_CASE("template validation") {
  CHECK_THROWS_AS(parse(""), Error);
  CHECK_THROWS_AS(parse("# comments only\n"), Error);
  CHECK_THROWS_AS(parse("a | PERFORM | * | * | - | hi\n"), Error);
  CHECK_THROWS_AS(parse("a | PERFORM | * | * | - | Send {object}\nz | * | * | * | - | ok\n"), ParseError);
  CHECK_THROWS_AS(parse("a | * | * | * | object | Send {object}\nz | * | * | * | - | ok\n"), ParseError);
  CHECK_THROWS_AS(parse("a | * | * | * | - | I {trigger}\nz | * | * | * | - | ok\n"), ParseError);
  CHECK_THROWS_AS(parse("a | + | - | * | - | {framing_trigger}\nz | * | * | * | - | ok\n"), ParseError);
  CHECK_THROWS_AS(parse("a | + | * | * | - | {name}\nz | * | * | * | - | ok\n"), ParseError);
  CHECK_THROWS_AS(parse("a | + | * | often | - | x\nz | * | * | * | - | ok\n"), ParseError);
  CHECK_THROWS_AS(parse("a | + | * | * | - | x\na | * | * | * | - | ok\n"), ParseError);
  CHECK_NOTHROW(parse("a | + | * | * | object | Send {object} by {trigger}\nz | * | * | * | - | ok\n"));
  CHECK_NOTHROW(parse("a | - | GAIN | * | object | You {framing_trigger} {object}\nz | * | * | * | - | ok\n"));
}

TEST_CASE("some template applies to every selection") {
  std::vector<std::optional<Category>> asks = {std::nullopt, Category::kPerform, Category::kGive};
  std::vector<std::optional<Category>> framings = {std::nullopt, Category::kLose, Category::kGain};
  // Also sweep framing categories in the ask position and vice versa.
  for (Category c : kAllCategories) {
    asks.push_back(c);
    framings.push_back(c);
  }
  for (const auto& a : asks) {
    for (const auto& f : framings) {
      for (double conf : {0.0, 0.1, 0.45, 0.8, 1.0}) {
        for (bool object : {false, true}) {
          TopSelection s;
          s.message_id = "m";
          if (a) s.top_ask = event(*a, "alpha", conf, object);
          if (f) s.top_framing = event(*f, "beta", 1.0, object);
          ResponsePlan p = generate_response(s, bundled());
          CHECK_FALSE(p.rendered_text.empty());
          CHECK(p.rendered_text.find('{') == std::string::npos);
          const ResponseTemplate* chosen = nullptr;
          for (const ResponseTemplate& t : bundled())
            if (t.id == p.template_id) chosen = &t;
          REQUIRE(chosen != nullptr);
          if (chosen->text.find("{trigger}") != std::string::npos)
            CHECK(p.rendered_text.find("alpha") != std::string::npos);
          CHECK(generate_response(s, bundled()).rendered_text == p.rendered_text);
        }
      }
    }
  }
}

TEST_CASE("first applicable template wins") {
  auto t = parse("one | PERFORM | * | * | - | first {trigger}\ntwo | PERFORM | * | * | - | second\nz | * | * | * | - | fallback\n");
  TopSelection s;
  s.top_ask = event(Category::kPerform, "click", 1.0, false);
  CHECK(generate_response(s, t).template_id == "one");
  s.top_ask = event(Category::kGive, "send", 1.0, false);
  CHECK(generate_response(s, t).template_id == "z");
}

TEST_CASE("joint confidence") {
  TopSelection s;
  CHECK(joint_confidence(s) == 0.0);
  s.top_ask = event(Category::kPerform, "click", 0.5, false);
  CHECK(joint_confidence(s) == doctest::Approx(0.5));
  s.top_framing = event(Category::kGain, "win", 0.5, false);
  CHECK(joint_confidence(s) == doctest::Approx(0.25));
}
