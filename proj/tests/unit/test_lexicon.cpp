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
#include <askframe/lexicon.hpp>

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"

using namespace askframe;
using askframe::testing::lcs_plus;
using askframe::testing::stylus;
using askframe::testing::thesaurus;

namespace {

Lexicon parse(const std::string& text, LexiconFormat f = LexiconFormat::kNormalized) {
  std::istringstream in(text);
  return load_lexicon(in, f, "test");
}

}  // namespace

TEST_CASE("category kinds split into two asks and two framings") {
  int asks = 0, framings = 0;
  for (Category c : kAllCategories) (kind_of(c) == Kind::kAsk ? asks : framings)++;
  CHECK(asks == 2);
  CHECK(framings == 2);
  CHECK(kind_of(Category::kPerform) == Kind::kAsk);
  CHECK(kind_of(Category::kGive) == Kind::kAsk);
  CHECK(kind_of(Category::kLose) == Kind::kFraming);
  CHECK(kind_of(Category::kGain) == Kind::kFraming);
  for (Category c : kAllCategories) CHECK(parse_category(to_string(c)) == c);
}

TEST_CASE("load_lexicon reads normalized entries") {
  Lexicon lex = parse("GIVE\t13.2\tContribute Verbs\tdonate\n");
  CHECK(lex.lemmas(Category::kGive).count("donate") == 1);
  CHECK(lex.size() == 1);
  CHECK(lex.find_class("13.2")->name == "Contribute Verbs");
}

TEST_CASE("load_lexicon rejects bad input") {
  CHECK_THROWS_WITH_AS(parse(""), doctest::Contains("empty lexicon"), Error);
  CHECK_THROWS_AS(parse("# only a comment\n"), Error);
  CHECK_THROWS_AS(parse("GIVE\t13.2\tContribute Verbs\n"), ParseError);
  CHECK_THROWS_AS(parse("TAKE\t13.2\t\tdonate\n"), ParseError);
  CHECK_THROWS_AS(parse("GIVE\t13.2\t\tdonate\nGIVE\t13.2\t\tdonate\n"), ParseError);
  CHECK_THROWS_AS(parse("GIVE\t13.2\tA\tdonate\nGIVE\t13.2\tB\tgive\n"), ParseError);
  try {
    parse("GIVE\t13.2\t\tdonate\nbogus line\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.content() == "bogus line");
  }
}

TEST_CASE("multi-category verbs are stored once per class") {
  Lexicon lex = parse("PERFORM\t10.5\tSteal Verbs\tredeem\nLOSE\t10.5\tSteal Verbs\tredeem\n");
  CHECK(lex.size() == 1);
  CHECK(lex.categories_of("redeem") == CategorySet{Category::kPerform, Category::kLose});
  CHECK(lex.find_class("10.5")->categories == CategorySet{Category::kPerform, Category::kLose});
}

TEST_CASE("lemmas are normalized at load") {
  Lexicon lex = parse("PERFORM\t30.2\t\t  Sign   Up \n");
  CHECK(lex.contains("sign up"));
  CHECK(lex.max_lemma_words() == 2);
}

TEST_CASE("lookup on the seed lexica") {
  CHECK(stylus().lookup("donate") == std::vector<LexiconMatch>{{"13.2", Category::kGive}});
  CHECK(lcs_plus().lookup("zzzz-not-a-verb").empty());
  auto forfeit = lcs_plus().lookup("forfeit");
  CHECK(std::find(forfeit.begin(), forfeit.end(), LexiconMatch{"10.5", Category::kLose}) != forfeit.end());
}

TEST_CASE("flat lists get one synthetic class per category") {
  const Lexicon& t = thesaurus();
  CHECK(t.name() == "thesaurus");
  for (const auto& [id, cls] : t.classes()) {
    CHECK(id.rfind(std::string(kFlatClassPrefix), 0) == 0);
    CHECK(cls.categories.size() == 1);
  }
  CHECK(t.lookup("do") == std::vector<LexiconMatch>{{"flat.PERFORM", Category::kPerform}});
}

TEST_CASE("flat list headers may name a class") {
  Lexicon lex = parse("[GIVE 13.2 Contribute Verbs]\ndonate\ncontribute\n[LOSE]\nforfeit\n", LexiconFormat::kFlatList);
  CHECK(lex.find_class("13.2")->name == "Contribute Verbs");
  CHECK(lex.lookup("forfeit") == std::vector<LexiconMatch>{{"flat.LOSE", Category::kLose}});
}

TEST_CASE("index soundness on the seeds") {
  for (const Lexicon* lex : {&stylus(), &lcs_plus(), &thesaurus()}) {
    for (Category c : kAllCategories) {
      std::set<std::string> expected;
      for (const auto& [key, e] : lex->entries())
        if (e.categories.contains(c)) expected.insert(e.lemma);
      CHECK(std::set<std::string>(lex->lemmas(c).begin(), lex->lemmas(c).end()) == expected);
    }
    for (const auto& [key, e] : lex->entries()) {
      const SemanticClass* cls = lex->find_class(e.class_id);
      REQUIRE(cls != nullptr);
      CHECK(e.categories.is_subset_of(cls->categories));
    }
  }
}

TEST_CASE("serialize and re-load gives an equal lexicon") {
  for (const Lexicon* lex : {&stylus(), &lcs_plus(), &thesaurus()}) {
    std::string text = to_normalized_text(*lex);
    Lexicon again = parse(text);
    CHECK(again == *lex);
    CHECK(again.name() == lex->name());
    CHECK(to_normalized_text(again) == text);
  }
}

TEST_CASE("random lexica round-trip with exact entry counts") {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    std::set<std::pair<std::string, std::string>> keys;
    std::ostringstream text;
    int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      std::string lemma = "v" + std::to_string(rng() % 30);
      std::string cls = std::to_string(rng() % 5) + "." + std::to_string(rng() % 3);
      if (!keys.insert({lemma, cls}).second) continue;
      Category c = kAllCategories[rng() % 4];
      text << to_string(c) << '\t' << cls << "\tclass " << cls << '\t' << lemma << '\n';
    }
    Lexicon lex = parse(text.str());
    CHECK(lex.size() == keys.size());
    CHECK(parse(to_normalized_text(lex)) == lex);
  }
}

TEST_CASE("seed files are already in normalized form") {
  CHECK(askframe::testing::read_file(askframe::testing::data_path("lexicon/stylus_seed.tsv")) ==
        to_normalized_text(stylus()));
  CHECK(askframe::testing::read_file(askframe::testing::data_path("lexicon/lcs_plus_seed.tsv")) ==
        to_normalized_text(lcs_plus()));
}
