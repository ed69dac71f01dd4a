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

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "fixtures.hpp"

using namespace askframe;
using askframe::testing::data_path;
using askframe::testing::lcs_plus;
using askframe::testing::stylus;

namespace {

AdaptationLedger ledger_from(const std::string& text) {
  std::istringstream in(text);
  return load_ledger(in);
}

const AdaptationLedger& seed_ledger() {
  static const AdaptationLedger l = load_ledger_file(data_path("lexicon/stylus_to_lcs_plus.ledger"));
  return l;
}

using Triple = std::tuple<std::string, std::string, Category>;

std::set<Triple> triples(const Lexicon& lex) {
  std::set<Triple> out;
  for (const auto& [key, e] : lex.entries())
    for (Category c : e.categories.members()) out.insert({e.lemma, e.class_id, c});
  return out;
}

}  // namespace

TEST_CASE("deleting banish from 10.2") {
  AdaptationLedger l = ledger_from("del\tPERFORM\t10.2\tbanish\n");
  Lexicon out = apply_ledger(stylus(), l);
  CHECK_FALSE(out.contains("banish"));
  CHECK(out.size() == stylus().size() - 1);
  CHECK(stylus().contains("banish"));
}

TEST_CASE("empty ledger is the identity") {
  CHECK(apply_ledger(stylus(), AdaptationLedger{}) == stylus());
}

TEST_CASE("ledger errors") {
  CHECK_THROWS_AS(apply_ledger(stylus(), ledger_from("del\tPERFORM\t10.2\tzzz\n")), Error);
  CHECK_THROWS_AS(apply_ledger(stylus(), ledger_from("add\tPERFORM\t10.2\tbanish\n")), Error);
  CHECK_THROWS_AS(apply_ledger(stylus(), ledger_from("add\tPERFORM\t99.9\tzap\n")), Error);
  CHECK_THROWS_AS(apply_ledger(stylus(), ledger_from("#@base thesaurus\n")), Error);
  CHECK_THROWS_AS(ledger_from("move\tPERFORM\t10.2\tbanish\n"), ParseError);
  Lexicon added = apply_ledger(stylus(), ledger_from("add\tPERFORM\t99.9\tzap\tZap Verbs\n"));
  CHECK(added.find_class("99.9")->name == "Zap Verbs");
}

TEST_CASE("seed ledger reproduces the LCS+ seed") {
  Lexicon out = apply_ledger(stylus(), seed_ledger());
  CHECK(out == lcs_plus());
  CHECK(out.name() == "lcs_plus");
}

TEST_CASE("ledger count arithmetic matches a brute-force recount") {
  std::mt19937 rng(11);
  const std::set<Triple> base = triples(stylus());
  std::vector<Triple> present(base.begin(), base.end());
  for (int round = 0; round < 40; ++round) {
    std::set<Triple> model = triples(stylus());
    std::shuffle(present.begin(), present.end(), rng);
    std::size_t d = rng() % 20, a = rng() % 20;
    AdaptationLedger l;
    for (std::size_t i = 0; i < d; ++i) {
      auto [lemma, cls, cat] = present[i];
      l.edits.push_back({EditAction::kDelete, lemma, cls, CategorySet{cat}, ""});
      model.erase(present[i]);
    }
    for (std::size_t i = 0; i < a; ++i) {
      std::string lemma = "fresh" + std::to_string(round) + "x" + std::to_string(i);
      const auto& [ignored, cls, cat] = present[d + i];
      l.edits.push_back({EditAction::kAdd, lemma, cls, CategorySet{cat}, ""});
      model.insert({lemma, cls, cat});
    }
    Lexicon out = apply_ledger(stylus(), l);
    CHECK(triples(out) == model);
    CHECK(triples(out).size() == triples(stylus()).size() - d + a);
  }
}

TEST_CASE("applying a ledger then its inverse restores the base") {
  CHECK(apply_ledger(apply_ledger(stylus(), seed_ledger()), inverse(seed_ledger())) == stylus());
  std::mt19937 rng(3);
  const std::set<Triple> base = triples(lcs_plus());
  std::vector<Triple> present(base.begin(), base.end());
  for (int round = 0; round < 30; ++round) {
    std::shuffle(present.begin(), present.end(), rng);
    AdaptationLedger l;
    const std::size_t d = 1 + rng() % 15;
    for (std::size_t i = 0; i < d; ++i) {
      auto [lemma, cls, cat] = present[i];
      l.edits.push_back({EditAction::kDelete, lemma, cls, CategorySet{cat},
                         lcs_plus().find_class(cls)->name});
    }
    CHECK(apply_ledger(apply_ledger(lcs_plus(), l), inverse(l)) == lcs_plus());
  }
}

TEST_CASE("ledger text round-trip") {
  std::ostringstream out;
  write_ledger(out, seed_ledger());
  CHECK(ledger_from(out.str()) == seed_ledger());
}

TEST_CASE("diff over the seeds matches the expected partition") {
  LexiconDiff d = diff_lexica(stylus(), lcs_plus());
  CHECK(d.deleted_count(Category::kPerform) == 6);
  CHECK(d.added_count(Category::kPerform) == 44);
  CHECK(d.deleted_count(Category::kLose) == 174);
  CHECK(d.added_count(Category::kLose) == 11);
  for (Category c : {Category::kGive, Category::kGain}) {
    CHECK(d.added_count(c) == 0);
    CHECK(d.deleted_count(c) == 0);
  }
  CHECK(d.class_deleted("10.2", Category::kPerform) == 5);
  CHECK(d.class_deleted("30.2", Category::kPerform) == 1);
  CHECK(d.class_added("30.2", Category::kPerform) == 44);
  const std::map<std::string, std::size_t> lose_deleted = {
      {"29.2", 16}, {"29.7", 5}, {"29.8", 35}, {"31.1", 91}, {"31.2", 26}, {"31.3", 1}};
  for (const auto& [cls, n] : lose_deleted) CHECK(d.class_deleted(cls, Category::kLose) == n);
  CHECK(d.class_added("10.5", Category::kLose) == 11);
}

TEST_CASE("diff properties") {
  CHECK(diff_lexica(stylus(), stylus()).empty());
  LexiconDiff ab = diff_lexica(stylus(), lcs_plus());
  LexiconDiff ba = diff_lexica(lcs_plus(), stylus());
  for (Category c : kAllCategories) {
    std::size_t i = static_cast<std::size_t>(c);
    CHECK(ab.by_category[i].added == ba.by_category[i].deleted);
    CHECK(ab.by_category[i].deleted == ba.by_category[i].added);
    std::size_t added = 0, deleted = 0;
    for (const auto& [cls, counts] : ab.by_class) {
      added += counts.added[i];
      deleted += counts.deleted[i];
    }
    CHECK(added == ab.added_count(c));
    CHECK(deleted == ab.deleted_count(c));
  }
}

TEST_CASE("diff reports exactly the net edits of a ledger") {
  std::set<Triple> before = triples(stylus()), after = triples(lcs_plus());
  LexiconDiff d = diff_lexica(stylus(), apply_ledger(stylus(), seed_ledger()));
  for (Category c : kAllCategories) {
    std::set<std::pair<std::string, std::string>> added, deleted;
    for (const auto& [lemma, cls, cat] : after)
      if (cat == c && !before.count({lemma, cls, cat})) added.insert({cls, lemma});
    for (const auto& [lemma, cls, cat] : before)
      if (cat == c && !after.count({lemma, cls, cat})) deleted.insert({cls, lemma});
    std::set<std::pair<std::string, std::string>> got_added, got_deleted;
    for (const DiffItem& i : d.by_category[static_cast<std::size_t>(c)].added) got_added.insert({i.class_id, i.lemma});
    for (const DiffItem& i : d.by_category[static_cast<std::size_t>(c)].deleted) got_deleted.insert({i.class_id, i.lemma});
    CHECK(got_added == added);
    CHECK(got_deleted == deleted);
  }
}

TEST_CASE("derived ledger transforms one lexicon into the other") {
  AdaptationLedger l = derive_ledger(stylus(), lcs_plus());
  CHECK(apply_ledger(stylus(), l) == lcs_plus());
  CHECK(apply_ledger(lcs_plus(), inverse(l)) == stylus());
}
