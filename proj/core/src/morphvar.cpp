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
#include <askframe/morphvar.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

#include "strings.hpp"

namespace askframe {

char to_char(WordClass wc) noexcept {
  switch (wc) {
    case WordClass::kNoun: return 'N';
    case WordClass::kVerb: return 'V';
    case WordClass::kAdj: return 'A';
    case WordClass::kAdv: return 'R';
  }
  return '?';
}

std::optional<WordClass> parse_word_class(char c) noexcept {
  switch (c) {
    case 'N': return WordClass::kNoun;
    case 'V': return WordClass::kVerb;
    case 'A': return WordClass::kAdj;
    case 'R': return WordClass::kAdv;
    default: return std::nullopt;
  }
}

namespace {

void validate_cluster(const VariantCluster& c) {
  if (c.members.empty()) throw Error("variant cluster has no members");
  std::size_t verbs = 0;
  for (const VariantMember& m : c.members) {
    if (m.form.empty() || m.form != detail::to_lower(m.form) ||
        m.form.find_first_of(" \t") != std::string::npos)
      throw Error("variant form must be a lowercase word: '" + m.form + "'");
    if (m.pos == WordClass::kVerb) ++verbs;
  }
  if (verbs != 1)
    throw Error("variant cluster must have exactly one verb, found " + std::to_string(verbs) +
                " (" + c.members.front().form + ")");
}

}  // namespace

VariantTable VariantTable::build(std::vector<VariantCluster> clusters) {
  VariantTable table;
  std::set<std::pair<std::string, WordClass>> seen;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    VariantCluster& c = clusters[i];
    validate_cluster(c);
    c.id = i;
    for (const VariantMember& m : c.members) {
      if (m.pos == WordClass::kVerb) c.canonical_verb = m.form;
      if (!seen.emplace(m.form, m.pos).second)
        throw Error("variant form '" + m.form + ":" + to_char(m.pos) + "' in more than one cluster");
      auto& ids = table.form_index_[m.form];
      if (ids.empty() || ids.back() != i) ids.push_back(i);
    }
  }
  table.clusters_ = std::move(clusters);
  return table;
}

VariantTable VariantTable::with_cluster(VariantCluster cluster) const {
  std::vector<VariantCluster> all = clusters_;
  all.push_back(std::move(cluster));
  return build(std::move(all));
}

const std::vector<std::size_t>& VariantTable::clusters_for(std::string_view form) const {
  static const std::vector<std::size_t> kNone;
  auto it = form_index_.find(form);
  return it == form_index_.end() ? kNone : it->second;
}

bool VariantTable::is_verb(std::string_view form) const { return has_pos(form, WordClass::kVerb); }

bool VariantTable::has_pos(std::string_view form, WordClass pos) const {
  for (std::size_t id : clusters_for(form))
    for (const VariantMember& m : clusters_[id].members)
      if (m.form == form && m.pos == pos) return true;
  return false;
}

// ---------------------------------------------------------------------------

namespace {

const std::unordered_map<std::string_view, std::string_view>& irregulars() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"arose", "arise"},      {"arisen", "arise"},       {"became", "become"},
      {"began", "begin"},      {"begun", "begin"},        {"beaten", "beat"},
      {"bled", "bleed"},       {"bought", "buy"},         {"broke", "break"},
      {"broken", "break"},     {"brought", "bring"},      {"built", "build"},
      {"caught", "catch"},     {"chose", "choose"},       {"chosen", "choose"},
      {"dealt", "deal"},       {"did", "do"},             {"done", "do"},
      {"drew", "draw"},        {"drawn", "draw"},         {"dug", "dig"},
      {"fed", "feed"},         {"felt", "feel"},          {"fled", "flee"},
      {"forbade", "forbid"},   {"forbidden", "forbid"},   {"forgave", "forgive"},
      {"forgiven", "forgive"}, {"forgot", "forget"},      {"forgotten", "forget"},
      {"fought", "fight"},     {"found", "find"},         {"froze", "freeze"},
      {"frozen", "freeze"},    {"gave", "give"},          {"given", "give"},
      {"gone", "go"},          {"got", "get"},            {"gotten", "get"},
      {"held", "hold"},        {"hid", "hide"},           {"hidden", "hide"},
      {"kept", "keep"},        {"laid", "lay"},           {"led", "lead"},
      {"left", "leave"},       {"lent", "lend"},          {"lost", "lose"},
      {"made", "make"},        {"meant", "mean"},         {"met", "meet"},
      {"mistook", "mistake"},  {"mistaken", "mistake"},   {"paid", "pay"},
      {"ran", "run"},          {"rang", "ring"},          {"rung", "ring"},
      {"said", "say"},         {"saw", "see"},            {"seen", "see"},
      {"shook", "shake"},      {"shaken", "shake"},       {"sold", "sell"},
      {"sent", "send"},        {"sought", "seek"},        {"spent", "spend"},
      {"stole", "steal"},      {"stolen", "steal"},       {"struck", "strike"},
      {"stricken", "strike"},  {"stuck", "stick"},        {"swore", "swear"},
      {"sworn", "swear"},      {"taken", "take"},         {"took", "take"},
      {"thought", "think"},    {"threw", "throw"},        {"thrown", "throw"},
      {"told", "tell"},        {"tore", "tear"},          {"torn", "tear"},
      {"undertook", "undertake"}, {"undertaken", "undertake"}, {"went", "go"},
      {"withdrew", "withdraw"}, {"withdrawn", "withdraw"}, {"won", "win"},
      {"wore", "wear"},        {"worn", "wear"},          {"wrote", "write"},
      {"written", "write"},
  };
  return table;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool doubled_consonant_end(std::string_view s) {
  return s.size() >= 3 && s[s.size() - 1] == s[s.size() - 2] && !is_vowel(s.back()) &&
         s.back() != 's' && s.back() != 'l' && s.back() != 'f' && s.back() != 'z';
}

}  // namespace

std::vector<std::string> inflection_candidates(std::string_view word) {
  std::vector<std::string> out;
  auto push = [&](std::string_view stem, std::string_view tail = {}) {
    if (stem.empty() || stem.size() + tail.size() < 2) return;
    std::string cand = std::string(stem) + std::string(tail);
    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(std::move(cand));
  };
  out.emplace_back(word);
  if (auto it = irregulars().find(word); it != irregulars().end()) push(it->second);
  const std::size_t n = word.size();

  if (ends_with(word, "ies") && n > 4) push(word.substr(0, n - 3), "y");
  if (ends_with(word, "s") && !ends_with(word, "ss") && !ends_with(word, "us") &&
      !ends_with(word, "is"))
    push(word.substr(0, n - 1));
  if (ends_with(word, "es") && n > 4) push(word.substr(0, n - 2));

  if (ends_with(word, "ied") && n > 4) push(word.substr(0, n - 3), "y");
  if (ends_with(word, "ed") && !ends_with(word, "eed")) {
    std::string_view stem = word.substr(0, n - 2);
    push(stem);
    push(word.substr(0, n - 1));
    if (doubled_consonant_end(stem)) push(stem.substr(0, stem.size() - 1));
  }

  if (ends_with(word, "ing") && n > 4) {
    std::string_view stem = word.substr(0, n - 3);
    if (ends_with(stem, "y") && stem.size() >= 2) push(stem.substr(0, stem.size() - 1), "ie");
    push(stem);
    push(stem, "e");
    if (doubled_consonant_end(stem)) push(stem.substr(0, stem.size() - 1));
  }
  return out;
}

std::optional<std::string> strip_suffix(std::string_view word) {
  auto stem_ok = [](std::string_view stem) { return stem.size() >= 3; };
  const std::size_t n = word.size();
  if (ends_with(word, "tion")) {
    std::string_view stem = word.substr(0, n - 4);
    if (!stem_ok(stem)) return std::nullopt;
    return std::string(stem) + (is_vowel(stem.back()) ? "te" : "t");
  }
  if (ends_with(word, "ment")) {
    std::string_view stem = word.substr(0, n - 4);
    if (stem_ok(stem)) return std::string(stem);
    return std::nullopt;
  }
  for (std::string_view suffix : {std::string_view("ing"), std::string_view("ed")}) {
    if (ends_with(word, suffix)) {
      std::string_view stem = word.substr(0, n - suffix.size());
      if (stem_ok(stem)) return std::string(stem);
      return std::nullopt;
    }
  }
  if (ends_with(word, "s") && !ends_with(word, "ss") && stem_ok(word.substr(0, n - 1)))
    return std::string(word.substr(0, n - 1));
  return std::nullopt;
}

namespace {

// First inflection candidate that is a cluster member, if any.
std::optional<std::string> table_hit(const VariantTable& table, std::string_view word) {
  for (std::string& cand : inflection_candidates(word))
    if (table.contains(cand)) return std::move(cand);
  return std::nullopt;
}

}  // namespace

Normalization normalize(const VariantTable& table, std::string_view surface_form) {
  Normalization out;
  std::string word = detail::normalize_lemma(surface_form);
  if (word.empty()) return out;
  if (auto hit = table_hit(table, word)) {
    out.source = VariantSource::kTable;
    for (std::size_t id : table.clusters_for(*hit))
      out.lemmas.push_back(table.clusters()[id].canonical_verb);
    out.matched_form = std::move(*hit);
  } else {
    out.source = VariantSource::kFallback;
    // A guess that normalizes elsewhere through the table is dropped so that
    // every returned lemma normalizes back to itself.
    if (auto guess = strip_suffix(word); guess && !table_hit(table, *guess))
      out.lemmas.push_back(std::move(*guess));
    out.lemmas.push_back(word);
  }
  std::sort(out.lemmas.begin(), out.lemmas.end());
  out.lemmas.erase(std::unique(out.lemmas.begin(), out.lemmas.end()), out.lemmas.end());
  return out;
}

// ---------------------------------------------------------------------------

VariantTable load_variants(std::istream& in) {
  std::vector<VariantCluster> clusters;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;
    VariantCluster cluster;
    std::size_t pos = 0;
    while (pos < view.size()) {
      std::size_t end = view.find_first_of(" \t", pos);
      if (end == std::string_view::npos) end = view.size();
      std::string_view tok = view.substr(pos, end - pos);
      pos = view.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) pos = view.size();
      std::size_t colon = tok.rfind(':');
      if (colon == std::string_view::npos || colon == 0 || colon + 2 != tok.size())
        throw ParseError("expected form:POS token", line_no, line);
      auto wc = parse_word_class(tok.back());
      if (!wc) throw ParseError("unknown part of speech", line_no, line);
      cluster.members.push_back({detail::to_lower(tok.substr(0, colon)), *wc});
    }
    std::size_t verbs = static_cast<std::size_t>(
        std::count_if(cluster.members.begin(), cluster.members.end(),
                      [](const VariantMember& m) { return m.pos == WordClass::kVerb; }));
    if (verbs != 1)
      throw ParseError(verbs == 0 ? "cluster without a verb" : "cluster with multiple verbs",
                       line_no, line);
    clusters.push_back(std::move(cluster));
  }
  if (in.bad()) throw Error("read failure while loading variants");
  try {
    return VariantTable::build(std::move(clusters));
  } catch (const Error& e) {
    throw Error(std::string("variants: ") + e.what());
  }
}

VariantTable load_variants_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open variant file '" + path + "'");
  try {
    return load_variants(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.reason(), e.line(), e.content());
  }
}

void write_variants(std::ostream& out, const VariantTable& table) {
  for (const VariantCluster& c : table.clusters()) {
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (i > 0) out << ' ';
      out << c.members[i].form << ':' << to_char(c.members[i].pos);
    }
    out << '\n';
  }
}

}  // namespace askframe
