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

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>

#include "strings.hpp"

namespace askframe {

namespace {

constexpr std::string_view kBasePragma = "#@base";
constexpr std::string_view kTargetPragma = "#@target";

bool pragma_value(std::string_view line, std::string_view pragma, std::string& value) {
  if (line.substr(0, pragma.size()) != pragma) return false;
  std::string_view rest = line.substr(pragma.size());
  if (!rest.empty() && rest.front() != ' ' && rest.front() != '\t') return false;
  value = std::string(detail::trim(rest));
  return true;
}

std::string_view action_token(EditAction a) { return a == EditAction::kAdd ? "add" : "del"; }

std::string describe(const LedgerEdit& e, Category c) {
  return std::string(action_token(e.action)) + " " + std::string(to_string(c)) + " " +
         e.class_id + " '" + e.lemma + "'";
}

}  // namespace

AdaptationLedger load_ledger(std::istream& in) {
  AdaptationLedger ledger;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      std::string value;
      if (pragma_value(view, kBasePragma, value))
        ledger.base_lexicon_name = value;
      else if (pragma_value(view, kTargetPragma, value))
        ledger.target_name = value;
      continue;
    }
    auto fields = detail::split(line, '\t');
    if (fields.size() != 4 && fields.size() != 5)
      throw ParseError("expected 4 or 5 tab-separated fields", line_no, line);
    LedgerEdit edit;
    std::string_view action = detail::trim(fields[0]);
    if (action == "add")
      edit.action = EditAction::kAdd;
    else if (action == "del")
      edit.action = EditAction::kDelete;
    else
      throw ParseError("unknown action", line_no, line);
    auto cat = parse_category(detail::trim(fields[1]));
    if (!cat) throw ParseError("unknown category", line_no, line);
    edit.categories.insert(*cat);
    edit.class_id = std::string(detail::trim(fields[2]));
    if (edit.class_id.empty()) throw ParseError("empty class id", line_no, line);
    edit.lemma = detail::normalize_lemma(fields[3]);
    if (edit.lemma.empty()) throw ParseError("empty lemma", line_no, line);
    if (fields.size() == 5) edit.class_name = std::string(detail::trim(fields[4]));
    ledger.edits.push_back(std::move(edit));
  }
  if (in.bad()) throw Error("read failure while loading ledger");
  return ledger;
}

AdaptationLedger load_ledger_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open ledger file '" + path + "'");
  try {
    return load_ledger(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.reason(), e.line(), e.content());
  }
}

void write_ledger(std::ostream& out, const AdaptationLedger& ledger) {
  out << "# Adaptation ledger: add|del<TAB>CATEGORY<TAB>class_id<TAB>lemma[<TAB>class_name]\n";
  if (!ledger.base_lexicon_name.empty()) out << kBasePragma << ' ' << ledger.base_lexicon_name << '\n';
  if (!ledger.target_name.empty()) out << kTargetPragma << ' ' << ledger.target_name << '\n';
  for (const LedgerEdit& e : ledger.edits) {
    for (Category c : e.categories.members()) {
      out << action_token(e.action) << '\t' << to_string(c) << '\t' << e.class_id << '\t' << e.lemma;
      if (!e.class_name.empty()) out << '\t' << e.class_name;
      out << '\n';
    }
  }
}

AdaptationLedger inverse(const AdaptationLedger& ledger) {
  AdaptationLedger inv;
  inv.base_lexicon_name = ledger.target_name;
  inv.target_name = ledger.base_lexicon_name;
  inv.edits.assign(ledger.edits.rbegin(), ledger.edits.rend());
  for (LedgerEdit& e : inv.edits)
    e.action = e.action == EditAction::kAdd ? EditAction::kDelete : EditAction::kAdd;
  return inv;
}

Lexicon apply_ledger(const Lexicon& base, const AdaptationLedger& ledger) {
  if (!ledger.base_lexicon_name.empty() && ledger.base_lexicon_name != base.name())
    throw Error("ledger expects base lexicon '" + ledger.base_lexicon_name + "' but got '" +
                base.name() + "'");
  std::map<Lexicon::EntryKey, CategorySet> entries;
  for (const auto& [key, e] : base.entries()) entries.emplace(key, e.categories);
  std::map<std::string, std::string> names;
  for (const auto& [id, cls] : base.classes()) names.emplace(id, cls.name);
  std::map<std::string, std::size_t> live;
  for (const auto& [key, cats] : entries) ++live[key.second];

  for (const LedgerEdit& e : ledger.edits) {
    Lexicon::EntryKey key{e.lemma, e.class_id};
    for (Category c : e.categories.members()) {
      auto it = entries.find(key);
      if (e.action == EditAction::kDelete) {
        if (it == entries.end() || !it->second.contains(c))
          throw Error("cannot apply " + describe(e, c) + ": entry absent");
        it->second.erase(c);
        if (it->second.empty()) {
          entries.erase(it);
          --live[e.class_id];
        }
        continue;
      }
      if (it != entries.end() && it->second.contains(c))
        throw Error("cannot apply " + describe(e, c) + ": entry already present");
      if (live[e.class_id] == 0) {
        if (e.class_name.empty() && names.count(e.class_id) == 0)
          throw Error("cannot apply " + describe(e, c) + ": unknown class without inline name");
        if (!e.class_name.empty()) names[e.class_id] = e.class_name;
      }
      if (it == entries.end()) {
        entries.emplace(key, CategorySet{c});
        ++live[e.class_id];
      } else {
        it->second.insert(c);
      }
    }
  }

  std::vector<VerbEntry> out;
  out.reserve(entries.size());
  for (const auto& [key, cats] : entries) out.push_back({key.first, key.second, cats});
  std::string name = ledger.target_name.empty() ? base.name() : ledger.target_name;
  if (out.empty()) throw Error("ledger application leaves an empty lexicon");
  return Lexicon::build(std::move(name), names, std::move(out));
}

// ---------------------------------------------------------------------------

std::size_t LexiconDiff::class_added(std::string_view class_id, Category c) const {
  auto it = by_class.find(class_id);
  return it == by_class.end() ? 0 : it->second.added[static_cast<std::size_t>(c)];
}

std::size_t LexiconDiff::class_deleted(std::string_view class_id, Category c) const {
  auto it = by_class.find(class_id);
  return it == by_class.end() ? 0 : it->second.deleted[static_cast<std::size_t>(c)];
}

bool LexiconDiff::empty() const {
  return std::all_of(by_category.begin(), by_category.end(),
                     [](const CategoryDiff& d) { return d.added.empty() && d.deleted.empty(); });
}

namespace {

CategorySet categories_at(const Lexicon& lex, const Lexicon::EntryKey& key) {
  auto it = lex.entries().find(key);
  return it == lex.entries().end() ? CategorySet{} : it->second.categories;
}

bool item_less(const DiffItem& a, const DiffItem& b) {
  if (a.class_id != b.class_id) return detail::class_id_less(a.class_id, b.class_id);
  return a.lemma < b.lemma;
}

}  // namespace

LexiconDiff diff_lexica(const Lexicon& from, const Lexicon& to) {
  LexiconDiff diff;
  diff.from_name = from.name();
  diff.to_name = to.name();
  std::set<Lexicon::EntryKey> keys;
  for (const auto& [key, e] : from.entries()) keys.insert(key);
  for (const auto& [key, e] : to.entries()) keys.insert(key);

  for (const Lexicon::EntryKey& key : keys) {
    CategorySet a = categories_at(from, key);
    CategorySet b = categories_at(to, key);
    CategorySet gained = b.without(a);
    CategorySet lost = a.without(b);
    if (gained.empty() && lost.empty()) continue;
    ClassDiffCounts& counts = diff.by_class[key.second];
    const SemanticClass* cls = to.find_class(key.second);
    if (cls == nullptr || cls->name.empty()) cls = from.find_class(key.second);
    if (cls != nullptr && counts.name.empty()) counts.name = cls->name;
    for (Category c : gained.members()) {
      diff.by_category[static_cast<std::size_t>(c)].added.push_back({key.second, key.first});
      ++counts.added[static_cast<std::size_t>(c)];
    }
    for (Category c : lost.members()) {
      diff.by_category[static_cast<std::size_t>(c)].deleted.push_back({key.second, key.first});
      ++counts.deleted[static_cast<std::size_t>(c)];
    }
  }
  for (CategoryDiff& d : diff.by_category) {
    std::sort(d.added.begin(), d.added.end(), item_less);
    std::sort(d.deleted.begin(), d.deleted.end(), item_less);
  }
  return diff;
}

AdaptationLedger derive_ledger(const Lexicon& from, const Lexicon& to) {
  LexiconDiff diff = diff_lexica(from, to);
  AdaptationLedger ledger;
  ledger.base_lexicon_name = from.name();
  ledger.target_name = to.name();
  auto emit = [&](EditAction action, Category c, const DiffItem& item, const Lexicon& source) {
    const SemanticClass* cls = source.find_class(item.class_id);
    ledger.edits.push_back({action, item.lemma, item.class_id, CategorySet{c}, cls->name});
  };
  for (Category c : kAllCategories)
    for (const DiffItem& item : diff.by_category[static_cast<std::size_t>(c)].deleted)
      emit(EditAction::kDelete, c, item, from);
  for (Category c : kAllCategories)
    for (const DiffItem& item : diff.by_category[static_cast<std::size_t>(c)].added)
      emit(EditAction::kAdd, c, item, to);
  return ledger;
}

void write_diff_report(std::ostream& out, const LexiconDiff& diff, bool list_lemmas) {
  out << "diff " << diff.from_name << " -> " << diff.to_name << '\n';
  out << std::left << std::setw(10) << "category" << std::right << std::setw(8) << "added"
      << std::setw(8) << "deleted" << '\n';
  for (Category c : kAllCategories)
    out << std::left << std::setw(10) << to_string(c) << std::right << std::setw(8)
        << diff.added_count(c) << std::setw(8) << diff.deleted_count(c) << '\n';
  if (diff.by_class.empty()) return;
  out << '\n'
      << std::left << std::setw(10) << "class" << std::setw(28) << "name" << std::setw(10)
      << "category" << std::right << std::setw(8) << "added" << std::setw(8) << "deleted" << '\n';
  for (const auto& [id, counts] : diff.by_class) {
    for (Category c : kAllCategories) {
      std::size_t i = static_cast<std::size_t>(c);
      if (counts.added[i] == 0 && counts.deleted[i] == 0) continue;
      out << std::left << std::setw(10) << id << std::setw(28) << counts.name << std::setw(10)
          << to_string(c) << std::right << std::setw(8) << counts.added[i] << std::setw(8)
          << counts.deleted[i] << '\n';
    }
  }
  if (!list_lemmas) return;
  for (Category c : kAllCategories) {
    const CategoryDiff& d = diff.by_category[static_cast<std::size_t>(c)];
    for (const DiffItem& item : d.deleted)
      out << "- " << to_string(c) << ' ' << item.class_id << ' ' << item.lemma << '\n';
    for (const DiffItem& item : d.added)
      out << "+ " << to_string(c) << ' ' << item.class_id << ' ' << item.lemma << '\n';
  }
}

}  // namespace askframe
