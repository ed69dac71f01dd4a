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

#pragma once

#include <askframe/category.hpp>

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace askframe {

// A Levin-style verb class ("10.2 Banish Verbs") aligned with one or more
// ask/framing categories. The category set is the union over the class's
// entries, so it is never empty for a class that appears in a lexicon.
struct SemanticClass {
  std::string id;
  std::string name;
  CategorySet categories;

  friend bool operator==(const SemanticClass&, const SemanticClass&) = default;
};

// One (lemma, class) membership. A verb aligned with two categories in the
// same class is stored once with both categories.
struct VerbEntry {
  std::string lemma;
  std::string class_id;
  CategorySet categories;

  friend bool operator==(const VerbEntry&, const VerbEntry&) = default;
};

struct LexiconMatch {
  std::string class_id;
  Category category;

  friend auto operator<=>(const LexiconMatch&, const LexiconMatch&) = default;
};

// Orders dotted class ids component-wise ("9.1" < "10.2" < "13.5.1").
struct ClassIdOrder {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const;
};

enum class LexiconFormat { kNormalized, kFlatList };

std::optional<LexiconFormat> parse_lexicon_format(std::string_view tag) noexcept;

// Prefix of the synthetic class ids used for flat (class-less) lists.
inline constexpr std::string_view kFlatClassPrefix = "flat.";

// Immutable class-organized verb lexicon.
class Lexicon {
 public:
  using EntryKey = std::pair<std::string, std::string>;  // (lemma, class_id)

  // Validates every invariant and throws askframe::Error on violation.
  // class_names supplies display names; classes without one get "".
  static Lexicon build(std::string name, const std::map<std::string, std::string>& class_names,
                       std::vector<VerbEntry> entries);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const std::map<std::string, SemanticClass, ClassIdOrder>& classes() const noexcept {
    return classes_;
  }
  const std::map<EntryKey, VerbEntry>& entries() const noexcept { return entries_; }
  const SemanticClass* find_class(std::string_view id) const;

  // Every lemma carrying the category in at least one class.
  const std::set<std::string, std::less<>>& lemmas(Category c) const noexcept {
    return index_[static_cast<std::size_t>(c)];
  }

  // All (class, category) pairings for a lowercase lemma, sorted; empty when absent.
  std::vector<LexiconMatch> lookup(std::string_view lemma) const;
  bool contains(std::string_view lemma) const;
  CategorySet categories_of(std::string_view lemma) const;

  // Word count of the longest multiword lemma (0 for an empty lexicon).
  std::size_t max_lemma_words() const noexcept { return max_words_; }

  Lexicon renamed(std::string name) const;

  // Structural equality over classes and entries; the name is not compared.
  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.classes_ == b.classes_ && a.entries_ == b.entries_;
  }

 private:
  Lexicon() = default;

  std::string name_;
  std::map<std::string, SemanticClass, ClassIdOrder> classes_;
  std::map<EntryKey, VerbEntry> entries_;
  std::array<std::set<std::string, std::less<>>, 4> index_;
  std::map<std::string, std::vector<LexiconMatch>, std::less<>> by_lemma_;
  std::size_t max_words_ = 0;
};

// Parses a lexicon. A "#@name <name>" pragma sets the lexicon name, otherwise
// default_name is used. Throws ParseError (with line number) for malformed
// lines, unknown categories and duplicate records, and Error when no entries
// remain.
Lexicon load_lexicon(std::istream& in, LexiconFormat format, std::string default_name = "lexicon");
// Default name is the file stem.
Lexicon load_lexicon_file(const std::string& path, LexiconFormat format);

// Normalized TSV form ordered by class id, lemma, category; starts with a
// "#@name" pragma so the output re-loads to an equal, identically named lexicon.
void write_lexicon(std::ostream& out, const Lexicon& lexicon);
std::string to_normalized_text(const Lexicon& lexicon);

// ---------------------------------------------------------------------------
// Adaptation ledger

enum class EditAction { kAdd, kDelete };

struct LedgerEdit {
  EditAction action = EditAction::kAdd;
  std::string lemma;
  std::string class_id;
  CategorySet categories;
  // Needed when an add introduces a class absent from the lexicon it is
  // applied to. Deletes may carry it so that their inverse can recreate a
  // class the delete emptied.
  std::string class_name;

  friend bool operator==(const LedgerEdit&, const LedgerEdit&) = default;
};

struct AdaptationLedger {
  std::string base_lexicon_name;  // empty: applies to any base
  std::string target_name;        // empty: result keeps the base name
  std::vector<LedgerEdit> edits;

  friend bool operator==(const AdaptationLedger&, const AdaptationLedger&) = default;
};

// Lines are "add|del<TAB>CATEGORY<TAB>class_id<TAB>lemma[<TAB>class_name]".
// Pragmas: "#@base <name>", "#@target <name>".
AdaptationLedger load_ledger(std::istream& in);
AdaptationLedger load_ledger_file(const std::string& path);
void write_ledger(std::ostream& out, const AdaptationLedger& ledger);

// Reverses edit order and swaps add/delete; base and target names swap too.
AdaptationLedger inverse(const AdaptationLedger& ledger);

// Applies edits in order to a copy of base. Throws Error when the ledger
// names a different base, deletes an absent (lemma, class, category), or adds
// one that is already present.
Lexicon apply_ledger(const Lexicon& base, const AdaptationLedger& ledger);

// Ledger whose application to `from` yields `to` (deletes first, then adds).
AdaptationLedger derive_ledger(const Lexicon& from, const Lexicon& to);

// ---------------------------------------------------------------------------
// Diff

// A (class, lemma) membership that gained or lost a category.
struct DiffItem {
  std::string class_id;
  std::string lemma;

  friend auto operator<=>(const DiffItem&, const DiffItem&) = default;
};

struct CategoryDiff {
  std::vector<DiffItem> added;
  std::vector<DiffItem> deleted;
};

struct ClassDiffCounts {
  std::string name;
  std::array<std::size_t, 4> added{};
  std::array<std::size_t, 4> deleted{};

  friend bool operator==(const ClassDiffCounts&, const ClassDiffCounts&) = default;
};

struct LexiconDiff {
  std::string from_name;
  std::string to_name;
  std::array<CategoryDiff, 4> by_category;
  // Only classes with at least one change appear.
  std::map<std::string, ClassDiffCounts, ClassIdOrder> by_class;

  std::size_t added_count(Category c) const {
    return by_category[static_cast<std::size_t>(c)].added.size();
  }
  std::size_t deleted_count(Category c) const {
    return by_category[static_cast<std::size_t>(c)].deleted.size();
  }
  std::size_t class_added(std::string_view class_id, Category c) const;
  std::size_t class_deleted(std::string_view class_id, Category c) const;
  bool empty() const;
};

LexiconDiff diff_lexica(const Lexicon& from, const Lexicon& to);

// Per-category and per-class added/deleted counts as aligned text.
void write_diff_report(std::ostream& out, const LexiconDiff& diff, bool list_lemmas = false);

}  // namespace askframe
