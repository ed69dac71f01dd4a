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
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "strings.hpp"

namespace askframe {

bool ClassIdOrder::operator()(std::string_view a, std::string_view b) const {
  return detail::class_id_less(a, b);
}

std::optional<LexiconFormat> parse_lexicon_format(std::string_view tag) noexcept {
  if (tag == "normalized" || tag == "tsv") return LexiconFormat::kNormalized;
  if (tag == "flatlist" || tag == "flat") return LexiconFormat::kFlatList;
  return std::nullopt;
}

namespace {

std::size_t word_count(std::string_view lemma) {
  return static_cast<std::size_t>(std::count(lemma.begin(), lemma.end(), ' ')) + 1;
}

bool valid_class_id(std::string_view id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Lexicon Lexicon::build(std::string name, const std::map<std::string, std::string>& class_names,
                       std::vector<VerbEntry> entries) {
  Lexicon lex;
  lex.name_ = std::move(name);
  for (VerbEntry& e : entries) {
    if (!detail::is_normalized_lemma(e.lemma))
      throw Error("lexicon '" + lex.name_ + "': lemma not normalized: '" + e.lemma + "'");
    if (!valid_class_id(e.class_id))
      throw Error("lexicon '" + lex.name_ + "': invalid class id '" + e.class_id + "'");
    if (e.categories.empty())
      throw Error("lexicon '" + lex.name_ + "': entry '" + e.lemma + "' in class " + e.class_id +
                  " has no category");
    EntryKey key{e.lemma, e.class_id};
    auto [it, fresh] = lex.entries_.try_emplace(key, e);
    if (!fresh) {
      if (!(it->second.categories & e.categories).empty())
        throw Error("lexicon '" + lex.name_ + "': duplicate entry '" + e.lemma + "' in class " +
                    e.class_id);
      it->second.categories = it->second.categories | e.categories;
    }
  }
  for (const auto& [key, e] : lex.entries_) {
    auto [it, fresh] = lex.classes_.try_emplace(e.class_id);
    if (fresh) {
      it->second.id = e.class_id;
      if (auto n = class_names.find(e.class_id); n != class_names.end()) it->second.name = n->second;
    }
    it->second.categories = it->second.categories | e.categories;
    for (Category c : e.categories.members()) {
      lex.index_[static_cast<std::size_t>(c)].insert(e.lemma);
      lex.by_lemma_[e.lemma].push_back({e.class_id, c});
    }
    lex.max_words_ = std::max(lex.max_words_, word_count(e.lemma));
  }
  for (auto& [lemma, matches] : lex.by_lemma_) std::sort(matches.begin(), matches.end());
  return lex;
}

const SemanticClass* Lexicon::find_class(std::string_view id) const {
  auto it = classes_.find(id);
  return it == classes_.end() ? nullptr : &it->second;
}

std::vector<LexiconMatch> Lexicon::lookup(std::string_view lemma) const {
  auto it = by_lemma_.find(lemma);
  if (it == by_lemma_.end()) return {};
  return it->second;
}

bool Lexicon::contains(std::string_view lemma) const { return by_lemma_.count(lemma) > 0; }

CategorySet Lexicon::categories_of(std::string_view lemma) const {
  CategorySet out;
  auto it = by_lemma_.find(lemma);
  if (it == by_lemma_.end()) return out;
  for (const LexiconMatch& m : it->second) out.insert(m.category);
  return out;
}

Lexicon Lexicon::renamed(std::string name) const {
  Lexicon copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kNamePragma = "#@name";

bool read_pragma(std::string_view line, std::string_view pragma, std::string& value) {
  if (line.substr(0, pragma.size()) != pragma) return false;
  std::string_view rest = line.substr(pragma.size());
  if (!rest.empty() && !std::isspace(static_cast<unsigned char>(rest.front()))) return false;
  value = std::string(detail::trim(rest));
  return true;
}

struct LoadState {
  std::string name;
  std::map<std::string, std::string> class_names;
  std::vector<VerbEntry> entries;
  std::set<std::tuple<std::string, std::string, Category>> seen;

  void add(std::size_t line_no, const std::string& line, Category cat, const std::string& class_id,
           const std::string& class_name, const std::string& lemma) {
    if (!seen.emplace(lemma, class_id, cat).second)
      throw ParseError("duplicate entry (" + lemma + ", " + class_id + ", " +
                           std::string(to_string(cat)) + ")",
                       line_no, line);
    auto [it, fresh] = class_names.try_emplace(class_id, class_name);
    if (!fresh && !class_name.empty()) {
      if (it->second.empty())
        it->second = class_name;
      else if (it->second != class_name)
        throw ParseError("conflicting name for class " + class_id, line_no, line);
    }
    entries.push_back({lemma, class_id, CategorySet{cat}});
  }
};

void parse_normalized(std::istream& in, LoadState& st) {
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      std::string value;
      if (read_pragma(view, kNamePragma, value) && !value.empty()) st.name = value;
      continue;
    }
    auto fields = detail::split(line, '\t');
    if (fields.size() != 4) throw ParseError("expected 4 tab-separated fields", line_no, line);
    auto cat = parse_category(detail::trim(fields[0]));
    if (!cat) throw ParseError("unknown category", line_no, line);
    std::string class_id(detail::trim(fields[1]));
    if (!valid_class_id(class_id)) throw ParseError("invalid class id", line_no, line);
    std::string lemma = detail::normalize_lemma(fields[3]);
    if (lemma.empty()) throw ParseError("empty lemma", line_no, line);
    st.add(line_no, line, *cat, class_id, std::string(detail::trim(fields[2])), lemma);
  }
}

void parse_flat(std::istream& in, LoadState& st) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Category> cat;
  std::string class_id, class_name;
  while (detail::read_line(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      std::string value;
      if (read_pragma(view, kNamePragma, value) && !value.empty()) st.name = value;
      continue;
    }
    if (view.front() == '[') {
      if (view.back() != ']') throw ParseError("unterminated header", line_no, line);
      std::string_view inner = detail::trim(view.substr(1, view.size() - 2));
      std::size_t sp = inner.find_first_of(" \t");
      cat = parse_category(inner.substr(0, sp));
      if (!cat) throw ParseError("unknown category", line_no, line);
      if (sp == std::string_view::npos) {
        class_id = std::string(kFlatClassPrefix) + std::string(to_string(*cat));
        class_name.clear();
      } else {
        std::string_view rest = detail::trim(inner.substr(sp));
        std::size_t sp2 = rest.find_first_of(" \t");
        class_id = std::string(rest.substr(0, sp2));
        class_name = sp2 == std::string_view::npos ? "" : std::string(detail::trim(rest.substr(sp2)));
      }
      continue;
    }
    if (!cat) throw ParseError("lemma before any category header", line_no, line);
    if (view.find('\t') != std::string_view::npos)
      throw ParseError("tab inside flat-list lemma", line_no, line);
    st.add(line_no, line, *cat, class_id, class_name, detail::normalize_lemma(view));
  }
}

}  // namespace

Lexicon load_lexicon(std::istream& in, LexiconFormat format, std::string default_name) {
  LoadState st;
  st.name = std::move(default_name);
  if (format == LexiconFormat::kNormalized)
    parse_normalized(in, st);
  else
    parse_flat(in, st);
  if (in.bad()) throw Error("read failure while loading lexicon '" + st.name + "'");
  if (st.entries.empty()) throw Error("empty lexicon");
  return Lexicon::build(std::move(st.name), st.class_names, std::move(st.entries));
}

Lexicon load_lexicon_file(const std::string& path, LexiconFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon file '" + path + "'");
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem.erase(0, slash + 1);
  if (auto dot = stem.find('.'); dot != std::string::npos && dot > 0) stem.erase(dot);
  try {
    return load_lexicon(in, format, stem);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.reason(), e.line(), e.content());
  }
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  out << "# Normalized lexicon: CATEGORY<TAB>class_id<TAB>class_name<TAB>lemma\n";
  out << kNamePragma << ' ' << lexicon.name() << '\n';
  std::vector<const VerbEntry*> rows;
  rows.reserve(lexicon.size());
  for (const auto& [key, e] : lexicon.entries()) rows.push_back(&e);
  std::stable_sort(rows.begin(), rows.end(), [](const VerbEntry* a, const VerbEntry* b) {
    if (a->class_id != b->class_id) return detail::class_id_less(a->class_id, b->class_id);
    return a->lemma < b->lemma;
  });
  for (const VerbEntry* e : rows) {
    const SemanticClass* cls = lexicon.find_class(e->class_id);
    for (Category c : e->categories.members())
      out << to_string(c) << '\t' << e->class_id << '\t' << cls->name << '\t' << e->lemma << '\n';
  }
}

std::string to_normalized_text(const Lexicon& lexicon) {
  std::ostringstream os;
  write_lexicon(os, lexicon);
  return os.str();
}

}  // namespace askframe
