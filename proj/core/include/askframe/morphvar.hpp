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

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace askframe {

enum class WordClass { kNoun, kVerb, kAdj, kAdv };

char to_char(WordClass wc) noexcept;  // 'N', 'V', 'A', 'R'
std::optional<WordClass> parse_word_class(char c) noexcept;

struct VariantMember {
  std::string form;
  WordClass pos = WordClass::kNoun;

  friend bool operator==(const VariantMember&, const VariantMember&) = default;
};

// One cross-part-of-speech family (refer:V reference:N referral:N).
struct VariantCluster {
  std::size_t id = 0;
  std::vector<VariantMember> members;
  std::string canonical_verb;

  friend bool operator==(const VariantCluster&, const VariantCluster&) = default;
};

class VariantTable {
 public:
  VariantTable() = default;

  // Validates clusters (exactly one verb, lowercase forms, no (form, pos) in
  // two clusters) and reassigns ids to their position. Throws Error.
  static VariantTable build(std::vector<VariantCluster> clusters);

  // Copy with one more cluster appended; validation as in build().
  VariantTable with_cluster(VariantCluster cluster) const;

  const std::vector<VariantCluster>& clusters() const noexcept { return clusters_; }
  std::size_t size() const noexcept { return clusters_.size(); }
  bool empty() const noexcept { return clusters_.empty(); }

  // Cluster ids containing the form under any part of speech, ascending.
  const std::vector<std::size_t>& clusters_for(std::string_view form) const;
  bool contains(std::string_view form) const { return !clusters_for(form).empty(); }
  bool is_verb(std::string_view form) const;
  bool has_pos(std::string_view form, WordClass pos) const;

  friend bool operator==(const VariantTable& a, const VariantTable& b) {
    return a.clusters_ == b.clusters_;
  }

 private:
  std::vector<VariantCluster> clusters_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> form_index_;
};

enum class VariantSource {
  kTable,     // the form (or an inflection of it) is a cluster member
  kFallback,  // suffix-stripping guess, low confidence
};

struct Normalization {
  std::vector<std::string> lemmas;  // sorted, unique
  VariantSource source = VariantSource::kFallback;
  std::string matched_form;         // table member that matched; empty for fallback

  bool low_confidence() const noexcept { return source == VariantSource::kFallback; }
};

// Inflectional base candidates for a lowercase word, the word itself first:
// irregular past forms, then -s/-es/-ies, -ed/-d/-ied, doubled consonants,
// -ing/-ing+e. Deterministic and duplicate-free.
std::vector<std::string> inflection_candidates(std::string_view word);

// Single derivational guess ("-ing", "-ed", "-s", "-tion"->"-te"/"-t",
// "-ment"->""); nullopt when no rule applies.
std::optional<std::string> strip_suffix(std::string_view word);

// Candidate verb lemmas for a surface form. Table hits return the canonical
// verbs of every cluster holding the first inflection candidate found.
// Otherwise the fallback returns the stripped guess plus the form itself.
Normalization normalize(const VariantTable& table, std::string_view surface_form);

VariantTable load_variants(std::istream& in);
VariantTable load_variants_file(const std::string& path);
void write_variants(std::ostream& out, const VariantTable& table);

}  // namespace askframe
