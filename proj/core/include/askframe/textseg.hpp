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

#include <askframe/lexicon.hpp>
#include <askframe/morphvar.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace askframe {

enum class PosTag {
  kVerb, kNoun, kAdj, kAdv, kPron, kDet, kPrep, kNum,
  kUrl, kMoney, kPercent, kEmail, kPunct, kOther,
};
std::string_view to_string(PosTag p) noexcept;

enum class Mood { kImperative, kInterrogative, kDeclarative };
std::string_view to_string(Mood m) noexcept;

struct ContextFlags {
  bool negated = false;
  bool avoidance_scope = false;
  bool conditional = false;
  bool deadline = false;

  friend bool operator==(const ContextFlags&, const ContextFlags&) = default;
};

struct Token {
  std::string text;
  std::string lower;
  PosTag pos = PosTag::kOther;
  std::size_t begin = 0;  // offsets into Clause::text
  std::size_t end = 0;
  // Set by tag(): the token lies after a negator / inside an avoid-type scope.
  bool negation_scope = false;
  bool avoidance_scope = false;

  bool is_entity() const noexcept {
    return pos == PosTag::kUrl || pos == PosTag::kMoney || pos == PosTag::kPercent ||
           pos == PosTag::kEmail;
  }
  bool is_word() const noexcept;

  friend bool operator==(const Token&, const Token&) = default;
};

// Digits with separators shaped like a phone number ("555-0199").
bool is_phone_like(std::string_view text) noexcept;

struct Clause {
  std::string message_id;
  std::size_t ordinal = 0;
  std::string text;
  std::size_t offset = 0;  // start of text within the message
  std::vector<Token> tokens;
  Mood mood = Mood::kDeclarative;
  ContextFlags flags;
  // Right-hand side of an "or"/"and" split; the coordinator is tokens[0].
  bool coordinated = false;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Message {
  std::string message_id;
  std::string raw_text;
  std::vector<Clause> clauses;

  friend bool operator==(const Message&, const Message&) = default;
};

// Front end contract: segmentation is lexicon-independent; tagging sets POS
// refinements, mood, flags and token scopes.
class Analyzer {
 public:
  virtual ~Analyzer() = default;
  virtual std::string_view name() const = 0;
  virtual Message segment(std::string_view message_id, std::string_view raw_text) const = 0;
  virtual Clause tag(Clause clause, const Lexicon& lexicon, const VariantTable& variants) const = 0;

  Message analyze(std::string_view message_id, std::string_view raw_text, const Lexicon& lexicon,
                  const VariantTable& variants) const;
};

class RuleAnalyzer final : public Analyzer {
 public:
  std::string_view name() const override { return "rule"; }
  Message segment(std::string_view message_id, std::string_view raw_text) const override;
  Clause tag(Clause clause, const Lexicon& lexicon, const VariantTable& variants) const override;
};

const Analyzer& default_analyzer();

Message segment(std::string_view message_id, std::string_view raw_text);
Clause tag(Clause clause, const Lexicon& lexicon, const VariantTable& variants);

// Closed-class helpers shared with detection.
bool is_auxiliary(std::string_view lower) noexcept;
bool is_politeness_marker(std::string_view lower) noexcept;
bool is_negator(std::string_view lower) noexcept;
// Conjunctions and wh-words.
bool is_function_word(std::string_view lower) noexcept;
// Built-in lexicon-independent verb guess used for coordination splits.
bool looks_like_verb(std::string_view lower) noexcept;

}  // namespace askframe
