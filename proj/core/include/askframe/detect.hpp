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
#include <askframe/lexicon.hpp>
#include <askframe/morphvar.hpp>
#include <askframe/textseg.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace askframe {

enum class Provenance { kDirectVerb, kVariantMapped, kSuffixFallback };
std::string_view to_string(Provenance p) noexcept;
std::optional<Provenance> parse_provenance(std::string_view s) noexcept;

enum class ContextTag { kFinancial, kCredential, kLinkClick, kContact, kGeneric };
std::string_view to_string(ContextTag c) noexcept;
std::optional<ContextTag> parse_context(std::string_view s) noexcept;

struct ArgumentSlots {
  Category ask_type = Category::kPerform;
  std::optional<ContextTag> context;
  std::optional<std::string> target;
  std::optional<std::string> object;

  // Optional slots carrying information: non-generic context, target, object.
  std::size_t filled() const noexcept;

  friend bool operator==(const ArgumentSlots&, const ArgumentSlots&) = default;
};

struct Trigger {
  std::string surface;
  std::string lemma;
  std::string class_id;
  std::size_t token_index = 0;
  std::size_t token_count = 1;

  friend bool operator==(const Trigger&, const Trigger&) = default;
};

struct AskFramingEvent {
  std::string message_id;
  std::size_t clause_ordinal = 0;
  Category category = Category::kPerform;
  Trigger trigger;
  ArgumentSlots slots;
  double confidence = 0.0;
  Provenance provenance = Provenance::kDirectVerb;

  Kind kind() const noexcept { return kind_of(category); }

  friend bool operator==(const AskFramingEvent&, const AskFramingEvent&) = default;
};

struct DetectOptions {
  bool use_variants = true;
  // Apply variant mapping to framing categories as well as asks.
  bool variants_for_framings = true;
  bool use_suffix_fallback = true;
  double ambiguity_penalty = 0.5;
};

double base_confidence(Provenance p) noexcept;
// (1 + filled) / 4
double slot_fill(const ArgumentSlots& slots) noexcept;

// Which rule settled the category set: 1 imperative ask, 2 threat context,
// 3 participle framing, 4 "you" + benefit, 5 interrogative ask, 6 unresolved.
struct Disambiguation {
  CategorySet categories;
  int rule = 6;
};

Disambiguation disambiguate_at(std::string_view trigger_lemma, CategorySet candidates,
                               const Clause& clause, std::size_t token_index);
CategorySet disambiguate(std::string_view trigger_lemma, CategorySet candidates,
                         const Clause& clause, std::size_t token_index);

ArgumentSlots extract_arguments(std::size_t trigger_begin, std::size_t trigger_end,
                                const Clause& clause, Category ask_type);

// Clause must be tagged. Events are ordered by token position, then category.
std::vector<AskFramingEvent> detect_events(const Clause& clause, const Lexicon& lexicon,
                                           const VariantTable& variants,
                                           const DetectOptions& options = {});

}  // namespace askframe
