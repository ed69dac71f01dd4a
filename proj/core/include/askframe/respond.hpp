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

#include <askframe/topask.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace askframe {

enum class Band { kHigh, kMid, kLow };
std::string_view to_string(Band b) noexcept;

struct BandCuts {
  double high = 0.7;
  double mid = 0.4;
};
Band band_of(double confidence, const BandCuts& cuts = {}) noexcept;

enum class SlotName { kObject, kTarget, kContext };

// Template field for the ask or framing position.
struct CategoryPattern {
  enum class Mode { kAny, kPresent, kAbsent, kExact };
  Mode mode = Mode::kAny;
  Category category = Category::kPerform;

  bool matches(std::optional<Category> c) const noexcept;
  bool guarantees_presence() const noexcept {
    return mode == Mode::kPresent || mode == Mode::kExact;
  }
  friend bool operator==(const CategoryPattern&, const CategoryPattern&) = default;
};

struct ResponseTemplate {
  std::string id;
  CategoryPattern ask;
  CategoryPattern framing;
  std::optional<Band> band;  // nullopt matches any band
  std::vector<SlotName> required_slots;
  std::string text;

  bool is_universal() const noexcept;
};

struct ResponsePlan {
  std::string message_id;
  std::string template_id;
  std::string rendered_text;
  std::optional<Category> ask;
  std::optional<Category> framing;
  Band band = Band::kLow;
  double confidence = 0.0;
};

// Product of the confidences of the top ask and top framing that are present;
// 0 when neither is.
double joint_confidence(const TopSelection& selection) noexcept;

bool template_applies(const ResponseTemplate& t, const TopSelection& selection, Band band);

// Lines: id | ask | framing | band | required_slots | text. Throws ParseError
// for malformed lines and Error when the set is empty, lacks a universal
// fallback, or a placeholder is not guaranteed by the template's applicability.
std::vector<ResponseTemplate> load_templates(std::istream& in);
std::vector<ResponseTemplate> load_templates_file(const std::string& path);

// First applicable template wins. Throws Error if none applies (only possible
// with a template list that bypassed load_templates validation).
ResponsePlan generate_response(const TopSelection& selection,
                               const std::vector<ResponseTemplate>& templates,
                               const BandCuts& cuts = {});

}  // namespace askframe
