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

#include "askframe/category.hpp"

#include <string>

namespace askframe {

std::string_view to_string(Category c) noexcept {
  switch (c) {
    case Category::kPerform: return "PERFORM";
    case Category::kGive: return "GIVE";
    case Category::kLose: return "LOSE";
    case Category::kGain: return "GAIN";
  }
  return "?";
}

std::string_view to_string(Kind k) noexcept {
  return k == Kind::kAsk ? "ask" : "framing";
}

std::optional<Category> parse_category(std::string_view token) noexcept {
  for (Category c : kAllCategories) {
    std::string_view name = to_string(c);
    if (token.size() != name.size()) continue;
    bool upper = true, lower = true;
    for (std::size_t i = 0; i < name.size(); ++i) {
      upper = upper && token[i] == name[i];
      lower = lower && token[i] == static_cast<char>(name[i] - 'A' + 'a');
    }
    if (upper || lower) return c;
  }
  return std::nullopt;
}

std::optional<Kind> parse_kind(std::string_view token) noexcept {
  if (token == "ask") return Kind::kAsk;
  if (token == "framing") return Kind::kFraming;
  return std::nullopt;
}

}  // namespace askframe
