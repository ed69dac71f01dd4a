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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

// Internal string helpers shared by the line-oriented parsers.
namespace askframe::detail {

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
// Lowercases, trims and collapses internal whitespace runs to one space.
std::string normalize_lemma(std::string_view s);
bool is_normalized_lemma(std::string_view s);
// Dotted identifiers compare component-wise, numerically where both parts are numeric.
bool class_id_less(std::string_view a, std::string_view b);

struct ClassIdLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return class_id_less(a, b); }
};

// Reads one logical line, stripping a trailing CR. Returns false at EOF.
bool read_line(std::istream& in, std::string& line);

}  // namespace askframe::detail
