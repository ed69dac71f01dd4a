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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

namespace askframe {

// Asks elicit a behavior (PERFORM, GIVE); framings state the purported
// consequence of compliance or non-compliance (LOSE, GAIN).
enum class Category : std::uint8_t { kPerform = 0, kGive = 1, kLose = 2, kGain = 3 };
enum class Kind : std::uint8_t { kAsk = 0, kFraming = 1 };

inline constexpr std::array<Category, 4> kAllCategories = {
    Category::kPerform, Category::kGive, Category::kLose, Category::kGain};

constexpr Kind kind_of(Category c) noexcept {
  return (c == Category::kPerform || c == Category::kGive) ? Kind::kAsk : Kind::kFraming;
}

std::string_view to_string(Category c) noexcept;
std::string_view to_string(Kind k) noexcept;

// Accepts the canonical upper-case token ("PERFORM") or its lower-case form.
std::optional<Category> parse_category(std::string_view token) noexcept;
std::optional<Kind> parse_kind(std::string_view token) noexcept;

// Small value set over the four categories, iterated in enum order.
class CategorySet {
 public:
  constexpr CategorySet() noexcept = default;
  constexpr CategorySet(std::initializer_list<Category> cs) noexcept {
    for (Category c : cs) insert(c);
  }

  static constexpr CategorySet asks() noexcept { return {Category::kPerform, Category::kGive}; }
  static constexpr CategorySet framings() noexcept { return {Category::kLose, Category::kGain}; }
  static constexpr CategorySet of_kind(Kind k) noexcept {
    return k == Kind::kAsk ? asks() : framings();
  }

  constexpr void insert(Category c) noexcept { bits_ |= bit(c); }
  constexpr void erase(Category c) noexcept { bits_ &= static_cast<std::uint8_t>(~bit(c)); }
  constexpr bool contains(Category c) const noexcept { return (bits_ & bit(c)) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    std::size_t n = 0;
    for (Category c : kAllCategories) n += contains(c) ? 1 : 0;
    return n;
  }
  constexpr CategorySet operator&(CategorySet o) const noexcept { return from_bits(bits_ & o.bits_); }
  constexpr CategorySet operator|(CategorySet o) const noexcept { return from_bits(bits_ | o.bits_); }
  constexpr CategorySet without(CategorySet o) const noexcept {
    return from_bits(bits_ & static_cast<std::uint8_t>(~o.bits_));
  }
  constexpr bool is_subset_of(CategorySet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }

  std::vector<Category> members() const {
    std::vector<Category> out;
    for (Category c : kAllCategories)
      if (contains(c)) out.push_back(c);
    return out;
  }

  friend constexpr bool operator==(CategorySet, CategorySet) noexcept = default;

 private:
  static constexpr std::uint8_t bit(Category c) noexcept {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
  }
  static constexpr CategorySet from_bits(unsigned b) noexcept {
    CategorySet s;
    s.bits_ = static_cast<std::uint8_t>(b & 0x0f);
    return s;
  }
  std::uint8_t bits_ = 0;
};

}  // namespace askframe
