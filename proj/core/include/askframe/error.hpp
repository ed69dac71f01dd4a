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
#include <stdexcept>
#include <string>

namespace askframe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input in one of the line-oriented file formats. Carries the
// 1-based line number and the offending line.
class ParseError : public Error {
 public:
  ParseError(const std::string& reason, std::size_t line, std::string content)
      : Error("line " + std::to_string(line) + ": " + reason + ": '" + content + "'"),
        reason_(reason),
        line_(line),
        content_(std::move(content)) {}

  const std::string& reason() const noexcept { return reason_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& content() const noexcept { return content_; }

 private:
  std::string reason_;
  std::size_t line_;
  std::string content_;
};

}  // namespace askframe
