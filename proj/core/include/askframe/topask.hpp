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

#include <askframe/detect.hpp>

#include <optional>
#include <string>
#include <vector>

namespace askframe {

struct ScoredEvent {
  AskFramingEvent event;
  double score = 0.0;
};

struct TopSelection {
  std::string message_id;
  std::optional<ScoredEvent> top_ask;
  std::optional<ScoredEvent> top_framing;
  // All events, best first under the selection order.
  std::vector<ScoredEvent> ranking;
};

// Filled optional slots plus confidence as a fractional tie-spreader.
double score(const AskFramingEvent& event) noexcept;

// Strict weak order used for selection: score, confidence, earlier clause,
// earlier token, then category and lemma so that no two distinct events tie.
bool ranks_before(const ScoredEvent& a, const ScoredEvent& b) noexcept;

// Events must share one message id (message_id of the result is taken from
// the first event; pass it explicitly for an empty list).
TopSelection select_top(const std::vector<AskFramingEvent>& events,
                        const std::string& message_id = {});

}  // namespace askframe
