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
#include <askframe/topask.hpp>

#include <algorithm>
#include <tuple>

namespace askframe {

double score(const AskFramingEvent& event) noexcept {
  return static_cast<double>(event.slots.filled()) + event.confidence;
}

bool ranks_before(const ScoredEvent& a, const ScoredEvent& b) noexcept {
  const AskFramingEvent& x = a.event;
  const AskFramingEvent& y = b.event;
  if (a.score != b.score) return a.score > b.score;
  if (x.confidence != y.confidence) return x.confidence > y.confidence;
  return std::tie(x.clause_ordinal, x.trigger.token_index, x.category, x.trigger.lemma,
                  x.trigger.class_id) < std::tie(y.clause_ordinal, y.trigger.token_index,
                                                 y.category, y.trigger.lemma, y.trigger.class_id);
}

TopSelection select_top(const std::vector<AskFramingEvent>& events, const std::string& message_id) {
  TopSelection sel;
  sel.message_id = message_id.empty() && !events.empty() ? events.front().message_id : message_id;
  sel.ranking.reserve(events.size());
  for (const AskFramingEvent& e : events) {
    if (e.message_id != sel.message_id)
      throw Error("select_top: events from messages '" + sel.message_id + "' and '" +
                  e.message_id + "'");
    sel.ranking.push_back({e, score(e)});
  }
  std::sort(sel.ranking.begin(), sel.ranking.end(), ranks_before);
  for (const ScoredEvent& s : sel.ranking) {
    if (s.event.kind() == Kind::kAsk && !sel.top_ask) sel.top_ask = s;
    if (s.event.kind() == Kind::kFraming && !sel.top_framing) sel.top_framing = s;
  }
  return sel;
}

}  // namespace askframe
